#include "ballmagic/squares.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

#include "ballmagic/codes.hpp"
#include "ballmagic/digits.hpp"

namespace ballmagic {

SquareReport integer_sqrt(const BigNat& n) {
  SquareReport report;
  report.value = n;

  BigNat root;
  if (n <= BigNat(1)) {
    root = n;
  } else {
    // Start at 10^ceil(d/2) > sqrt(n); Newton from above converges onto the
    // floor and stops at the first non-decrease.
    const unsigned half = static_cast<unsigned>((n.digit_count() + 1) / 2);
    BigNat x = BigNat::pow10(half);
    for (;;) {
      BigNat next = (x + n / x) / BigNat(2);
      if (!(next < x)) break;
      x = std::move(next);
    }
    root = std::move(x);
  }

  report.root_sq = root * root;
  report.next_sq = (root + BigNat(1)) * (root + BigNat(1));
  report.is_square = report.root_sq == n;
  report.root = std::move(root);
  if (!(report.root_sq <= n && n < report.next_sq))
    throw std::logic_error("integer_sqrt: bracket invariant violated");
  return report;
}

NonSquareFamiliesReport check_nonsquare_families(unsigned n_max) {
  if (n_max < 2)
    throw std::out_of_range("check_nonsquare_families: need n_max >= 2");
  NonSquareFamiliesReport report;
  report.n_max = n_max;
  report.all_pass = true;
  for (unsigned n = 2; n <= n_max; ++n) {
    const BigNat nines = BigNat::pow10(n) - BigNat(1);
    const bool residue = nines.mod_u32(4) == 3;
    const bool nines_nonsquare = !integer_sqrt(nines).is_square;
    const bool repunit_nonsquare = !integer_sqrt(repunit(n)).is_square;
    report.all_pass =
        report.all_pass && residue && nines_nonsquare && repunit_nonsquare;
    ++report.checked;
  }
  return report;
}

BigNat repunit_gcd(unsigned m, unsigned n) {
  if (m < 1 || n < 1) throw std::out_of_range("repunit_gcd: need m, n >= 1");

  const BigNat direct = gcd(repunit(m), repunit(n));

  // Euclid on the indices, with the splitting identity checked per step.
  unsigned a = m > n ? m : n;
  unsigned b = m > n ? n : m;
  while (b > 0) {
    if (!(repunit(a) == repunit(b) * BigNat::pow10(a - b) + (a - b > 0 ? repunit(a - b) : BigNat(0))))
      throw std::logic_error("repunit_gcd: splitting identity failed");
    const unsigned next = a - b;
    a = next > b ? next : b;
    b = next > b ? b : next;
  }

  if (a != std::gcd(m, n) || !(direct == repunit(a)))
    throw std::logic_error("repunit_gcd: index route disagrees with Euclid");
  return direct;
}

namespace {

ProductSquareReport report_for(BigNat product, bool expected_square) {
  ProductSquareReport report;
  report.product = std::move(product);
  report.square = integer_sqrt(report.product);
  report.expected_square = expected_square;
  report.claim_ok = report.square.is_square == expected_square;
  return report;
}

}  // namespace

ProductSquareReport repunit_product_report(unsigned m, unsigned n) {
  if (!(m > n && n > 1))
    throw std::out_of_range("repunit_product_report: need m > n > 1");
  return report_for(repunit(m) * repunit(n), false);
}

ProductSquareReport power_pair_report(unsigned m, unsigned n) {
  if (!(m > n && n > 1))
    throw std::out_of_range("power_pair_report: need m > n > 1");
  return report_for((BigNat::pow10(m) - BigNat(1)) * (BigNat::pow10(n) - BigNat(1)),
                    false);
}

ProductSquareReport revdiv_pair_report(const BigNat& d1, const BigNat& d2) {
  if (d1 == d2)
    throw std::domain_error("revdiv_pair_report: the divisors must differ");
  return report_for(d1 * d2, false);
}

ProductSquareReport revdiv_self_report(const BigNat& d) {
  return report_for(d * reversed_value(d), true);
}

RepeatedDigitReport check_repeated_digit_nonsquares(unsigned max_len) {
  if (max_len < 2)
    throw std::out_of_range("check_repeated_digit_nonsquares: need max_len >= 2");
  RepeatedDigitReport report;
  report.max_len = max_len;
  report.all_pass = true;
  for (unsigned len = 2; len <= max_len; ++len)
    for (unsigned digit = 1; digit <= 9; ++digit) {
      const BigNat v = BigNat(digit) * repunit(len);
      report.all_pass = report.all_pass && !integer_sqrt(v).is_square;
      ++report.checked;
    }
  return report;
}

}  // namespace ballmagic
