#include "ballmagic/revdiv.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "ballmagic/digits.hpp"
#include "ballmagic/parallel.hpp"

namespace ballmagic {

namespace {

std::uint64_t pow10_u64(unsigned e) {
  std::uint64_t v = 1;
  while (e-- > 0) v *= 10;
  return v;
}

std::uint64_t reverse_u64(std::uint64_t x) {
  std::uint64_t r = 0;
  while (x != 0) {
    r = r * 10 + x % 10;
    x /= 10;
  }
  return r;
}

RevDivFamily classify_family(std::uint64_t value, unsigned digit_count) {
  const std::uint64_t nine = 11 * (pow10_u64(digit_count - 2) - 1);
  if (value == nine) return RevDivFamily::Nine;
  if (value == 2 * nine) return RevDivFamily::Four;
  return RevDivFamily::Other;
}

RevDivRecord make_record(std::uint64_t value, std::uint64_t rev, unsigned k,
                         unsigned digit_count) {
  return RevDivRecord{BigNat(value), BigNat(rev), k, digit_count,
                      classify_family(value, digit_count)};
}

// Units digits that can pair with a given leading digit d1: the reverse
// k*x ends in d1, so k*a0 = d1 (mod 10) for some k in 2..floor(9/d1), and
// a0 > d1 because the reverse must exceed x by a factor of at least two.
std::array<std::vector<unsigned>, 10> allowed_units_table() {
  std::array<std::vector<unsigned>, 10> table;
  for (unsigned d1 = 1; d1 <= 9; ++d1) {
    const unsigned k_max = 9 / d1;
    for (unsigned a0 = d1 + 1; a0 <= 9; ++a0)
      for (unsigned k = 2; k <= k_max; ++k)
        if (k * a0 % 10 == d1) {
          table[d1].push_back(a0);
          break;
        }
  }
  return table;
}

void check_digit_count(unsigned digit_count, bool allow_large) {
  if (digit_count < 2 || digit_count > kSearchHardMaxDigits)
    throw std::out_of_range("search_reverse_divisors: digit count must be in 2..12");
  if (digit_count > kSearchDefaultMaxDigits && !allow_large)
    throw std::out_of_range(
        "search_reverse_divisors: digit counts above 9 take a while; opt in "
        "with --allow-large");
}

}  // namespace

const char* to_string(RevDivFamily family) {
  switch (family) {
    case RevDivFamily::Nine: return "nine";
    case RevDivFamily::Four: return "four";
    case RevDivFamily::Other: return "other";
  }
  return "?";
}

std::optional<unsigned> reverse_quotient(const BigNat& n) {
  if (n.digit_count() < 2)
    throw std::domain_error("reverse_quotient: need at least two digits");
  if (is_decimal_palindrome(n))
    throw std::domain_error("reverse_quotient: palindromic input");
  auto [q, r] = BigNat::divmod(reversed_value(n), n);
  if (!r.is_zero() || !q.fits_u64()) return std::nullopt;
  const std::uint64_t k = q.to_u64();
  if (k < 2 || k > 9) return std::nullopt;
  return static_cast<unsigned>(k);
}

std::optional<unsigned> is_permultiple(const BigNat& a, const BigNat& b) {
  if (a.is_zero() || b.compare(a) <= 0) return std::nullopt;
  auto [q, r] = BigNat::divmod(b, a);
  if (!r.is_zero() || !q.fits_u64()) return std::nullopt;
  const std::uint64_t k = q.to_u64();
  if (k < 2) return std::nullopt;
  std::vector<std::uint8_t> da = a.digits(), db = b.digits();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return std::nullopt;
  return static_cast<unsigned>(k);
}

std::vector<RevDivRecord> search_reverse_divisors(unsigned digit_count,
                                                  const SearchOptions& options) {
  check_digit_count(digit_count, options.allow_large);

  const unsigned n = digit_count;
  const std::uint64_t block = pow10_u64(n - 1);
  const std::uint64_t mid_count = n >= 2 ? pow10_u64(n - 2) : 1;
  static const auto allowed = allowed_units_table();

  // k >= 2 caps the leading digit at 4; digit prefixes partition the work.
  struct Task {
    unsigned d1;
    std::uint64_t mid_begin, mid_end;
  };
  const unsigned workers = worker_count(options.threads);
  const std::uint64_t slices =
      std::min<std::uint64_t>(mid_count, workers > 1 ? workers * 4u : 1u);
  std::vector<Task> tasks;
  for (unsigned d1 = 1; d1 <= 4; ++d1) {
    if (allowed[d1].empty()) continue;
    for (std::uint64_t s = 0; s < slices; ++s) {
      const std::uint64_t begin = mid_count * s / slices;
      const std::uint64_t end = mid_count * (s + 1) / slices;
      if (begin < end) tasks.push_back({d1, begin, end});
    }
  }

  std::vector<std::vector<RevDivRecord>> found(tasks.size());
  run_tasks(tasks.size(), workers, [&](std::size_t t) {
    const Task& task = tasks[t];
    const std::uint64_t base0 = task.d1 * block;
    for (std::uint64_t mid = task.mid_begin; mid < task.mid_end; ++mid) {
      const std::uint64_t base = base0 + mid * 10;
      for (unsigned a0 : allowed[task.d1]) {
        const std::uint64_t x = base + a0;
        const std::uint64_t rev = reverse_u64(x);
        if (rev % x == 0) {
          const std::uint64_t k = rev / x;
          if (k >= 2 && k <= 9)
            found[t].push_back(make_record(x, rev, static_cast<unsigned>(k), n));
        }
      }
    }
  });

  std::vector<RevDivRecord> out;
  for (auto& part : found)
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  std::sort(out.begin(), out.end(),
            [](const RevDivRecord& a, const RevDivRecord& b) {
              return a.value < b.value;
            });
  return out;
}

std::vector<RevDivRecord> search_reverse_divisors_unpruned(
    unsigned digit_count) {
  if (digit_count < 2 || digit_count > 8)
    throw std::out_of_range(
        "search_reverse_divisors_unpruned: oracle is for 2..8 digits");
  std::vector<RevDivRecord> out;
  const std::uint64_t lo = pow10_u64(digit_count - 1);
  const std::uint64_t hi = pow10_u64(digit_count);
  for (std::uint64_t x = lo; x < hi; ++x) {
    // Reverse through the rendered string, independent of the fast path.
    std::string s = std::to_string(x);
    std::reverse(s.begin(), s.end());
    const std::uint64_t rev = std::stoull(s);
    for (unsigned k = 2; k <= 9; ++k)
      if (k * x == rev) out.push_back(make_record(x, rev, k, digit_count));
  }
  return out;
}

RevDivRecord closed_form(RevDivFamily family, unsigned n) {
  if (family == RevDivFamily::Other)
    throw std::invalid_argument("closed_form: pick the nine or four family");
  if (n < 4) throw std::out_of_range("closed_form: need n >= 4 digits");

  const BigNat nine = BigNat(11) * (BigNat::pow10(n - 2) - BigNat(1));
  const bool is_nine = family == RevDivFamily::Nine;
  const BigNat value = is_nine ? nine : BigNat(2) * nine;
  const unsigned k = is_nine ? 9 : 4;

  const std::string nines(n - 4, '9');
  const std::string pattern =
      (is_nine ? "10" : "21") + nines + (is_nine ? "89" : "78");
  const std::string reverse_pattern =
      (is_nine ? "98" : "87") + nines + (is_nine ? "01" : "12");

  const BigNat rev = reversed_value(value);
  if (value.to_decimal() != pattern)
    throw std::logic_error("closed_form: value does not match its digit pattern");
  if (!(rev == BigNat(k) * value))
    throw std::logic_error("closed_form: reverse is not k times the value");
  // The reverse keeps all n digits (it ends in 1 or 2), so rendering it
  // value-wise is the fixed-width reversal.
  if (rev.to_decimal() != reverse_pattern)
    throw std::logic_error("closed_form: reverse does not match its digit pattern");

  return RevDivRecord{value, rev, k, n, family};
}

MagicRevDivReport magic_reverse_divisor(unsigned n) {
  if (n < 2) throw std::out_of_range("magic_reverse_divisor: need n >= 2");
  MagicRevDivReport report;
  report.value = BigNat(11) * (BigNat::pow10(n) - BigNat(1));

  std::vector<std::uint8_t> bits(n + 1, 1);
  bits[n] = 0;
  report.all_ones_code_ok =
      is_code(bits) &&
      report.value == BigNat(99) * repunit(n) &&
      Code(bits, CodeKind::Strict).truncated().numeral_value() == repunit(n);

  const BigNat rev = reversed_value(report.value);
  report.sum_is_tenfold = report.value + rev == BigNat(10) * report.value;
  report.quotient = reverse_quotient(report.value);
  report.double_quotient = reverse_quotient(BigNat(2) * report.value);
  return report;
}

SumDecomposition sum_decomposition(unsigned n) {
  if (n < 2) throw std::out_of_range("sum_decomposition: need n >= 2");
  RepunitDecomposition parts = decompose_repunit_code(n);
  SumDecomposition out{BigNat(99) * parts.a.truncated().numeral_value(),
                       BigNat(99) * parts.c.truncated().numeral_value(),
                       BigNat(0), std::move(parts.a), std::move(parts.c)};
  out.total = out.b1 + out.b2;
  if (!(out.total == BigNat(99) * repunit(n)))
    throw std::logic_error("sum_decomposition: summands do not add up to D");
  return out;
}

Power2Divisors power2_magic_divisors(unsigned n) {
  if (n < 2) throw std::out_of_range("power2_magic_divisors: need n >= 2");
  Power2Divisors out;
  out.value = BigNat(11) * (BigNat::pow10(1u << n) - BigNat(1));
  out.verified = true;

  for (unsigned m = 0; m < n; ++m) {
    const unsigned e = 1u << m;
    const BigNat factor = BigNat(99) * (BigNat::pow10(e) + BigNat(1));
    // Magic because 1 0^(e-1) 1 0 is a strict code whose truncation reads
    // 10^e + 1.
    std::vector<std::uint8_t> bits(e + 2, 0);
    bits[0] = 1;
    bits[e] = 1;
    const bool magic =
        is_code(bits) && Code(bits, CodeKind::Strict).truncated().numeral_value() ==
                             BigNat::pow10(e) + BigNat(1);
    out.verified = out.verified && magic && (out.value % factor).is_zero();
    out.divisors.push_back(factor);
  }

  std::vector<std::uint8_t> all_ones((1u << n) + 1, 1);
  all_ones.back() = 0;
  out.verified = out.verified && is_code(all_ones);
  out.divisors.push_back(out.value);
  return out;
}

UzFamilyReport uz_family(unsigned n, unsigned seed) {
  if (n < 2) throw std::out_of_range("uz_family: need n >= 2");
  if (seed != 1089 && seed != 2178)
    throw std::invalid_argument("uz_family: seed must be 1089 or 2178");

  UzFamilyReport report;
  const BigNat uz = undulating(n);
  report.value = BigNat(seed) * uz;
  report.magic_factor = BigNat(11) * uz;

  std::vector<std::uint8_t> bits = report.magic_factor.digits();
  std::reverse(bits.begin(), bits.end());
  bool zero_one = true;
  for (std::uint8_t b : bits) zero_one = zero_one && b <= 1;
  bits.push_back(0);
  report.magic_factor_ok = zero_one && is_code(bits);
  report.is_magic = seed == 1089 && report.magic_factor_ok &&
                    report.value == BigNat(99) * report.magic_factor;
  if (!is_decimal_palindrome(report.value))
    report.quotient = reverse_quotient(report.value);
  return report;
}

}  // namespace ballmagic
