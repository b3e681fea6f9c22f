#include "ballmagic/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ballmagic/ball.hpp"
#include "ballmagic/codes.hpp"
#include "ballmagic/digits.hpp"
#include "ballmagic/revdiv.hpp"
#include "ballmagic/squares.hpp"

namespace ballmagic {

namespace {

constexpr std::uint64_t kSweepSeed = 0xba11'c0de'2026ull;
constexpr unsigned kBallSweepCount = 100'000;

DigitString random_nonpalindrome(std::mt19937_64& rng, unsigned width) {
  std::uniform_int_distribution<int> digit(0, 9), lead(1, 9);
  for (;;) {
    std::vector<std::uint8_t> d(width);
    for (unsigned i = 0; i + 1 < width; ++i)
      d[i] = static_cast<std::uint8_t>(digit(rng));
    d[width - 1] = static_cast<std::uint8_t>(lead(rng));
    DigitString x(std::move(d));
    if (!x.is_palindrome()) return x;
  }
}

SuiteResult suite_ball99() {
  SuiteResult result{"ball99", {}};
  std::mt19937_64 rng(kSweepSeed);
  std::uniform_int_distribution<unsigned> width(2, 12);

  unsigned bad_multiple = 0, bad_identity = 0;
  for (unsigned i = 0; i < kBallSweepCount; ++i) {
    DigitString x = random_nonpalindrome(rng, width(rng));
    BallIdentityReport report = verify_ball_identity(x);
    if (!report.is_multiple_of_99) ++bad_multiple;
    if (!report.equals_99_times_truncated || !report.truncated_divides_ball)
      ++bad_identity;
  }
  std::ostringstream detail;
  detail << kBallSweepCount << " random non-palindromic inputs, widths 2..12";
  result.claims.push_back(
      {"B mod 99 == 0", bad_multiple == 0, detail.str()});
  result.claims.push_back(
      {"B == 99 * truncated code numeral, and the truncated code divides B",
       bad_identity == 0, detail.str()});
  return result;
}

// Borrow recursion applied directly to one eligible input, packed so that
// ascending mask means ascending code numeral.
std::uint32_t borrow_mask(const std::uint8_t* a, unsigned w) {
  std::uint32_t mask = 0;
  int z_prev = 0;
  for (unsigned i = 0; i < w; ++i) {
    const int d = int(a[i]) - int(a[w - 1 - i]) - z_prev;
    z_prev = d < 0 ? 1 : 0;
    mask |= static_cast<std::uint32_t>(z_prev) << (w - 1 - i);
  }
  return mask;
}

std::set<std::uint32_t> oracle_code_masks(unsigned w) {
  std::set<std::uint32_t> masks;
  std::uint64_t mid_count = 1;
  for (unsigned i = 0; i + 2 < w; ++i) mid_count *= 10;
  std::uint8_t a[16] = {0};
  for (unsigned hi = 1; hi <= 9; ++hi)
    for (unsigned lo = 0; lo < hi; ++lo) {
      a[w - 1] = static_cast<std::uint8_t>(hi);
      a[0] = static_cast<std::uint8_t>(lo);
      for (std::uint64_t mid = 0; mid < mid_count; ++mid) {
        std::uint64_t rest = mid;
        for (unsigned i = 1; i + 1 < w; ++i) {
          a[i] = static_cast<std::uint8_t>(rest % 10);
          rest /= 10;
        }
        masks.insert(borrow_mask(a, w));
      }
    }
  return masks;
}

std::uint32_t code_mask(const Code& code) {
  std::uint32_t mask = 0;
  const unsigned w = code.width();
  for (unsigned i = 0; i < w; ++i)
    mask |= static_cast<std::uint32_t>(code.bits()[i]) << (w - 1 - i);
  return mask;
}

SuiteResult suite_census() {
  SuiteResult result{"census", {}};
  const unsigned expected[] = {1, 1, 3, 3, 8, 8};

  bool counts_ok = true;
  bool oracle_ok = true;
  std::ostringstream counts_detail;
  for (unsigned w = 2; w <= 7; ++w) {
    CodeCensus census = enumerate_codes(w);
    counts_ok = counts_ok && census.count == expected[w - 2];
    counts_detail << (w > 2 ? ", " : "") << "w" << w << ":" << census.count;

    std::set<std::uint32_t> predicate_masks;
    for (const Code& code : census.codes) predicate_masks.insert(code_mask(code));
    oracle_ok = oracle_ok && predicate_masks == oracle_code_masks(w);
  }
  result.claims.push_back({"census counts for widths 2..7 are 1,1,3,3,8,8",
                           counts_ok, counts_detail.str()});
  result.claims.push_back(
      {"predicate-accepted strings equal the borrow-recursion codes of all "
       "eligible inputs, widths 2..7",
       oracle_ok, "exhaustive over inputs with leading digit > trailing"});

  bool strategies_agree = true;
  for (unsigned w = 2; w <= 14; ++w) {
    CodeCensus census = enumerate_codes(w);
    auto recursive = enumerate_codes_recursive(w);
    if (census.count != recursive.size()) {
      strategies_agree = false;
      break;
    }
    for (std::size_t i = 0; i < recursive.size(); ++i)
      strategies_agree =
          strategies_agree && census.codes[i].bits() == recursive[i];
  }
  result.claims.push_back({"filter and constructive enumeration agree",
                           strategies_agree, "widths 2..14"});

  bool middle_ok = true;
  for (unsigned w = 3; w <= 15; w += 2)
    for (const Code& code : enumerate_codes(w).codes) {
      const auto& z = code.bits();
      middle_ok = middle_ok && z[w / 2] == z[w / 2 - 1];
    }
  result.claims.push_back(
      {"odd-width codes satisfy the middle-pair equality", middle_ok,
       "widths 3..15"});

  // Larger widths recorded, not asserted: the pairwise-equal pattern and the
  // even-indexed Fibonacci values are observations here.
  std::ostringstream record;
  for (unsigned w = 8; w <= 14; ++w)
    record << (w > 8 ? ", " : "") << "w" << w << ":" << enumerate_codes(w).count;
  result.claims.push_back(
      {"larger-width counts (recorded only)", true, record.str()});
  return result;
}

SuiteResult suite_revdiv_complete(unsigned threads) {
  SuiteResult result{"revdiv-complete", {}};
  SearchOptions options;
  options.threads = threads;

  bool empty_ok = true;
  for (unsigned n = 2; n <= 3; ++n)
    empty_ok = empty_ok && search_reverse_divisors(n, options).empty();
  result.claims.push_back(
      {"no reverse divisors with 2 or 3 digits", empty_ok, "exhaustive scan"});

  bool short_complete = true;
  bool families_found = true;
  bool defining_ok = true;
  bool rigid_ok = true;
  std::ostringstream counts;
  std::ostringstream extras;
  for (unsigned n = 4; n <= 9; ++n) {
    auto found = search_reverse_divisors(n, options);
    const RevDivRecord nine = closed_form(RevDivFamily::Nine, n);
    const RevDivRecord four = closed_form(RevDivFamily::Four, n);

    bool has_nine = false, has_four = false;
    for (const RevDivRecord& r : found) {
      // Recompute the defining property from scratch for every hit.
      defining_ok = defining_ok &&
                    r.reverse_value == BigNat(r.quotient) * r.value &&
                    r.reverse_value == reversed_value(r.value) &&
                    !is_decimal_palindrome(r.value);
      rigid_ok = rigid_ok && (r.quotient == 4 || r.quotient == 9);
      if (r.value == nine.value && r.quotient == 9) has_nine = true;
      if (r.value == four.value && r.quotient == 4) has_four = true;
      if (!(r.value == nine.value) && !(r.value == four.value))
        extras << ' ' << r.value.to_decimal();
    }
    families_found = families_found && has_nine && has_four;
    if (n <= 7) short_complete = short_complete && found.size() == 2;
    counts << (n > 4 ? ", " : "") << n << ":" << found.size();
  }

  result.claims.push_back(
      {"every hit divides its reverse, quotient 4 or 9", defining_ok && rigid_ok,
       "recomputed with exact arithmetic"});
  result.claims.push_back(
      {"both closed-form values show up for 4..9 digits", families_found,
       counts.str()});
  result.claims.push_back(
      {"4..7 digit searches find exactly the two closed-form values",
       short_complete, "completeness holds up to 7 digits"});

  // The stated invariant extends the exactly-two claim through 9 digits.
  // Block concatenations such as 10891089 = 1089 * 10001 divide their
  // reverses too, so the scan finds four hits at 8 and 9 digits and this
  // claim stays red.
  const std::string extra_values = extras.str();
  result.claims.push_back(
      {"8..9 digit searches find ONLY the closed-form values (stated "
       "completeness)",
       extra_values.empty(),
       extra_values.empty() ? "" : "also found:" + extra_values});
  return result;
}

SuiteResult suite_decompose() {
  SuiteResult result{"decompose", {}};
  bool sums_ok = true, parts_ok = true, identities_ok = true;
  for (unsigned n = 2; n <= 20; ++n) {
    try {
      SumDecomposition d = sum_decomposition(n);
      sums_ok = sums_ok && d.total == BigNat(99) * repunit(n) &&
                d.b1 + d.b2 == d.total;
      parts_ok = parts_ok && is_code(d.a.bits()) && is_extended_code(d.c.bits());
    } catch (const std::exception&) {
      sums_ok = false;
    }
    identities_ok = identities_ok && magic_reverse_divisor(n).pass();
  }
  result.claims.push_back(
      {"sum decomposition is exact for n = 2..20", sums_ok, "B1 + B2 == 99 * R_n"});
  result.claims.push_back(
      {"decomposition parts are a strict code plus an extended code", parts_ok,
       "n = 2..20"});
  result.claims.push_back(
      {"D + D' == 10D, quotient(D) == 9, quotient(2D) == 4 for n = 2..20",
       identities_ok, "D = 99 * R_n"});
  return result;
}

SuiteResult suite_squares(unsigned threads) {
  SuiteResult result{"squares", {}};

  bool bracket_ok = true;
  {
    std::mt19937_64 rng(kSweepSeed ^ 0x5157);
    std::uniform_int_distribution<unsigned> len(1, 60);
    std::uniform_int_distribution<int> digit(0, 9), lead(1, 9);
    for (unsigned i = 0; i < 100'000 && bracket_ok; ++i) {
      const unsigned d = len(rng);
      std::string text(d, '0');
      text[0] = static_cast<char>('0' + lead(rng));
      for (unsigned j = 1; j < d; ++j)
        text[j] = static_cast<char>('0' + digit(rng));
      const BigNat v = BigNat::from_decimal(text);
      const SquareReport r = integer_sqrt(v);
      bracket_ok = r.root_sq <= v && v < r.next_sq &&
                   r.is_square == (r.root_sq == v);
    }
  }
  result.claims.push_back({"integer sqrt bracket holds on random values",
                           bracket_ok, "100000 values up to 10^60"});

  bool gcd_ok = true;
  for (unsigned m = 1; m <= 60 && gcd_ok; ++m)
    for (unsigned n = 1; n <= m; ++n) {
      try {
        gcd_ok = gcd_ok && repunit_gcd(m, n) == repunit(std::gcd(m, n));
      } catch (const std::exception&) {
        gcd_ok = false;
      }
    }
  result.claims.push_back(
      {"gcd(R_m, R_n) == R_gcd(m,n) on the full grid", gcd_ok, "1 <= n <= m <= 60"});

  result.claims.push_back({"10^n - 1 == 3 (mod 4) and 10^n - 1, R_n non-square",
                           check_nonsquare_families(200).all_pass, "n = 2..200"});

  // Every reverse divisor with at most 9 digits, straight from the search,
  // so the block concatenations at 8 and 9 digits are covered too.
  std::vector<BigNat> divisors;
  SearchOptions options;
  options.threads = threads;
  for (unsigned n = 4; n <= 9; ++n)
    for (const RevDivRecord& r : search_reverse_divisors(n, options))
      divisors.push_back(r.value);

  bool pairs_ok = true;
  for (std::size_t i = 0; i < divisors.size(); ++i)
    for (std::size_t j = i + 1; j < divisors.size(); ++j)
      pairs_ok = pairs_ok && revdiv_pair_report(divisors[i], divisors[j]).claim_ok;
  result.claims.push_back(
      {"products of distinct reverse divisors are never square", pairs_ok,
       "all pairs of search hits with 4..9 digits"});

  bool self_ok = true;
  for (const BigNat& d : divisors) self_ok = self_ok && revdiv_self_report(d).claim_ok;
  result.claims.push_back(
      {"every reverse divisor times its reverse is a square", self_ok,
       "all search hits with 4..9 digits"});

  result.claims.push_back({"repeated-digit numbers are never square",
                           check_repeated_digit_nonsquares(60).all_pass,
                           "lengths 2..60, digits 1..9"});
  return result;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{
      "ball99", "census", "revdiv-complete", "squares", "decompose", "all"};
  return names;
}

SuiteResult run_verify_suite(const std::string& name, unsigned threads) {
  if (name == "ball99") return suite_ball99();
  if (name == "census") return suite_census();
  if (name == "revdiv-complete") return suite_revdiv_complete(threads);
  if (name == "squares") return suite_squares(threads);
  if (name == "decompose") return suite_decompose();
  if (name == "all") {
    SuiteResult all{"all", {}};
    for (const char* sub :
         {"ball99", "census", "revdiv-complete", "squares", "decompose"}) {
      SuiteResult part = run_verify_suite(sub, threads);
      for (ClaimResult& claim : part.claims) {
        claim.name = part.suite + ": " + claim.name;
        all.claims.push_back(std::move(claim));
      }
    }
    return all;
  }
  throw std::invalid_argument("unknown verify suite: " + name);
}

}  // namespace ballmagic
