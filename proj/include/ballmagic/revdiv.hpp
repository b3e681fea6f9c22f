#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ballmagic/bignat.hpp"
#include "ballmagic/codes.hpp"

namespace ballmagic {

enum class RevDivFamily { Nine, Four, Other };

const char* to_string(RevDivFamily family);

/// A non-palindromic number whose reverse is an exact small multiple of it.
struct RevDivRecord {
  BigNat value;
  BigNat reverse_value;
  unsigned quotient = 0;  // 2..9
  unsigned digit_count = 0;
  RevDivFamily family = RevDivFamily::Other;
};

/// The k in reverse(n) = k * n when one exists (there is at most one).
/// Domain error for palindromes and single-digit values.
std::optional<unsigned> reverse_quotient(const BigNat& n);

/// The k >= 2 with b = k * a when the two share one digit multiset.
std::optional<unsigned> is_permultiple(const BigNat& a, const BigNat& b);

struct SearchOptions {
  bool allow_large = false;  // opt into digit counts 10..12
  unsigned threads = 0;      // 0 = pick automatically
};

inline constexpr unsigned kSearchDefaultMaxDigits = 9;
inline constexpr unsigned kSearchHardMaxDigits = 12;

/// Exhaustive scan for every reverse divisor with exactly `digit_count`
/// digits. Pruned by the leading-digit bound (floor(9/k)) and by units-digit
/// compatibility, partitioned by digit prefix across workers, merged and
/// sorted ascending.
std::vector<RevDivRecord> search_reverse_divisors(
    unsigned digit_count, const SearchOptions& options = {});

/// Test-scale oracle without any pruning; used to validate the pruned scan.
std::vector<RevDivRecord> search_reverse_divisors_unpruned(
    unsigned digit_count);

/// The two closed-form families: 11*(10^(n-2)-1), rendered 10 9...9 89 with
/// reverse quotient 9, and its double 21 9...9 78 with quotient 4. Digit
/// patterns and quotients are re-checked against the bignum rendering on
/// every call.
RevDivRecord closed_form(RevDivFamily family, unsigned n);

struct MagicRevDivReport {
  BigNat value;                 // D = 11 * (10^n - 1) = 99 * R_n
  bool all_ones_code_ok = false;   // 1^n 0 is a strict code, so D is magic
  bool sum_is_tenfold = false;     // D + reverse(D) == 10 * D
  std::optional<unsigned> quotient;         // expect 9
  std::optional<unsigned> double_quotient;  // of 2D, expect 4

  bool pass() const {
    return all_ones_code_ok && sum_is_tenfold && quotient == 9 &&
           double_quotient == 4;
  }
};

/// The numbers that are magic and reverse divisors at once, with all the
/// identities that make them so.
MagicRevDivReport magic_reverse_divisor(unsigned n);

struct SumDecomposition {
  BigNat b1;     // 99 * truncated numeral of the strict part
  BigNat b2;     // 99 * truncated numeral of the extended part
  BigNat total;  // b1 + b2 == 99 * R_n
  Code a;
  Code c;
};

/// Splits D = 99 * R_n into two magic summands via the all-ones code
/// decomposition.
SumDecomposition sum_decomposition(unsigned n);

struct Power2Divisors {
  BigNat value;  // D = 11 * (10^(2^n) - 1)
  std::vector<BigNat> divisors;  // 99*(10^(2^m)+1) for m < n, then D itself
  bool verified = false;         // every divisor divides D and is magic
};

/// The magic divisors of D = 11 * (10^(2^n) - 1) coming from the repeated
/// difference-of-squares factorization of 10^(2^n) - 1.
Power2Divisors power2_magic_divisors(unsigned n);

struct UzFamilyReport {
  BigNat value;              // seed * uz(n)
  BigNat magic_factor;       // 11 * uz(n), always a truncated-code numeral
  bool magic_factor_ok = false;
  bool is_magic = false;     // the value itself (seed 1089 only)
  std::optional<unsigned> quotient;  // set when the value is a reverse divisor
};

/// seed in {1089, 2178}: scales an undulating number and reports magic and
/// reverse-divisor status (odd n gives a reverse divisor, quotient 9 or 4).
UzFamilyReport uz_family(unsigned n, unsigned seed);

}  // namespace ballmagic
