#pragma once

#include <vector>

#include "ballmagic/bignat.hpp"

namespace ballmagic {

/// Exact floor square root with its certifying bracket.
struct SquareReport {
  BigNat value;
  BigNat root;     // floor(sqrt(value))
  BigNat root_sq;  // root^2 <= value
  BigNat next_sq;  // (root+1)^2 > value
  bool is_square = false;
};

/// Integer-only Newton iteration from an upper bound; never touches
/// floating point.
SquareReport integer_sqrt(const BigNat& n);

struct NonSquareFamiliesReport {
  unsigned n_max = 0;
  unsigned checked = 0;
  bool all_pass = false;
};

/// For 2 <= n <= n_max: 10^n - 1 leaves remainder 3 mod 4, and neither
/// 10^n - 1 nor the repunit R_n is a square.
NonSquareFamiliesReport check_nonsquare_families(unsigned n_max);

/// gcd(R_m, R_n), computed two ways: plain Euclid on the bignums, and
/// Euclid on the indices with the splitting identity
/// R_a = R_b * 10^(a-b) + R_(a-b) checked exactly at every step. The two
/// routes must land on R_gcd(m,n).
BigNat repunit_gcd(unsigned m, unsigned n);

struct ProductSquareReport {
  BigNat product;
  SquareReport square;
  bool expected_square = false;
  bool claim_ok = false;
};

/// R_m * R_n for m > n > 1: never a square.
ProductSquareReport repunit_product_report(unsigned m, unsigned n);
/// (10^m - 1)(10^n - 1) for m > n > 1: never a square.
ProductSquareReport power_pair_report(unsigned m, unsigned n);
/// Product of two distinct reverse divisors: never a square.
ProductSquareReport revdiv_pair_report(const BigNat& d1, const BigNat& d2);
/// A reverse divisor times its own reverse: always a square.
ProductSquareReport revdiv_self_report(const BigNat& d);

struct RepeatedDigitReport {
  unsigned max_len = 0;
  unsigned checked = 0;
  bool all_pass = false;
};

/// No number made of one repeated digit (length >= 2) is a square; swept by
/// exact root extraction.
RepeatedDigitReport check_repeated_digit_nonsquares(unsigned max_len);

}  // namespace ballmagic
