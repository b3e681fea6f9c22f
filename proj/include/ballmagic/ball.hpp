#pragma once

#include <cstdint>

#include "ballmagic/bignat.hpp"
#include "ballmagic/codes.hpp"
#include "ballmagic/digits.hpp"

namespace ballmagic {

/// Full trace of one reverse-subtract-add round at fixed width:
/// y = |x - x'|, B = y + y', plus the borrow code of the subtraction.
struct BallResult {
  DigitString input;
  DigitString input_reversed;
  DigitString difference;
  DigitString difference_reversed;
  BigNat ball_value;
  Code code;             // strict, or extended when the end digits match
  BigNat truncated_value;  // numeral of the code minus its final 0; B/99
  bool swapped = false;  // the reverse exceeded the input, operands flipped
};

/// Runs the pipeline on a non-palindromic input (palindromes would give
/// B = 0, which is not a magic number; they are rejected as a domain error).
BallResult ball_number(const DigitString& x);

struct DerivedCode {
  Code code;
  bool swapped = false;
};

/// The borrow code of x against its reverse, oriented so the subtraction
/// stays nonnegative. End digits unequal gives a strict code; equal end
/// digits give an extended code with matching zero padding on both sides.
DerivedCode code_of(const DigitString& x);

struct BallIdentityReport {
  BigNat ball_value;
  BigNat truncated_value;
  bool is_multiple_of_99 = false;
  bool equals_99_times_truncated = false;
  bool truncated_divides_ball = false;

  bool pass() const {
    return is_multiple_of_99 && equals_99_times_truncated &&
           truncated_divides_ball;
  }
};

/// Recomputes both sides of B = 99 * (truncated code numeral) and the
/// divisibility of B by the truncated numeral. The report carries pass/fail
/// rather than throwing.
BallIdentityReport verify_ball_identity(const DigitString& x);

struct LiftReport {
  DigitString lifted;
  BigNat base_ball;
  BigNat lifted_ball;
  bool tenfold = false;        // lifted B == 10 * base B
  bool extended_code = false;  // lifted code == 0 (base code) 0

  bool pass() const { return tenfold && extended_code; }
};

/// Pads the same nonzero digit onto both ends of x and checks that the Ball
/// value scales by exactly ten while the code gains a zero on each side.
LiftReport lift_ball(const DigitString& x, std::uint8_t pad_digit);

}  // namespace ballmagic
