#include "ballmagic/ball.hpp"

#include <stdexcept>
#include <utility>

namespace ballmagic {

namespace {

void reject_palindrome(const DigitString& x, const char* who) {
  if (x.is_palindrome())
    throw std::domain_error(std::string(who) +
                            ": palindromic input gives B = 0, which is not a "
                            "magic number");
}

}  // namespace

BallResult ball_number(const DigitString& x) {
  reject_palindrome(x, "ball_number");
  DigitString rev = x.reversed();
  const bool swapped = x < rev;
  const DigitString& hi = swapped ? rev : x;
  const DigitString& lo = swapped ? x : rev;

  SubtractionResult sub = subtract_with_borrows(hi, lo);
  DigitString diff_rev = sub.difference.reversed();
  BigNat ball = sub.difference.value() + diff_rev.value();

  const CodeKind kind = hi.digit(hi.width() - 1) == hi.digit(0)
                            ? CodeKind::Extended
                            : CodeKind::Strict;
  Code code(std::move(sub.borrows.bits), kind);
  BigNat truncated = code.truncated().numeral_value();

  return BallResult{x,
                    std::move(rev),
                    std::move(sub.difference),
                    std::move(diff_rev),
                    std::move(ball),
                    std::move(code),
                    std::move(truncated),
                    swapped};
}

DerivedCode code_of(const DigitString& x) {
  reject_palindrome(x, "code_of");
  DigitString rev = x.reversed();
  const bool swapped = x < rev;
  const DigitString& hi = swapped ? rev : x;
  const DigitString& lo = swapped ? x : rev;

  SubtractionResult sub = subtract_with_borrows(hi, lo);
  const CodeKind kind = hi.digit(hi.width() - 1) == hi.digit(0)
                            ? CodeKind::Extended
                            : CodeKind::Strict;
  const bool sane = kind == CodeKind::Strict ? is_code(sub.borrows.bits)
                                             : is_extended_code(sub.borrows.bits);
  if (!sane)
    throw std::logic_error("code_of: derived bits fail their own predicate");
  return {Code(std::move(sub.borrows.bits), kind), swapped};
}

BallIdentityReport verify_ball_identity(const DigitString& x) {
  BallResult r = ball_number(x);
  BallIdentityReport report;
  report.ball_value = r.ball_value;
  report.truncated_value = r.truncated_value;
  report.is_multiple_of_99 = r.ball_value.mod_u32(99) == 0;
  report.equals_99_times_truncated =
      r.ball_value == BigNat(99) * r.truncated_value;
  report.truncated_divides_ball =
      !r.truncated_value.is_zero() &&
      (r.ball_value % r.truncated_value).is_zero();
  return report;
}

LiftReport lift_ball(const DigitString& x, std::uint8_t pad_digit) {
  if (pad_digit < 1 || pad_digit > 9)
    throw std::invalid_argument("lift_ball: pad digit must be 1..9");
  BallResult base = ball_number(x);

  std::vector<std::uint8_t> lifted_digits;
  lifted_digits.reserve(x.width() + 2);
  lifted_digits.push_back(pad_digit);
  lifted_digits.insert(lifted_digits.end(), x.digits().begin(),
                       x.digits().end());
  lifted_digits.push_back(pad_digit);
  DigitString lifted(std::move(lifted_digits));

  BallResult up = ball_number(lifted);

  std::vector<std::uint8_t> expected_bits;
  expected_bits.reserve(base.code.width() + 2);
  expected_bits.push_back(0);
  expected_bits.insert(expected_bits.end(), base.code.bits().begin(),
                       base.code.bits().end());
  expected_bits.push_back(0);

  const bool tenfold = up.ball_value == BigNat(10) * base.ball_value;
  const bool extended = up.code.bits() == expected_bits &&
                        up.code.kind() == CodeKind::Extended &&
                        is_extended_code(up.code.bits());
  return LiftReport{std::move(lifted), std::move(base.ball_value),
                    std::move(up.ball_value), tenfold, extended};
}

}  // namespace ballmagic
