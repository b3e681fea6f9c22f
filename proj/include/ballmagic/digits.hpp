#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ballmagic/bignat.hpp"

namespace ballmagic {

/// Fixed-width base-10 digit string. Index 0 is the units column; rendering
/// prints the most significant digit first. Width is significant: leading
/// zeros are legal and are preserved through every operation, because the
/// whole reverse/subtract/add pipeline is defined at fixed width.
class DigitString {
 public:
  /// Digits given units first; each must be 0..9 and the sequence nonempty.
  explicit DigitString(std::vector<std::uint8_t> units_first);

  /// Parses text written most significant digit first ("0090" is width 4).
  static DigitString parse(std::string_view text);
  /// Zero-pads `value` at the most significant end to exactly `width` digits;
  /// range error when the value does not fit.
  static DigitString from_value(const BigNat& value, unsigned width);

  unsigned width() const { return static_cast<unsigned>(digits_.size()); }
  std::uint8_t digit(unsigned column) const { return digits_[column]; }
  const std::vector<std::uint8_t>& digits() const { return digits_; }

  DigitString reversed() const;
  bool is_palindrome() const;
  BigNat value() const;
  std::string to_string() const;

  bool operator==(const DigitString&) const = default;
  /// Orders by numeric value (leading zeros do not count).
  std::strong_ordering operator<=>(const DigitString& rhs) const;

 private:
  std::vector<std::uint8_t> digits_;
};

/// Borrow bits of a fixed-width subtraction: bits[i] = 1 means ten was
/// regrouped from column i+1 into column i (the z_i of the code recursion).
/// Rendering is the opposite of DigitString: a borrow string prints z_0, the
/// units-column bit, FIRST, because that is how code numerals are read.
struct BorrowRecord {
  std::vector<std::uint8_t> bits;

  std::string to_string() const;
  bool operator==(const BorrowRecord&) const = default;
};

struct SubtractionResult {
  DigitString difference;
  BorrowRecord borrows;
};

/// Column-by-column subtraction at fixed width, recording every borrow.
/// Requires equal widths (shape error) and value(x) >= value(y) (order
/// error): callers orient the operands first.
SubtractionResult subtract_with_borrows(const DigitString& x,
                                        const DigitString& y);

/// Value of the decimal-reversed rendering of n (leading zeros of the
/// reversal drop out of the value).
BigNat reversed_value(const BigNat& n);
bool is_decimal_palindrome(const BigNat& n);

}  // namespace ballmagic
