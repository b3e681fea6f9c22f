#include "ballmagic/digits.hpp"

#include <algorithm>
#include <stdexcept>

namespace ballmagic {

DigitString::DigitString(std::vector<std::uint8_t> units_first)
    : digits_(std::move(units_first)) {
  if (digits_.empty())
    throw std::invalid_argument("DigitString: width must be at least 1");
  for (std::uint8_t d : digits_)
    if (d > 9) throw std::invalid_argument("DigitString: digit out of range");
}

DigitString DigitString::parse(std::string_view text) {
  if (text.empty())
    throw std::invalid_argument("DigitString: empty input");
  std::vector<std::uint8_t> units_first(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[text.size() - 1 - i];
    if (c < '0' || c > '9')
      throw std::invalid_argument("DigitString: non-digit in input");
    units_first[i] = static_cast<std::uint8_t>(c - '0');
  }
  return DigitString(std::move(units_first));
}

DigitString DigitString::from_value(const BigNat& value, unsigned width) {
  if (width == 0)
    throw std::out_of_range("DigitString: width must be at least 1");
  std::vector<std::uint8_t> units_first = value.digits();
  if (units_first.size() > width)
    throw std::out_of_range("DigitString: value does not fit in width");
  units_first.resize(width, 0);
  return DigitString(std::move(units_first));
}

DigitString DigitString::reversed() const {
  std::vector<std::uint8_t> rev(digits_.rbegin(), digits_.rend());
  return DigitString(std::move(rev));
}

bool DigitString::is_palindrome() const {
  for (std::size_t i = 0, j = digits_.size() - 1; i < j; ++i, --j)
    if (digits_[i] != digits_[j]) return false;
  return true;
}

BigNat DigitString::value() const { return BigNat::from_digits(digits_); }

std::string DigitString::to_string() const {
  std::string out(digits_.size(), '0');
  for (std::size_t i = 0; i < digits_.size(); ++i)
    out[i] = static_cast<char>('0' + digits_[digits_.size() - 1 - i]);
  return out;
}

std::strong_ordering DigitString::operator<=>(const DigitString& rhs) const {
  // Compare by value: skip leading zeros, then longer wins, then digits.
  std::size_t a = digits_.size(), b = rhs.digits_.size();
  while (a > 1 && digits_[a - 1] == 0) --a;
  while (b > 1 && rhs.digits_[b - 1] == 0) --b;
  if (a != b) return a <=> b;
  for (std::size_t i = a; i-- > 0;)
    if (digits_[i] != rhs.digits_[i]) return digits_[i] <=> rhs.digits_[i];
  return std::strong_ordering::equal;
}

std::string BorrowRecord::to_string() const {
  std::string out(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i)
    out[i] = static_cast<char>('0' + bits[i]);
  return out;
}

SubtractionResult subtract_with_borrows(const DigitString& x,
                                        const DigitString& y) {
  if (x.width() != y.width())
    throw std::invalid_argument(
        "subtract_with_borrows: operands must share one width");
  if (x < y)
    throw std::invalid_argument(
        "subtract_with_borrows: minuend is smaller; orient operands first");
  const unsigned w = x.width();
  std::vector<std::uint8_t> diff(w);
  std::vector<std::uint8_t> bits(w);
  int borrow = 0;
  for (unsigned i = 0; i < w; ++i) {
    int d = int(x.digit(i)) - int(y.digit(i)) - borrow;
    borrow = d < 0 ? 1 : 0;
    if (d < 0) d += 10;
    diff[i] = static_cast<std::uint8_t>(d);
    bits[i] = static_cast<std::uint8_t>(borrow);
  }
  // x >= y leaves no borrow out of the top column.
  return {DigitString(std::move(diff)), BorrowRecord{std::move(bits)}};
}

BigNat reversed_value(const BigNat& n) {
  std::vector<std::uint8_t> d = n.digits();
  std::reverse(d.begin(), d.end());
  return BigNat::from_digits(d);
}

bool is_decimal_palindrome(const BigNat& n) {
  std::vector<std::uint8_t> d = n.digits();
  for (std::size_t i = 0, j = d.size() - 1; i < j; ++i, --j)
    if (d[i] != d[j]) return false;
  return true;
}

}  // namespace ballmagic
