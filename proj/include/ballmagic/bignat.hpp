#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ballmagic {

/// Unsigned arbitrary-precision integer stored as base-10^9 limbs, least
/// significant limb first. The decimal limb base keeps digit extraction and
/// rendering exact and cheap; every quantity in this library stays at desk
/// scale (a couple hundred digits), so schoolbook algorithms are the right
/// tool.
class BigNat {
 public:
  BigNat() : limbs_{0} {}
  BigNat(std::uint64_t value);

  /// Parses a nonempty run of decimal digits. Leading zeros are legal and
  /// ignored in the value.
  static BigNat from_decimal(std::string_view text);
  /// Builds a value from base-10 digits given units first.
  static BigNat from_digits(const std::vector<std::uint8_t>& units_first);
  static BigNat pow10(unsigned exponent);

  std::string to_decimal() const;
  /// Base-10 digits, units first; no leading zeros except for the value 0.
  std::vector<std::uint8_t> digits() const;
  std::size_t digit_count() const;

  bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }
  bool fits_u64() const;
  std::uint64_t to_u64() const;  // throws std::overflow_error if too large

  int compare(const BigNat& rhs) const;
  bool operator==(const BigNat& rhs) const { return limbs_ == rhs.limbs_; }
  std::strong_ordering operator<=>(const BigNat& rhs) const;

  BigNat operator+(const BigNat& rhs) const;
  BigNat operator-(const BigNat& rhs) const;  // throws if rhs > *this
  BigNat operator*(const BigNat& rhs) const;
  BigNat operator/(const BigNat& rhs) const;
  BigNat operator%(const BigNat& rhs) const;

  BigNat& operator+=(const BigNat& rhs) { return *this = *this + rhs; }
  BigNat& operator-=(const BigNat& rhs) { return *this = *this - rhs; }
  BigNat& operator*=(const BigNat& rhs) { return *this = *this * rhs; }

  static std::pair<BigNat, BigNat> divmod(const BigNat& num, const BigNat& den);

  /// Remainder modulo a small value, one pass over the limbs.
  std::uint32_t mod_u32(std::uint32_t m) const;

 private:
  static constexpr std::uint32_t kBase = 1'000'000'000;
  static constexpr unsigned kBaseDigits = 9;

  void trim();

  std::vector<std::uint32_t> limbs_;
};

BigNat gcd(BigNat a, BigNat b);

}  // namespace ballmagic
