#include "ballmagic/bignat.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace ballmagic {

namespace {
constexpr std::uint32_t kBase = 1'000'000'000;
constexpr unsigned kBaseDigits = 9;
}  // namespace

BigNat::BigNat(std::uint64_t value) {
  do {
    limbs_.push_back(static_cast<std::uint32_t>(value % kBase));
    value /= kBase;
  } while (value != 0);
}

void BigNat::trim() {
  while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

BigNat BigNat::from_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("BigNat: empty decimal string");
  for (char c : text)
    if (c < '0' || c > '9')
      throw std::invalid_argument("BigNat: non-digit in decimal string");
  BigNat out;
  out.limbs_.clear();
  for (std::size_t end = text.size(); end > 0;) {
    std::size_t begin = end >= kBaseDigits ? end - kBaseDigits : 0;
    std::uint32_t limb = 0;
    for (std::size_t i = begin; i < end; ++i)
      limb = limb * 10 + static_cast<std::uint32_t>(text[i] - '0');
    out.limbs_.push_back(limb);
    end = begin;
  }
  out.trim();
  return out;
}

BigNat BigNat::from_digits(const std::vector<std::uint8_t>& units_first) {
  BigNat out;
  if (units_first.empty()) return out;
  out.limbs_.assign(units_first.size() / kBaseDigits + 1, 0);
  for (std::size_t i = 0; i < units_first.size(); ++i) {
    if (units_first[i] > 9)
      throw std::invalid_argument("BigNat: digit out of range");
    std::uint32_t place = 1;
    for (unsigned p = 0; p < i % kBaseDigits; ++p) place *= 10;
    out.limbs_[i / kBaseDigits] += units_first[i] * place;
  }
  out.trim();
  return out;
}

BigNat BigNat::pow10(unsigned exponent) {
  BigNat out;
  out.limbs_.assign(exponent / kBaseDigits + 1, 0);
  std::uint32_t top = 1;
  for (unsigned p = 0; p < exponent % kBaseDigits; ++p) top *= 10;
  out.limbs_.back() = top;
  return out;
}

std::string BigNat::to_decimal() const {
  char buf[16];
  std::string out;
  std::snprintf(buf, sizeof buf, "%u", limbs_.back());
  out = buf;
  for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
    std::snprintf(buf, sizeof buf, "%09u", limbs_[i]);
    out += buf;
  }
  return out;
}

std::vector<std::uint8_t> BigNat::digits() const {
  std::vector<std::uint8_t> out;
  out.reserve(limbs_.size() * kBaseDigits);
  for (std::uint32_t limb : limbs_) {
    for (unsigned p = 0; p < kBaseDigits; ++p) {
      out.push_back(static_cast<std::uint8_t>(limb % 10));
      limb /= 10;
    }
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

std::size_t BigNat::digit_count() const {
  std::uint32_t top = limbs_.back();
  std::size_t n = 1;
  while (top >= 10) {
    top /= 10;
    ++n;
  }
  return n + (limbs_.size() - 1) * kBaseDigits;
}

bool BigNat::fits_u64() const {
  // 2^64-1 has 20 decimal digits; three limbs can hold up to 10^27-1.
  if (limbs_.size() > 3) return false;
  if (limbs_.size() < 3) return true;
  constexpr std::uint64_t kTopMax = UINT64_MAX / kBase / kBase;  // 18
  if (limbs_[2] > kTopMax) return false;
  if (limbs_[2] < kTopMax) return true;
  std::uint64_t rest = UINT64_MAX - std::uint64_t(kTopMax) * kBase * kBase;
  return std::uint64_t(limbs_[1]) * kBase + limbs_[0] <= rest;
}

std::uint64_t BigNat::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("BigNat: value exceeds 64 bits");
  std::uint64_t v = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
  return v;
}

int BigNat::compare(const BigNat& rhs) const {
  if (limbs_.size() != rhs.limbs_.size())
    return limbs_.size() < rhs.limbs_.size() ? -1 : 1;
  for (std::size_t i = limbs_.size(); i-- > 0;)
    if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] < rhs.limbs_[i] ? -1 : 1;
  return 0;
}

std::strong_ordering BigNat::operator<=>(const BigNat& rhs) const {
  int c = compare(rhs);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigNat BigNat::operator+(const BigNat& rhs) const {
  BigNat out;
  const std::size_t n = std::max(limbs_.size(), rhs.limbs_.size());
  out.limbs_.assign(n + 1, 0);
  std::uint32_t carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t sum = carry;
    if (i < limbs_.size()) sum += limbs_[i];
    if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
    carry = sum >= kBase;
    out.limbs_[i] = carry ? sum - kBase : sum;
  }
  out.limbs_[n] = carry;
  out.trim();
  return out;
}

BigNat BigNat::operator-(const BigNat& rhs) const {
  if (compare(rhs) < 0)
    throw std::underflow_error("BigNat: subtraction would go negative");
  BigNat out;
  out.limbs_.assign(limbs_.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t d = std::int64_t(limbs_[i]) - borrow -
                     (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
    borrow = d < 0;
    if (d < 0) d += kBase;
    out.limbs_[i] = static_cast<std::uint32_t>(d);
  }
  out.trim();
  return out;
}

BigNat BigNat::operator*(const BigNat& rhs) const {
  BigNat out;
  out.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    if (limbs_[i] == 0) continue;
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      std::uint64_t cur = std::uint64_t(limbs_[i]) * rhs.limbs_[j] +
                          out.limbs_[i + j] + carry;
      out.limbs_[i + j] = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    for (std::size_t j = i + rhs.limbs_.size(); carry != 0; ++j) {
      std::uint64_t cur = out.limbs_[j] + carry;
      out.limbs_[j] = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
  }
  out.trim();
  return out;
}

std::pair<BigNat, BigNat> BigNat::divmod(const BigNat& num, const BigNat& den) {
  if (den.is_zero()) throw std::domain_error("BigNat: division by zero");
  if (num.compare(den) < 0) return {BigNat(0), num};

  // Single-limb divisor: plain long division.
  if (den.limbs_.size() == 1) {
    const std::uint32_t d = den.limbs_[0];
    BigNat q;
    q.limbs_.assign(num.limbs_.size(), 0);
    std::uint64_t rem = 0;
    for (std::size_t i = num.limbs_.size(); i-- > 0;) {
      std::uint64_t cur = rem * kBase + num.limbs_[i];
      q.limbs_[i] = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    q.trim();
    return {q, BigNat(rem)};
  }

  // Knuth algorithm D in base 10^9. Normalize so the divisor's top limb is
  // at least kBase/2, which bounds the quotient-digit correction loop.
  const std::uint32_t d = kBase / (den.limbs_.back() + 1);
  BigNat u = num * BigNat(d);
  BigNat v = den * BigNat(d);
  const std::size_t n = v.limbs_.size();
  const std::size_t m = u.limbs_.size();
  u.limbs_.push_back(0);

  BigNat q;
  q.limbs_.assign(m - n + 1, 0);
  for (std::size_t j = m - n + 1; j-- > 0;) {
    std::uint64_t top = std::uint64_t(u.limbs_[j + n]) * kBase + u.limbs_[j + n - 1];
    std::uint64_t qhat = top / v.limbs_[n - 1];
    std::uint64_t rhat = top % v.limbs_[n - 1];
    if (qhat > kBase - 1) {
      rhat += (qhat - (kBase - 1)) * v.limbs_[n - 1];
      qhat = kBase - 1;
    }
    while (rhat < kBase &&
           qhat * v.limbs_[n - 2] > rhat * kBase + u.limbs_[j + n - 2]) {
      --qhat;
      rhat += v.limbs_[n - 1];
    }
    // Multiply-subtract qhat * v from u at offset j.
    std::uint64_t mul_carry = 0;
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t p = qhat * v.limbs_[i] + mul_carry;
      mul_carry = p / kBase;
      std::int64_t cur = std::int64_t(u.limbs_[j + i]) - borrow -
                         std::int64_t(p % kBase);
      borrow = cur < 0;
      if (cur < 0) cur += kBase;
      u.limbs_[j + i] = static_cast<std::uint32_t>(cur);
    }
    std::int64_t topcur = std::int64_t(u.limbs_[j + n]) - borrow -
                          std::int64_t(mul_carry);
    if (topcur < 0) {
      // qhat was one too large; add the divisor back.
      --qhat;
      std::uint32_t carry = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t sum = u.limbs_[j + i] + v.limbs_[i] + carry;
        carry = sum >= kBase;
        u.limbs_[j + i] = carry ? sum - kBase : sum;
      }
      topcur += carry;
    }
    u.limbs_[j + n] = static_cast<std::uint32_t>(topcur);
    q.limbs_[j] = static_cast<std::uint32_t>(qhat);
  }
  q.trim();

  u.limbs_.resize(n);
  u.trim();
  auto [rem, zero] = divmod(u, BigNat(d));
  return {q, rem};
}

BigNat BigNat::operator/(const BigNat& rhs) const {
  return divmod(*this, rhs).first;
}

BigNat BigNat::operator%(const BigNat& rhs) const {
  return divmod(*this, rhs).second;
}

std::uint32_t BigNat::mod_u32(std::uint32_t m) const {
  if (m == 0) throw std::domain_error("BigNat: modulo zero");
  std::uint64_t r = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;)
    r = (r * kBase + limbs_[i]) % m;
  return static_cast<std::uint32_t>(r);
}

BigNat gcd(BigNat a, BigNat b) {
  while (!b.is_zero()) {
    BigNat r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace ballmagic
