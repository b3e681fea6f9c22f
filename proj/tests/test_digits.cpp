#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ballmagic/digits.hpp"

using namespace ballmagic;

TEST_CASE("construction and rendering") {
  DigitString x = DigitString::from_value(BigNat(71), 2);
  CHECK(x.digits() == std::vector<std::uint8_t>{1, 7});
  CHECK(x.to_string() == "71");

  CHECK(DigitString::from_value(BigNat(90), 4).to_string() == "0090");
  CHECK(DigitString::from_value(BigNat(397862), 6).to_string() == "397862");
  CHECK_THROWS_AS(DigitString::from_value(BigNat(1000), 3), std::out_of_range);
  CHECK_THROWS_AS(DigitString::parse("12x"), std::invalid_argument);
  CHECK_THROWS_AS(DigitString::parse(""), std::invalid_argument);
}

TEST_CASE("reversal keeps the width") {
  CHECK(DigitString::parse("71").reversed().to_string() == "17");
  CHECK(DigitString::parse("397862").reversed().to_string() == "268793");
  CHECK(DigitString::parse("0090").reversed().to_string() == "0900");
}

TEST_CASE("value ignores leading zeros and round-trips") {
  CHECK(DigitString::parse("0090").value() == BigNat(90));
  CHECK(DigitString::parse("1089").value() == BigNat(1089));

  std::mt19937_64 rng(31);
  std::uniform_int_distribution<unsigned> width(1, 18);
  for (int i = 0; i < 2000; ++i) {
    const unsigned w = width(rng);
    std::uint64_t bound = 1;
    for (unsigned j = 0; j < w; ++j) bound *= 10;
    const std::uint64_t n = rng() % bound;
    DigitString x = DigitString::from_value(BigNat(n), w);
    CHECK(x.width() == w);
    CHECK(x.value().to_u64() == n);
    CHECK(x.reversed().reversed() == x);
  }
}

TEST_CASE("subtraction with borrows matches the worked examples") {
  auto r = subtract_with_borrows(DigitString::parse("397862"),
                                 DigitString::parse("268793"));
  CHECK(r.difference.to_string() == "129069");
  CHECK(r.borrows.bits == std::vector<std::uint8_t>{1, 1, 0, 1, 0, 0});
  CHECK(r.borrows.to_string() == "110100");

  auto s = subtract_with_borrows(DigitString::parse("843"),
                                 DigitString::parse("348"));
  CHECK(s.difference.to_string() == "495");
  CHECK(s.borrows.bits == std::vector<std::uint8_t>{1, 1, 0});

  auto zero = subtract_with_borrows(DigitString::parse("55"),
                                    DigitString::parse("55"));
  CHECK(zero.difference.to_string() == "00");
  CHECK(zero.borrows.bits == std::vector<std::uint8_t>{0, 0});
}

TEST_CASE("subtraction rejects bad shapes and misordered operands") {
  CHECK_THROWS_AS(subtract_with_borrows(DigitString::parse("12"),
                                        DigitString::parse("123")),
                  std::invalid_argument);
  CHECK_THROWS_AS(subtract_with_borrows(DigitString::parse("12"),
                                        DigitString::parse("21")),
                  std::invalid_argument);
}

TEST_CASE("borrow soundness and uniqueness on random pairs") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<unsigned> width(1, 12);
  std::uniform_int_distribution<int> digit(0, 9);
  for (int iter = 0; iter < 5000; ++iter) {
    const unsigned w = width(rng);
    std::vector<std::uint8_t> a(w), b(w);
    for (unsigned i = 0; i < w; ++i) {
      a[i] = static_cast<std::uint8_t>(digit(rng));
      b[i] = static_cast<std::uint8_t>(digit(rng));
    }
    DigitString x(a), y(b);
    if (x < y) std::swap(x, y);
    auto r = subtract_with_borrows(x, y);

    CHECK(r.difference.value() + y.value() == x.value());

    // Per-column identity d_i = x_i - y_i - z_{i-1} + 10 z_i, and the bits
    // are recoverable from it.
    int z_prev = 0;
    for (unsigned i = 0; i < w; ++i) {
      const int z = r.borrows.bits[i];
      CHECK(int(r.difference.digit(i)) ==
            int(x.digit(i)) - int(y.digit(i)) - z_prev + 10 * z);
      const int recovered =
          (int(r.difference.digit(i)) - int(x.digit(i)) + int(y.digit(i)) + z_prev) / 10;
      CHECK(recovered == z);
      z_prev = z;
    }
  }
}

TEST_CASE("value-level digit helpers") {
  CHECK(reversed_value(BigNat(1089)) == BigNat(9801));
  CHECK(reversed_value(BigNat(100)) == BigNat(1));
  CHECK(is_decimal_palindrome(BigNat(121)));
  CHECK(is_decimal_palindrome(BigNat(7)));
  CHECK_FALSE(is_decimal_palindrome(BigNat(120)));
}
