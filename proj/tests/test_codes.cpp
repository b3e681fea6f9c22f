#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ballmagic/ball.hpp"
#include "ballmagic/codes.hpp"
#include "ballmagic/digits.hpp"

using namespace ballmagic;

namespace {

std::vector<std::string> census_strings(unsigned width) {
  std::vector<std::string> out;
  for (const Code& code : enumerate_codes(width).codes)
    out.push_back(code.to_string());
  return out;
}

}  // namespace

TEST_CASE("strict-code predicate") {
  CHECK(is_code(bits_from_string("110100")));
  CHECK(is_code(bits_from_string("1010")));
  CHECK(is_code(bits_from_string("11110")));
  CHECK(is_code(bits_from_string("10")));
  CHECK_FALSE(is_code(bits_from_string("1000")));
  CHECK_FALSE(is_code(bits_from_string("01")));
  CHECK_FALSE(is_code(bits_from_string("11")));
  CHECK_THROWS_AS(is_code(bits_from_string("1")), std::invalid_argument);
  CHECK_THROWS_AS(bits_from_string("12"), std::invalid_argument);
}

TEST_CASE("extended-code predicate") {
  CHECK(is_extended_code(bits_from_string("1100")));
  CHECK(is_extended_code(bits_from_string("0100")));
  CHECK(is_extended_code(bits_from_string("001000")));
  CHECK(is_extended_code(bits_from_string("100")));
  // 0110 has no strict inner code followed by zero padding.
  CHECK_FALSE(is_extended_code(bits_from_string("0110")));
  CHECK_FALSE(is_extended_code(bits_from_string("0000")));
  CHECK_FALSE(is_extended_code(bits_from_string("10")));

  // Any strict code plus one trailing zero is extended.
  for (unsigned w = 2; w <= 10; ++w)
    for (const Code& code : enumerate_codes(w).codes) {
      std::vector<std::uint8_t> padded = code.bits();
      padded.push_back(0);
      CHECK(is_extended_code(padded));
      padded.insert(padded.begin(), 0);
      CHECK(is_extended_code(padded));
    }
}

TEST_CASE("enumeration matches the published small tables") {
  CHECK(census_strings(2) == std::vector<std::string>{"10"});
  CHECK(census_strings(3) == std::vector<std::string>{"110"});
  CHECK(census_strings(4) == std::vector<std::string>{"1010", "1100", "1110"});
  CHECK(census_strings(5) ==
        std::vector<std::string>{"10010", "11100", "11110"});
  CHECK(census_strings(6) ==
        std::vector<std::string>{"100010", "100110", "101010", "110100",
                                 "110110", "111000", "111100", "111110"});

  const unsigned expected[] = {1, 1, 3, 3, 8, 8};
  for (unsigned w = 2; w <= 7; ++w) {
    CodeCensus census = enumerate_codes(w);
    CHECK(census.count == expected[w - 2]);
    CHECK(census.count == census.codes.size());
  }
  CHECK_THROWS_AS(enumerate_codes(1), std::out_of_range);
  CHECK_THROWS_AS(enumerate_codes(25), std::out_of_range);
}

TEST_CASE("census is sorted by numeral and duplicate-free") {
  for (unsigned w : {4u, 6u, 9u, 12u}) {
    CodeCensus census = enumerate_codes(w);
    std::set<std::string> seen;
    std::string prev;
    for (const Code& code : census.codes) {
      const std::string s = code.to_string();
      CHECK(prev < s);
      prev = s;
      seen.insert(s);
    }
    CHECK(seen.size() == census.count);
  }
}

TEST_CASE("filter and constructive recursion agree") {
  for (unsigned w = 2; w <= 16; ++w) {
    CodeCensus census = enumerate_codes(w);
    auto recursive = enumerate_codes_recursive(w);
    REQUIRE(census.count == recursive.size());
    for (std::size_t i = 0; i < recursive.size(); ++i)
      CHECK(census.codes[i].bits() == recursive[i]);
  }
}

TEST_CASE("every strict code is some input's code; the numeral itself works") {
  // Reading the code as digits gives an input whose code is the code again,
  // so 99 * (truncated numeral) is attained as a Ball value at that width.
  for (unsigned w = 2; w <= 7; ++w)
    for (const Code& code : enumerate_codes(w).codes) {
      DigitString witness = DigitString::parse(code.to_string());
      BallResult b = ball_number(witness);
      CHECK(b.code.bits() == code.bits());
      CHECK(b.ball_value == BigNat(99) * code.truncated().numeral_value());
    }
}

TEST_CASE("numeral orientation puts z_0 first") {
  Code code(bits_from_string("110100"), CodeKind::Strict);
  CHECK(code.numeral_value() == BigNat(110100));
  CHECK(code.truncated().numeral_value() == BigNat(11010));
  CHECK(code.truncated().to_string() == "11010");
  CHECK_THROWS_AS(Code(bits_from_string("11"), CodeKind::Strict).truncated(),
                  std::logic_error);
}

TEST_CASE("repunit decomposition follows the worked example") {
  RepunitDecomposition d = decompose_repunit_code(4);
  CHECK(d.a.to_string() == "10010");
  CHECK(d.c.to_string() == "1100");
  CHECK(d.a.numeral_value() + d.c.numeral_value() == BigNat(11110));

  // The published alternative split of the same code also checks out:
  // 11110 = 11100 + 10, a code plus a code this time.
  CHECK(is_code(bits_from_string("11100")));
  CHECK(is_code(bits_from_string("10")));
  CHECK(BigNat(11100) + BigNat(10) == BigNat(11110));
}

TEST_CASE("repunit decomposition stays exact out to n = 20") {
  for (unsigned n = 2; n <= 20; ++n) {
    RepunitDecomposition d = decompose_repunit_code(n);
    CHECK(is_code(d.a.bits()));
    CHECK(is_extended_code(d.c.bits()));
    std::vector<std::uint8_t> all_ones(n + 1, 1);
    all_ones[n] = 0;
    CHECK(d.a.numeral_value() + d.c.numeral_value() ==
          Code(all_ones, CodeKind::Strict).numeral_value());
  }
  CHECK_THROWS_AS(decompose_repunit_code(1), std::out_of_range);
}

TEST_CASE("repunits and undulating numbers") {
  CHECK(repunit(1) == BigNat(1));
  CHECK(repunit(4) == BigNat(1111));
  CHECK(repunit(9) == BigNat(111111111));
  CHECK(BigNat(1001001) * BigNat(111) == repunit(9));
  CHECK_THROWS_AS(repunit(0), std::out_of_range);

  CHECK(undulating(2) == BigNat(10));
  CHECK(undulating(5) == BigNat(10101));
  CHECK(undulating(11) == BigNat::from_decimal("10101010101"));
  CHECK_THROWS_AS(undulating(0), std::out_of_range);

  // 9 R_n + 1 == 10^n pins the closed form.
  for (unsigned n = 1; n <= 40; ++n)
    CHECK(BigNat(9) * repunit(n) + BigNat(1) == BigNat::pow10(n));
}

TEST_CASE("generated families classify as claimed") {
  auto pp2 = classify_generated(GeneratorKind::OneZerosOneZero, 2);
  CHECK(pp2.claim_holds);
  CHECK(pp2.classification == CodeKind::Strict);
  CHECK(Code(pp2.bits, pp2.classification).to_string() == "10010");

  auto pru = classify_generated(GeneratorKind::AllOnesZero, 4);
  CHECK(pru.claim_holds);
  CHECK(Code(pru.bits, pru.classification).to_string() == "11110");

  auto uz2 = classify_generated(GeneratorKind::ElevenTimesUz, 2);
  CHECK(uz2.claim_holds);
  CHECK(uz2.classification == CodeKind::Strict);
  CHECK(Code(uz2.bits, uz2.classification).to_string() == "110");

  for (unsigned n = 1; n <= 24; ++n) {
    auto eleven = classify_generated(GeneratorKind::ElevenTimesUz, n);
    CHECK(eleven.claim_holds);
    CHECK(eleven.classification ==
          (n % 2 == 0 ? CodeKind::Strict : CodeKind::Truncated));
    auto uz = classify_generated(GeneratorKind::Uz, n);
    CHECK(uz.claim_holds);
    CHECK(uz.classification ==
          (n % 2 == 0 ? CodeKind::Strict : CodeKind::Truncated));
  }
  for (unsigned m = 0; m <= 24; ++m)
    CHECK(classify_generated(GeneratorKind::OneZerosOneZero, m).claim_holds);
  for (unsigned n = 1; n <= 24; ++n)
    CHECK(classify_generated(GeneratorKind::AllOnesZero, n).claim_holds);
}
