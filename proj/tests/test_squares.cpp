#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "ballmagic/codes.hpp"
#include "ballmagic/revdiv.hpp"
#include "ballmagic/squares.hpp"

using namespace ballmagic;

TEST_CASE("integer square root on small values") {
  SquareReport sq = integer_sqrt(BigNat(1089));
  CHECK(sq.root == BigNat(33));
  CHECK(sq.is_square);

  SquareReport no = integer_sqrt(BigNat(999));
  CHECK(no.root == BigNat(31));
  CHECK(no.root_sq == BigNat(961));
  CHECK(no.next_sq == BigNat(1024));
  CHECK_FALSE(no.is_square);

  CHECK(integer_sqrt(BigNat(0)).root == BigNat(0));
  CHECK(integer_sqrt(BigNat(0)).is_square);
  CHECK(integer_sqrt(BigNat(1)).root == BigNat(1));
  CHECK(integer_sqrt(BigNat(2)).root == BigNat(1));
  CHECK(integer_sqrt(BigNat(3)).root == BigNat(1));
  CHECK(integer_sqrt(BigNat(4)).root == BigNat(2));
}

TEST_CASE("integer square root brackets random wide values") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<unsigned> len(1, 60);
  std::uniform_int_distribution<int> digit(0, 9), lead(1, 9);
  for (int i = 0; i < 5000; ++i) {
    const unsigned d = len(rng);
    std::string text(d, '0');
    text[0] = static_cast<char>('0' + lead(rng));
    for (unsigned j = 1; j < d; ++j)
      text[j] = static_cast<char>('0' + digit(rng));
    const BigNat v = BigNat::from_decimal(text);
    SquareReport r = integer_sqrt(v);
    CHECK(r.root_sq <= v);
    CHECK(v < r.next_sq);
  }
  // Exact squares land exactly.
  for (int i = 0; i < 500; ++i) {
    const BigNat root = BigNat(rng() >> 20);
    SquareReport r = integer_sqrt(root * root);
    CHECK(r.is_square);
    CHECK(r.root == root);
  }
}

TEST_CASE("all-nines and repunits are never squares") {
  NonSquareFamiliesReport r = check_nonsquare_families(200);
  CHECK(r.all_pass);
  CHECK(r.checked == 199);
  CHECK((BigNat::pow10(2) - BigNat(1)).mod_u32(4) == 3);
  CHECK_FALSE(integer_sqrt(repunit(5)).is_square);
  CHECK_THROWS_AS(check_nonsquare_families(1), std::out_of_range);
}

TEST_CASE("repunit gcd index law") {
  CHECK(repunit_gcd(6, 4) == BigNat(11));
  CHECK(repunit_gcd(7, 5) == BigNat(1));
  CHECK(repunit_gcd(9, 9) == repunit(9));
  CHECK(repunit_gcd(1, 60) == BigNat(1));
  for (unsigned m = 1; m <= 24; ++m)
    for (unsigned n = 1; n <= m; ++n)
      CHECK(repunit_gcd(m, n) == repunit(std::gcd(m, n)));
  CHECK_THROWS_AS(repunit_gcd(0, 3), std::out_of_range);
}

TEST_CASE("products of repunits and of all-nines pairs are not squares") {
  ProductSquareReport r = repunit_product_report(3, 2);
  CHECK(r.product == BigNat(1221));
  CHECK(r.claim_ok);
  for (unsigned m = 3; m <= 24; ++m)
    for (unsigned n = 2; n < m; ++n) {
      CHECK(repunit_product_report(m, n).claim_ok);
      CHECK(power_pair_report(m, n).claim_ok);
    }
  CHECK_THROWS_AS(repunit_product_report(2, 2), std::out_of_range);
}

TEST_CASE("reverse-divisor products") {
  ProductSquareReport pair = revdiv_pair_report(BigNat(1089), BigNat(2178));
  CHECK_FALSE(pair.square.is_square);
  CHECK(pair.claim_ok);
  CHECK_THROWS_AS(revdiv_pair_report(BigNat(1089), BigNat(1089)),
                  std::domain_error);

  ProductSquareReport self = revdiv_self_report(BigNat(1089));
  CHECK(self.product == BigNat(10673289));
  CHECK(self.square.is_square);
  CHECK(self.square.root == BigNat(3267));  // 33 * 99
  CHECK(self.claim_ok);

  for (unsigned n = 4; n <= 9; ++n)
    for (RevDivFamily family : {RevDivFamily::Nine, RevDivFamily::Four})
      CHECK(revdiv_self_report(closed_form(family, n).value).claim_ok);
}

TEST_CASE("the full stock of small reverse divisors certifies both ways") {
  // Search-found values, block concatenations included: distinct products
  // never square, self products always square (the quotient is 4 or 9,
  // itself a square, and D * D' = k * D^2).
  std::vector<BigNat> all;
  for (unsigned n = 4; n <= 9; ++n)
    for (const RevDivRecord& r : search_reverse_divisors(n))
      all.push_back(r.value);
  REQUIRE(all.size() == 16);
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(revdiv_self_report(all[i]).claim_ok);
    for (std::size_t j = i + 1; j < all.size(); ++j)
      CHECK(revdiv_pair_report(all[i], all[j]).claim_ok);
  }
}

TEST_CASE("repeated-digit numbers are never squares") {
  RepeatedDigitReport r = check_repeated_digit_nonsquares(60);
  CHECK(r.all_pass);
  CHECK(r.checked == 59 * 9);
}
