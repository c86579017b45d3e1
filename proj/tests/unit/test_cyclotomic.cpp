#include <doctest.h>

#include <map>

#include "mahler/cyclotomic.hpp"

using namespace mahler;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == IntPoly{-1, 1});
  CHECK(cyclotomic(2) == IntPoly{1, 1});
  CHECK(cyclotomic(14) == IntPoly{1, -1, 1, -1, 1, -1, 1});
  CHECK(cyclotomic(12) == IntPoly{1, 0, -1, 0, 1});
  // prod over divisors recovers x^n - 1
  for (long n : {6L, 12L, 30L}) {
    IntPoly prod{1};
    for (long d : divisors(n)) prod = prod * cyclotomic(d);
    CHECK(prod == IntPoly::monomial(static_cast<int>(n), 1) - IntPoly::constant(1));
  }
}

TEST_CASE("euler phi and moebius") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(14) == 6);
  CHECK(euler_phi(30) == 8);
  CHECK(moebius_mu(1) == 1);
  CHECK(moebius_mu(6) == 1);
  CHECK(moebius_mu(30) == -1);
  CHECK(moebius_mu(12) == 0);
}

TEST_CASE("detect_cyclotomic_product examples") {
  SUBCASE("x * Phi_4") {
    auto r = detect_cyclotomic_product(IntPoly{0, 1, 0, 1});
    REQUIRE(r);
    CHECK(r->x_power == 1);
    REQUIRE(r->factors.size() == 1);
    CHECK(r->factors[0] == std::make_pair(4L, 1));
  }
  SUBCASE("conductor-43 a(x) = Phi_2^2 * Phi_14") {
    auto r = detect_cyclotomic_product(IntPoly{1, 1, 0, 0, 0, 0, 0, 1, 1});
    REQUIRE(r);
    CHECK(r->x_power == 0);
    REQUIRE(r->factors.size() == 2);
    CHECK(r->factors[0] == std::make_pair(2L, 2));
    CHECK(r->factors[1] == std::make_pair(14L, 1));
  }
  SUBCASE("root off the unit circle") { CHECK(!detect_cyclotomic_product(IntPoly{2, 0, 1})); }
  SUBCASE("non-monic") { CHECK(!detect_cyclotomic_product(IntPoly{1, 0, 2})); }
}

TEST_CASE("detect_cyclotomic_product recovers pair products") {
  for (long n1 = 1; n1 <= 30; ++n1) {
    for (long n2 = n1; n2 <= 30; ++n2) {
      for (int k = 0; k <= 3; ++k) {
        IntPoly p = cyclotomic(n1) * cyclotomic(n2) * IntPoly::monomial(k, 1);
        auto r = detect_cyclotomic_product(p);
        REQUIRE(r);
        CHECK(r->x_power == k);
        std::map<long, int> expect;
        expect[n1] += 1;
        expect[n2] += 1;
        std::map<long, int> got(r->factors.begin(), r->factors.end());
        CHECK(got == expect);
      }
    }
  }
}
