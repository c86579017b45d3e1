#include <doctest.h>

#include "mahler/bernoulli.hpp"
#include "mahler/special.hpp"
#include "support/oracles.hpp"

using namespace mahler;
namespace mt = mahler::testing;

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rat(-1, 2));
  CHECK(bernoulli(2) == Rat(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(4) == Rat(-1, 30));
  CHECK(bernoulli(12) == Rat(-691, 2730));
  CHECK(bernoulli(30) == Rat(Int("8615841276005"), Int(14322)));
  CHECK(bernoulli_over_factorial(0) == 1);
  CHECK(bernoulli_over_factorial(1) == Rat(-1, 4));
  CHECK(bernoulli_over_factorial(2) == Rat(1, 36));
  CHECK(clausen_coefficient(1) == Rat(1, 72));
}

TEST_CASE("clausen special values") {
  PrecisionGuard guard(70);
  const Real pi = const_pi();
  BigReal zero = clausen(Real(0));
  CHECK(abs(zero.value) == 0);
  BigReal at_pi = clausen(pi);
  CHECK(abs(at_pi.value) < pow10(-60));  // odd symmetry around pi
  BigReal catalan = clausen(pi / 2);
  CHECK(abs(catalan.value - const_catalan()) < pow10(-60));
  // 2 pi periodicity and oddness
  BigReal a = clausen(Real(1) / 3);
  BigReal b = clausen(Real(1) / 3 + 2 * pi);
  CHECK(abs(a.value - b.value) < pow10(-60));
  BigReal c = clausen(-Real(1) / 3);
  CHECK(abs(a.value + c.value) < pow10(-60));
}

TEST_CASE("clausen against truncated sine series at low precision") {
  PrecisionGuard guard(40);
  // direct sum of sin(n t)/n^2 to n = 40000 bounds the tail by 1/n
  Real t = Real(7) / 10;
  Real direct = 0;
  for (int n = 40000; n >= 1; --n) direct += sin(n * t) / (Real(n) * n);
  BigReal ours = clausen(t);
  CHECK(abs(ours.value - direct) < Real(1) / 4000);
}

TEST_CASE("clausen duplication at random angles") {
  PrecisionGuard guard(60);
  const Real pi = const_pi();
  auto g = mt::rng(31337);
  std::uniform_int_distribution<long> num(1, 9999);
  for (int i = 0; i < 100; ++i) {
    Real theta = pi * num(g) / 10000;
    BigReal lhs = clausen(2 * theta);
    BigReal r1 = clausen(theta);
    BigReal r2 = clausen(pi - theta);
    Real rhs = 2 * r1.value - 2 * r2.value;
    CHECK(abs(lhs.value - rhs) < pow10(-(60 - 5)));
  }
}

TEST_CASE("dilogarithm and Bloch-Wigner") {
  PrecisionGuard guard(60);
  const Real pi = const_pi();
  SUBCASE("Li2(1) = pi^2/6") {
    Complex v = li2(Complex{Real(1), Real(0)});
    CHECK(abs(v.re - pi * pi / 6) < pow10(-55));
    CHECK(abs(v.im) == 0);
  }
  SUBCASE("Li2(-1) = -pi^2/12") {
    Complex v = li2(Complex{Real(-1), Real(0)});
    CHECK(abs(v.re + pi * pi / 12) < pow10(-55));
  }
  SUBCASE("D vanishes on the reals") {
    CHECK(bloch_wigner(Complex{Real(3) / 7, Real(0)}).value == 0);
    CHECK(bloch_wigner(Complex{Real(5), Real(0)}).value == 0);
  }
  SUBCASE("D(e^{i theta}) = Cl2(theta)") {
    for (int k : {1, 2, 3, 5, 9}) {
      Real theta = pi * k / 10;
      BigReal via_d = bloch_wigner(Complex{cos(theta), sin(theta)});
      BigReal via_cl = clausen(theta);
      CHECK(abs(via_d.value - via_cl.value) < pow10(-52));
    }
  }
  SUBCASE("conjugation antisymmetry at random points in the disk") {
    auto g = mt::rng(5150);
    std::uniform_int_distribution<long> c(-999, 999);
    int done = 0;
    while (done < 100) {
      Real re = Real(c(g)) / 1000, im = Real(c(g)) / 1000;
      if (re * re + im * im > 1 || im == 0) continue;
      Complex z{re, im};
      BigReal d1 = bloch_wigner(z);
      BigReal d2 = bloch_wigner(z.conj());
      CHECK(abs(d1.value + d2.value) < pow10(-52));
      ++done;
    }
  }
  SUBCASE("inversion antisymmetry") {
    Complex z{Real(5) / 4, Real(1) / 3};
    Real n = z.abs2();
    Complex inv{z.re / n, -z.im / n};
    CHECK(abs(bloch_wigner(z).value + bloch_wigner(inv).value) < pow10(-52));
  }
}
