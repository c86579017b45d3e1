#include <doctest.h>

#include "mahler/quadfield.hpp"
#include "support/oracles.hpp"

using namespace mahler;
namespace mt = mahler::testing;

namespace {

ToricRoot root_at(const Rat& u0) {
  ToricRoot r;
  r.u0 = u0;
  r.u_lo = u0;
  r.u_hi = u0;
  r.mult_h = 1;
  r.kind = RootKind::TypeIIPlus;
  return r;
}

}  // namespace

TEST_CASE("fundamental_conductor") {
  CHECK(fundamental_conductor(Int(-43)) == 43);
  CHECK(fundamental_conductor(Int(-1)) == 4);
  CHECK(fundamental_conductor(Int(-5)) == 20);
  CHECK(fundamental_conductor(Int(-7)) == 7);
  CHECK_THROWS_AS(fundamental_conductor(Int(5)), std::invalid_argument);
  CHECK_THROWS_AS(fundamental_conductor(Int(-12)), std::invalid_argument);  // not squarefree
}

TEST_CASE("fundamental_conductor of a kernel is idempotent on its image") {
  for (long q = -50; q < 0; ++q) {
    Int k = signed_kernel(Rat(q));
    Int f = fundamental_conductor(k);
    // -f is a fundamental discriminant, and its kernel maps back to f
    CHECK(fundamental_conductor(signed_kernel(Rat(-f))) == f);
  }
}

TEST_CASE("eval_g_at_quadratic") {
  SUBCASE("constant g") {
    QuadElement e = eval_g_at_quadratic(IntPoly{-7}, Rat(1, 3));
    CHECK(e.A == -7);
    CHECK(e.B == 0);
    CHECK(e.d1 == 1);
  }
  SUBCASE("g = x at u0 = -3/2") {
    QuadElement e = eval_g_at_quadratic(IntPoly{0, 1}, Rat(-3, 2));
    CHECK(e.A == Rat(-3, 4));
    CHECK(e.B == Rat(1, 4));
    CHECK(e.d1 == -7);
  }
  SUBCASE("g = x^2 at u0 = 0 (alpha = i)") {
    QuadElement e = eval_g_at_quadratic(IntPoly{0, 0, 1}, Rat(0));
    CHECK(e.A == -1);
    CHECK(e.B == 0);
    CHECK(e.d1 == 1);
  }
}

TEST_CASE("multiquadratic_test") {
  SUBCASE("rational element") {
    MultiquadraticResult r = multiquadratic_test(QuadElement{Rat(-7), Rat(0), Int(1)});
    CHECK(r.ok);
    CHECK(*r.m1 == -7);
    CHECK(*r.m2 == -7);
  }
  SUBCASE("eighth root of unity: sqrt(i) in Q(sqrt2, i)") {
    MultiquadraticResult r = multiquadratic_test(QuadElement{Rat(0), Rat(1), Int(-1)});
    CHECK(r.ok);
    CHECK(*r.m1 == 2);
    CHECK(*r.m2 == -2);
  }
  SUBCASE("norm not a square") {
    MultiquadraticResult r = multiquadratic_test(QuadElement{Rat(1), Rat(1), Int(2)});
    CHECK(!r.ok);
  }
  SUBCASE("denesting identity (A+N)/2 * (A-N)/2 = B^2 d1 / 4") {
    auto g = mt::rng(512);
    std::uniform_int_distribution<long> small(-6, 6);
    int done = 0;
    while (done < 100) {
      Rat A(small(g)), B(small(g));
      long d = small(g);
      if (B == 0 || d == 0) continue;
      Int d1 = signed_kernel(Rat(d));
      QuadElement e{A, B, d1};
      MultiquadraticResult r = multiquadratic_test(e);
      ++done;
      if (!r.ok) continue;
      Rat norm = A * A - B * B * Rat(d1);
      Rat n2 = norm;  // must be a rational square; recover N from the kernels
      // verify via the returned generators: m1 m2 is d1 modulo squares
      CHECK(signed_kernel(Rat(*r.m1) * Rat(*r.m2)) == d1);
      (void)n2;
    }
  }
}

TEST_CASE("conductor_set") {
  SUBCASE("conductor 43 at alpha = 1 with g(1) = -172") {
    IntPoly g{-39, -94, -39};
    CHECK(g.eval(Int(1)) == -172);
    ConductorResult r = conductor_set(root_at(Rat(2)), g);
    CHECK(r.status == ConductorStatus::Ok);
    REQUIRE(r.conductors.size() == 1);
    CHECK(r.conductors[0] == 43);
  }
  SUBCASE("Ray: quadratic alpha with constant g = -7") {
    ConductorResult r = conductor_set(root_at(Rat(-3, 2)), IntPoly{-7});
    CHECK(r.status == ConductorStatus::Ok);
    REQUIRE(r.conductors.size() == 1);
    CHECK(r.conductors[0] == 7);
  }
  SUBCASE("real field only") {
    ConductorResult r = conductor_set(root_at(Rat(2)), IntPoly{9});
    CHECK(r.status == ConductorStatus::Ok);
    CHECK(r.conductors.empty());
  }
  SUBCASE("degree > 2 is unsupported") {
    ToricRoot r;
    r.u_factor = IntPoly{-1, -2, 0, 1};
    r.u_lo = Rat(1);
    r.u_hi = Rat(2);
    r.alpha_degree = 6;
    r.alpha_degree_exact = false;
    ConductorResult c = conductor_set(r, IntPoly{-7});
    CHECK(c.status == ConductorStatus::UnsupportedDegree);
  }
  SUBCASE("invariant under g -> g * k^2") {
    auto g = mt::rng(8181);
    std::uniform_int_distribution<long> small(-9, 9);
    int done = 0;
    while (done < 100) {
      std::vector<Int> c(4);
      for (auto& v : c) v = small(g);
      IntPoly gp{std::move(c)};
      if (gp.is_zero()) continue;
      Rat u0(small(g), 7);
      if (abs(u0) >= 2) continue;
      ToricRoot root = root_at(u0);
      QuadElement e = eval_g_at_quadratic(gp, u0);
      if (e.is_zero()) continue;
      long k = small(g);
      if (k == 0) continue;
      ConductorResult r1 = conductor_set(root, gp);
      ConductorResult r2 = conductor_set(root, gp * Int(k * k));
      CHECK(r1.status == r2.status);
      CHECK(r1.conductors == r2.conductors);
      ++done;
    }
  }
  SUBCASE("every conductor is a fundamental-discriminant conductor") {
    auto g = mt::rng(99991);
    std::uniform_int_distribution<long> small(-9, 9);
    int done = 0;
    while (done < 200) {
      std::vector<Int> c(3);
      for (auto& v : c) v = small(g);
      IntPoly gp{std::move(c)};
      if (gp.is_zero()) continue;
      Rat u0(small(g), 5);
      if (abs(u0) >= 2) continue;
      if (eval_g_at_quadratic(gp, u0).is_zero()) continue;
      ConductorResult r = conductor_set(root_at(u0), gp);
      ++done;
      if (r.status != ConductorStatus::Ok) continue;
      for (const Int& f : r.conductors) {
        Int mf = -f;
        Int rem = ((mf % 4) + 4) % 4;
        CHECK((rem == 0 || rem == 1));
        CHECK(fundamental_conductor(signed_kernel(Rat(mf))) == f);
      }
    }
  }
}
