#include <doctest.h>

#include "mahler/cyclotomic.hpp"
#include "mahler/fixtures.hpp"
#include "mahler/real.hpp"
#include "mahler/special.hpp"
#include "mahler/torus.hpp"
#include "support/oracles.hpp"

using namespace mahler;
namespace mt = mahler::testing;

namespace {

IntPoly fixture_delta(const char* label) {
  const FixtureEntry& f = fixture(label);
  return discriminant(f.a, f.b);
}

const ToricRoot* find_u(const std::vector<ToricRoot>& v, const Rat& u0) {
  for (const auto& r : v)
    if (r.u0 && *r.u0 == u0) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("u_transform basics") {
  UTransform t1 = u_transform(IntPoly{1, 0, 1});
  CHECK(t1.t == IntPoly{0, 1});
  CHECK(t1.half_shift == 1);
  UTransform t2 = u_transform(IntPoly{1, 1, 1});
  CHECK(t2.t == IntPoly{1, 1});
  CHECK_THROWS_AS(u_transform(IntPoly{-1, 1}), std::invalid_argument);   // sign -1
  CHECK_THROWS_AS(u_transform(IntPoly{1, 1}), std::invalid_argument);    // odd shift
  CHECK_THROWS_AS(u_transform(IntPoly{1, 2, 2}), std::invalid_argument); // not reciprocal
}

TEST_CASE("transform identity at sampled angles") {
  // |e^{-im theta} p(e^{i theta}) - t(2 cos theta)| small at 64 samples
  PrecisionGuard guard(60);
  const Real pi = const_pi();
  auto check_poly = [&](const IntPoly& p) {
    UTransform t = u_transform(p);
    for (int k = 1; k <= 64; ++k) {
      Real theta = pi * k / 65;
      Complex z{cos(theta), sin(theta)};
      Complex val{Real(0), Real(0)};
      for (int i = p.degree(); i >= 0; --i) {
        val = val * z;
        val.re += Real(p[i]);
      }
      Complex rot{cos(t.half_shift * theta), -sin(t.half_shift * theta)};
      Complex lhs = val * rot;
      Real rhs = horner(t.t, 2 * cos(theta));
      CHECK(abs(lhs.re - rhs) < pow10(-52));
      CHECK(abs(lhs.im) < pow10(-52));
    }
  };
  check_poly(fixture_delta("T2-43"));
  check_poly(fixture_delta("W-3"));
  check_poly(cyclotomic(7) * cyclotomic(4).pow(2));
  auto g = mt::rng(99);
  int done = 0;
  while (done < 5) {
    IntPoly q = mt::random_poly(g, 4, 5);
    IntPoly p = q * q.reversed();  // even shift, sign +1 by construction
    if (p.is_zero()) continue;
    check_poly(p);
    ++done;
  }
}

TEST_CASE("isolate_toric_roots") {
  SUBCASE("conductor-43 delta contains u0 = 2") {
    auto roots = isolate_toric_roots(u_transform(fixture_delta("T2-43")));
    CHECK(find_u(roots, Rat(2)));
  }
  SUBCASE("no roots in [-2,2]") {
    UTransform t{IntPoly{}, IntPoly{-5, 0, 1}, 0};
    CHECK(isolate_toric_roots(t).empty());
  }
  SUBCASE("(3,35) delta contains u0 = 4/3") {
    auto roots = isolate_toric_roots(u_transform(fixture_delta("W-3-35")));
    const ToricRoot* r = find_u(roots, Rat(4, 3));
    REQUIRE(r);
    CHECK(r->alpha_degree == 2);
    CHECK(r->alpha_min_poly == IntPoly{3, -4, 3});
  }
  SUBCASE("intervals are disjoint, sorted, and within width") {
    auto roots = isolate_toric_roots(u_transform(fixture_delta("W-3")));
    for (size_t i = 0; i < roots.size(); ++i) {
      CHECK(roots[i].u_hi - roots[i].u_lo < Rat(Int(1), Int(1) << 64));
      if (i) CHECK(roots[i - 1].u_hi < roots[i].u_lo);
      // theta interval encloses acos(u/2)
      CHECK(roots[i].theta_lo <= roots[i].theta_hi);
    }
  }
}

TEST_CASE("classify_type on the worked examples") {
  SUBCASE("conductor 43: alpha = 1 has type II+") {
    UTransform t = u_transform(fixture_delta("T2-43"));
    auto roots = isolate_toric_roots(t);
    const ToricRoot* r = find_u(roots, Rat(2));
    REQUIRE(r);
    CHECK(classify_type(t, *r) == RootKind::TypeIIPlus);
  }
  SUBCASE("(3,35): the quadratic pair has type II-") {
    UTransform t = u_transform(fixture_delta("W-3-35"));
    auto roots = isolate_toric_roots(t);
    const ToricRoot* r = find_u(roots, Rat(4, 3));
    REQUIRE(r);
    CHECK(classify_type(t, *r) == RootKind::TypeIIMinus);
  }
  SUBCASE("conductor 3: only alpha = 1 is II+ among roots of h") {
    const FixtureEntry& f = fixture("W-3");
    DiscriminantSplit split = gh_split(discriminant(f.a, f.b));
    UTransform t = u_transform(split.delta);
    auto roots = isolate_toric_roots(t);
    classify_roots(t, roots);
    auto hr = toric_roots_of_h(split);
    CHECK(hr.size() == 3);  // -1, one record for the conjugate pair, +1
    int plus = 0;
    for (const auto& h : hr) {
      for (const auto& d : roots) {
        if (same_u_root(d, h) && d.kind == RootKind::TypeIIPlus) {
          ++plus;
          CHECK(d.u0 == Rat(2));
        }
      }
    }
    CHECK(plus == 1);
  }
}

TEST_CASE("classification is invariant under delta -> x^2 delta") {
  for (const char* label : {"T2-43", "W-3-35", "T1-7", "ZERO"}) {
    IntPoly d = fixture_delta(label);
    UTransform t1 = u_transform(d);
    UTransform t2 = u_transform(d * IntPoly{0, 0, 1});
    auto r1 = isolate_toric_roots(t1);
    auto r2 = isolate_toric_roots(t2);
    classify_roots(t1, r1);
    classify_roots(t2, r2);
    REQUIRE(r1.size() == r2.size());
    for (size_t i = 0; i < r1.size(); ++i) {
      CHECK(same_u_root(r1[i], r2[i]));
      CHECK(r1[i].kind == r2[i].kind);
      CHECK(r1[i].mult == r2[i].mult);
    }
  }
}

TEST_CASE("toric_roots_of_h") {
  SUBCASE("conductor 43: only alpha = 1") {
    DiscriminantSplit s = gh_split(fixture_delta("T2-43"));
    auto hr = toric_roots_of_h(s);
    REQUIRE(hr.size() == 1);
    CHECK(hr[0].u0 == Rat(2));
    CHECK(hr[0].mult_h == 1);
  }
  SUBCASE("Ray conductor 7: +-1 and u0 = -3/2, all simple") {
    DiscriminantSplit s = gh_split(fixture_delta("T1-7"));
    auto hr = toric_roots_of_h(s);
    REQUIRE(hr.size() == 3);
    CHECK(hr[0].u0 == Rat(-2));
    CHECK(hr[1].u0 == Rat(-3, 2));
    CHECK(hr[2].u0 == Rat(2));
    for (const auto& r : hr) CHECK(r.mult_h == 1);
    CHECK(hr[1].alpha_min_poly == IntPoly{2, 3, 2});
  }
  SUBCASE("h = (x+1)^2 reports multiplicity 2") {
    DiscriminantSplit s;
    s.h = IntPoly{1, 1} * IntPoly{1, 1};
    s.g = IntPoly{1};
    s.delta = s.g * s.h * s.h;
    auto hr = toric_roots_of_h(s);
    REQUIRE(hr.size() == 1);
    CHECK(hr[0].u0 == Rat(-2));
    CHECK(hr[0].mult_h == 2);
  }
}

TEST_CASE("circle zero count matches the argument principle on fixtures") {
  int checked = 0;
  for (const FixtureEntry& f : all_fixtures()) {
    if (f.form != FixtureForm::Quadratic) continue;
    if (f.a.degree() > 10) continue;  // keep the double-precision oracle honest
    IntPoly d = discriminant(f.a, f.b);
    if (d.is_zero()) continue;
    auto roots = isolate_toric_roots(u_transform(d));
    int total = 0;
    for (const auto& r : roots) total += r.at_endpoint() ? r.theta_mult : 2 * r.mult;
    CHECK(total == mt::circle_zero_count(d));
    ++checked;
  }
  CHECK(checked >= 14);
}
