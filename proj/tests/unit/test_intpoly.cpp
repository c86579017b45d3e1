#include <doctest.h>

#include "mahler/cyclotomic.hpp"
#include "mahler/factor.hpp"
#include "mahler/intpoly.hpp"
#include "support/oracles.hpp"

using namespace mahler;
namespace mt = mahler::testing;

TEST_CASE("intpoly basics") {
  IntPoly p{1, 2, 3};
  CHECK(p.degree() == 2);
  CHECK(p[0] == 1);
  CHECK(p[5] == 0);
  CHECK(p.eval(Int(2)) == 17);
  CHECK((p * p).degree() == 4);
  CHECK((p - p).is_zero());
  CHECK(IntPoly{0, 0, 0}.is_zero());
  CHECK(IntPoly{0, 0, 4, 0}.order_at_zero() == 2);
  CHECK(IntPoly{2, 4, 6}.content() == 2);
  CHECK(IntPoly{-2, -4}.primitive_part() == IntPoly{-1, -2});
}

TEST_CASE("parse and to_string round-trip") {
  for (const char* s : {"0", "1", "-1", "1,1", "2,2,-39,-16,110,-16,-39,2,2", "0,0,1"}) {
    auto p = IntPoly::parse(s);
    REQUIRE(p);
    CHECK(p->to_string() == s);
  }
  CHECK(!IntPoly::parse(""));
  CHECK(!IntPoly::parse("1,,2"));
  CHECK(!IntPoly::parse("1,x"));
  CHECK(IntPoly::parse("1, 2"));  // surrounding spaces tolerated
}

TEST_CASE("divide_exact") {
  IntPoly num{-1, 0, 0, 1};  // x^3 - 1
  IntPoly den{-1, 1};
  auto q = IntPoly::divide_exact(num, den);
  REQUIRE(q);
  CHECK(*q == IntPoly{1, 1, 1});
  CHECK(!IntPoly::divide_exact(IntPoly{1, 1, 1}, IntPoly{-1, 1}));
  CHECK(!IntPoly::divide_exact(IntPoly{1, 2}, IntPoly{0, 2}));  // 2x does not divide 2x+1
}

TEST_CASE("composed") {
  IntPoly p{0, 0, 1};  // x^2
  CHECK(p.composed(IntPoly{-2, 1}) == IntPoly{4, -4, 1});  // (x-2)^2
  IntPoly t{1, 2, 3};
  IntPoly shifted = t.composed(IntPoly{2, -1});  // t(2 - x)
  CHECK(shifted.eval(Int(0)) == t.eval(Int(2)));
  CHECK(shifted.eval(Int(5)) == t.eval(Int(-3)));
}

TEST_CASE("poly_gcd examples") {
  CHECK(poly_gcd(IntPoly{-1, 0, 1}, IntPoly{-1, 1}) == IntPoly{-1, 1});
  CHECK(poly_gcd(IntPoly{1, 2}, IntPoly{}) == IntPoly{1, 2});
  CHECK(poly_gcd(IntPoly{-3, -6}, IntPoly{}) == IntPoly{1, 2});  // primitive, positive lc
  IntPoly g{-39, -94, -39};
  IntPoly h{0, -2, 1, 11, -11, -1, 2};
  CHECK(poly_gcd(g, h).degree() == 0);
}

TEST_CASE("poly_gcd agrees with a rational-coefficient Euclidean oracle") {
  auto g = mt::rng(20250810);
  for (int trial = 0; trial < 500; ++trial) {
    IntPoly a = mt::random_poly(g, 12, 50);
    IntPoly b = mt::random_poly(g, 12, 50);
    IntPoly ours = poly_gcd(a, b);
    mt::RatPoly oracle = mt::rp_gcd(mt::rp_from(a), mt::rp_from(b));
    mt::RatPoly ours_r = mt::rp_from(ours);
    REQUIRE(!ours_r.empty());
    Rat lc = ours_r.back();
    for (auto& c : ours_r) c /= lc;
    CHECK(ours_r == oracle);
  }
}

TEST_CASE("discriminant") {
  CHECK(discriminant(IntPoly{1}, IntPoly{}) == IntPoly{-4});
  // the conductor-43 pair feeds the split checked below
  // BRV shape: a = pq, b = p^2 + q^2 gives exactly (q^2 - p^2)^2
  IntPoly p{0, 1}, q{1, 0, 1};
  IntPoly a = p * q;
  IntPoly b = p * p + q * q;
  IntPoly d = discriminant(a, b);
  IntPoly w = q * q - p * p;
  CHECK(d == w * w);
}

TEST_CASE("gh_split examples") {
  SUBCASE("perfect square") {
    DiscriminantSplit s = gh_split(IntPoly{0, 0, 1});
    CHECK(s.g == IntPoly{1});
    CHECK(s.h == IntPoly{0, 1});
  }
  SUBCASE("conductor-43 pair") {
    IntPoly a{1, 1, 0, 0, 0, 0, 0, 1, 1};
    IntPoly b{2, 2, -39, -16, 110, -16, -39, 2, 2};
    DiscriminantSplit s = gh_split(discriminant(a, b));
    CHECK(s.g == IntPoly{-39, -94, -39});
    IntPoly h = IntPoly{0, 1} * IntPoly{-1, 1} * IntPoly{2, 1, -10, 1, 2};
    CHECK(s.h == h);
  }
  SUBCASE("conductor-3 example carries the square content in h") {
    IntPoly a = cyclotomic(4).pow(4);
    IntPoly b{2, -16, -8, 16, 44, 16, -8, -16, 2};
    DiscriminantSplit s = gh_split(discriminant(a, b));
    CHECK(s.g == IntPoly{0, -1, -1, -1});  // -x(x^2+x+1)
    IntPoly h = (IntPoly{-1, 1} * IntPoly{1, 1} * IntPoly{1, -2, -2, -2, 1}) * Int(8);
    CHECK(s.h == h);
  }
}

TEST_CASE("gh_split round-trip on random products") {
  auto g = mt::rng(424243);
  std::uniform_int_distribution<int> mult(1, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    IntPoly f1 = mt::random_poly(g, 3, 4);
    IntPoly f2 = mt::random_poly(g, 2, 4);
    Int k = Int(mult(g)) * (trial % 2 ? 1 : -2);
    IntPoly delta = (f1 * f2.pow(static_cast<unsigned>(mult(g)))) * k;
    if (delta.is_zero()) continue;
    DiscriminantSplit s = gh_split(delta);
    CHECK(s.g * s.h * s.h == delta);
    CHECK(s.h.leading() > 0);
    CHECK(poly_gcd(s.g, s.g.derivative()).degree() == 0);
    Int kk, mm;
    squarefree_square_split(abs(s.g.content()), kk, mm);
    CHECK(mm == 1);  // squarefree integer content
  }
}

TEST_CASE("shifted_reciprocal_shift") {
  auto r1 = shifted_reciprocal_shift(IntPoly{1, 1});
  REQUIRE(r1);
  CHECK(r1->shift == 1);
  CHECK(r1->sign == 1);
  auto r2 = shifted_reciprocal_shift(IntPoly{-1, 1});
  REQUIRE(r2);
  CHECK(r2->shift == 1);
  CHECK(r2->sign == -1);
  auto r3 = shifted_reciprocal_shift(IntPoly{1, 1, 0, 0, 0, 0, 0, 1, 1});
  REQUIRE(r3);
  CHECK(r3->shift == 8);
  CHECK(r3->sign == 1);
  CHECK(!shifted_reciprocal_shift(IntPoly{1, 2}));
}

TEST_CASE("shift adds and sign multiplies over products") {
  auto g = mt::rng(77);
  int done = 0;
  while (done < 200) {
    IntPoly p = mt::random_poly(g, 4, 3);
    IntPoly q = mt::random_poly(g, 4, 3);
    auto sp = shifted_reciprocal_shift(p);
    auto sq = shifted_reciprocal_shift(q);
    if (!sp || !sq) continue;
    auto spq = shifted_reciprocal_shift(p * q);
    REQUIRE(spq);
    CHECK(spq->shift == sp->shift + sq->shift);
    CHECK(spq->sign == sp->sign * sq->sign);
    ++done;
  }
}

TEST_CASE("squarefree_kernel") {
  SquarefreeKernel k1 = squarefree_kernel(Rat(-172));
  CHECK(k1.sign == -1);
  CHECK(k1.kernel == 43);
  CHECK(k1.square == 2);
  SquarefreeKernel k2 = squarefree_kernel(Rat(9, 4));
  CHECK(k2.sign == 1);
  CHECK(k2.kernel == 1);
  CHECK(k2.square == Rat(3, 2));
  SquarefreeKernel k3 = squarefree_kernel(Rat(-5, 9));
  CHECK(k3.sign == -1);
  CHECK(k3.kernel == 5);
  CHECK(k3.square == Rat(1, 3));
  CHECK_THROWS_AS(squarefree_kernel(Rat(0)), std::invalid_argument);
}
