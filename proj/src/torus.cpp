#include "mahler/torus.hpp"

#include <algorithm>
#include <stdexcept>

#include "mahler/factor.hpp"
#include "mahler/real.hpp"

namespace mahler {

UTransform u_transform(const IntPoly& p) {
  auto rs = shifted_reciprocal_shift(p);
  if (!rs) throw std::invalid_argument("u_transform: input is not sign-reciprocal");
  if (rs->sign != 1) throw std::invalid_argument("u_transform: anti-reciprocal input");
  if (rs->shift % 2 != 0) throw std::invalid_argument("u_transform: odd shift");
  const int m = rs->shift / 2;

  // x^j + x^-j = D_j(u) with D_0 = 2, D_1 = u, D_{j+1} = u*D_j - D_{j-1}.
  IntPoly t = IntPoly::constant(p[m]);
  IntPoly d_prev{2};
  IntPoly d_cur{0, 1};
  const IntPoly u{0, 1};
  for (int j = 1; j <= p.degree() - m; ++j) {
    if (p[m + j] != 0) t = t + d_cur * p[m + j];
    IntPoly d_next = u * d_cur - d_prev;
    d_prev = std::move(d_cur);
    d_cur = std::move(d_next);
  }
  return UTransform{p, std::move(t), m};
}

namespace {

std::vector<IntPoly> sturm_chain(const IntPoly& f) {
  std::vector<IntPoly> chain;
  chain.push_back(f.primitive_part());
  IntPoly d = f.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d.primitive_part());
  while (chain.back().degree() > 0) {
    const IntPoly& a = chain[chain.size() - 2];
    const IntPoly& b = chain.back();
    IntPoly r = pseudo_remainder(a, b);
    // pseudo_remainder multiplies by lc(b)^(deg a - deg b + 1); undo a
    // negative multiplier so the chain keeps true Sturm signs.
    if (b.leading() < 0 && (a.degree() - b.degree() + 1) % 2 != 0) r = -r;
    r = (-r).primitive_part();
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

int variations_at(const std::vector<IntPoly>& chain, const Rat& x) {
  int count = 0, prev = 0;
  for (const auto& p : chain) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

// Number of roots in (lo, hi].
int count_roots(const std::vector<IntPoly>& chain, const Rat& lo, const Rat& hi) {
  return variations_at(chain, lo) - variations_at(chain, hi);
}

std::vector<Int> all_divisors(const Int& n) {
  std::vector<Int> divs{Int(1)};
  for (const auto& [p, e] : factorize(n)) {
    const size_t base = divs.size();
    Int pk = 1;
    for (int i = 0; i < e; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  return divs;
}

// All rational roots of a squarefree primitive polynomial inside [lo, hi],
// ascending.  The relevant range here is always a subset of [-2, 2].
std::vector<Rat> rational_roots_in_range(const IntPoly& f_in, const Rat& lo, const Rat& hi) {
  std::vector<Rat> out;
  IntPoly f = f_in;
  const int ord = f.order_at_zero();
  if (ord > 0) {
    if (lo <= 0 && 0 <= hi) out.emplace_back(0);
    f = *IntPoly::divide_exact(f, IntPoly::monomial(ord, 1));
  }
  if (f.degree() < 1) {
    std::sort(out.begin(), out.end());
    return out;
  }
  const Int f1 = f.eval(Int(1));
  const Int fm1 = f.eval(Int(-1));
  for (const Int& q : all_divisors(abs(f.leading()))) {
    for (const Int& pp : all_divisors(abs(f[f.order_at_zero()]))) {
      if (gcd(pp, q) != 1) continue;
      for (int sg : {1, -1}) {
        Int p = sg > 0 ? pp : -pp;
        Rat cand(p, q);
        if (cand < lo || cand > hi) continue;
        Int d1 = q - p;
        if (d1 != 0 && f1 % d1 != 0) continue;
        Int d2 = q + p;
        if (d2 != 0 && fm1 % d2 != 0) continue;
        if (f.eval(cand) == 0) out.push_back(cand);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void isolate_rec(const std::vector<IntPoly>& chain, const Rat& lo, const Rat& hi,
                 std::vector<std::pair<Rat, Rat>>& out) {
  int n = count_roots(chain, lo, hi);
  if (n == 0) return;
  if (n == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  Rat mid = (lo + hi) / 2;
  isolate_rec(chain, lo, mid, out);
  isolate_rec(chain, mid, hi, out);
}

Rat mpfr_bound_to_rat(mpfr_srcptr x) {
  Rat out;
  mpfr_get_q(out.backend().data(), x);
  return out;
}

// Rational enclosure of arccos(u/2) over a u-interval (arccos decreasing).
std::pair<Rat, Rat> theta_enclosure(const Rat& u_lo, const Rat& u_hi) {
  mpfr_t x, th;
  mpfr_init2(x, 192);
  mpfr_init2(th, 192);

  Rat half_hi = u_hi / 2;
  mpfr_set_q(x, half_hi.backend().data(), MPFR_RNDU);
  if (mpfr_cmp_si(x, 1) > 0) mpfr_set_si(x, 1, MPFR_RNDN);
  if (mpfr_cmp_si(x, -1) < 0) mpfr_set_si(x, -1, MPFR_RNDN);
  mpfr_acos(th, x, MPFR_RNDD);
  Rat theta_lo = mpfr_bound_to_rat(th);
  if (theta_lo < 0) theta_lo = 0;

  Rat half_lo = u_lo / 2;
  mpfr_set_q(x, half_lo.backend().data(), MPFR_RNDD);
  if (mpfr_cmp_si(x, 1) > 0) mpfr_set_si(x, 1, MPFR_RNDN);
  if (mpfr_cmp_si(x, -1) < 0) mpfr_set_si(x, -1, MPFR_RNDN);
  mpfr_acos(th, x, MPFR_RNDU);
  Rat theta_hi = mpfr_bound_to_rat(th);

  mpfr_clear(x);
  mpfr_clear(th);
  return {theta_lo, theta_hi};
}

ToricRoot make_rational_root(const Rat& u0, int mult) {
  ToricRoot r;
  r.u0 = u0;
  r.u_lo = u0;
  r.u_hi = u0;
  r.mult = mult;
  Int s = numerator(u0), t = denominator(u0);
  r.u_factor = IntPoly(std::vector<Int>{-s, t});
  if (u0 == 2) {
    r.alpha_min_poly = IntPoly{-1, 1};
    r.alpha_degree = 1;
  } else if (u0 == -2) {
    r.alpha_min_poly = IntPoly{1, 1};
    r.alpha_degree = 1;
  } else {
    // alpha is a root of t x^2 - s x + t, irreducible for |s/t| < 2.
    r.alpha_min_poly = IntPoly(std::vector<Int>{t, -s, t});
    r.alpha_degree = 2;
  }
  r.alpha_degree_exact = true;
  return r;
}

ToricRoot make_irrational_root(const IntPoly& factor, const Rat& lo, const Rat& hi, int mult) {
  ToricRoot r;
  r.u_factor = factor;
  r.u_lo = lo;
  r.u_hi = hi;
  r.mult = mult;
  r.alpha_degree = 2 * factor.degree();
  r.alpha_degree_exact = false;
  return r;
}

bool intervals_touch(const ToricRoot& a, const ToricRoot& b) {
  return !(a.u_hi < b.u_lo || b.u_hi < a.u_lo);
}

void bisect_once(ToricRoot& r) {
  if (r.u0) return;  // exact
  Rat mid = (r.u_lo + r.u_hi) / 2;
  int sm = r.u_factor.sign_at(mid);
  // The factor is squarefree with no rational roots, so sm != 0.
  if (sm == r.u_factor.sign_at(r.u_lo))
    r.u_lo = mid;
  else
    r.u_hi = mid;
}

void finish_records(std::vector<ToricRoot>& roots) {
  // Refine to the handover width, keep irrational intervals inside (-2, 2),
  // and make all intervals pairwise disjoint.
  Rat target(Int(1), Int(1) << 64);
  for (auto& r : roots) {
    refine_u_interval(r, target);
    while (!r.u0 && (r.u_lo <= -2 || r.u_hi >= 2)) bisect_once(r);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < roots.size(); ++i) {
      for (size_t j = i + 1; j < roots.size(); ++j) {
        while (intervals_touch(roots[i], roots[j])) {
          bisect_once(roots[i]);
          bisect_once(roots[j]);
          changed = true;
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const ToricRoot& a, const ToricRoot& b) { return a.u_lo < b.u_lo; });
  for (auto& r : roots) {
    r.theta_mult = r.at_endpoint() ? 2 * r.mult : r.mult;
    auto [tl, th] = theta_enclosure(r.u_lo, r.u_hi);
    r.theta_lo = tl;
    r.theta_hi = th;
  }
}

}  // namespace

std::vector<ToricRoot> isolate_toric_roots(const UTransform& T) {
  if (T.t.is_zero()) throw std::invalid_argument("isolate_toric_roots: zero polynomial");
  std::vector<ToricRoot> roots;
  if (T.t.degree() < 1) return roots;

  SquarefreeDecomposition dec = squarefree_decomposition(T.t);
  const Rat lo(-2), hi(2);
  for (size_t i = 0; i < dec.factors.size(); ++i) {
    const IntPoly& fi = dec.factors[i];
    if (fi.degree() < 1) continue;
    const int mult = static_cast<int>(i + 1);

    IntPoly rest = fi;
    for (const Rat& r : rational_roots_in_range(fi, lo, hi)) {
      roots.push_back(make_rational_root(r, mult));
      IntPoly lin(std::vector<Int>{-numerator(r), denominator(r)});
      rest = *IntPoly::divide_exact(rest, lin);
    }
    if (rest.degree() > 0) {
      rest = rest.primitive_part();
      auto chain = sturm_chain(rest);
      std::vector<std::pair<Rat, Rat>> ivs;
      isolate_rec(chain, lo, hi, ivs);
      for (const auto& [l, h] : ivs)
        roots.push_back(make_irrational_root(rest, l, h, mult));
    }
  }
  finish_records(roots);
  return roots;
}

void refine_u_interval(ToricRoot& r, const Rat& max_width) {
  if (r.u0) return;
  while (r.u_hi - r.u_lo >= max_width) bisect_once(r);
}

bool same_u_root(const ToricRoot& a, const ToricRoot& b) {
  if (a.u0 && b.u0) return *a.u0 == *b.u0;
  if (a.u0 || b.u0) {
    const ToricRoot& ex = a.u0 ? a : b;
    const ToricRoot& ir = a.u0 ? b : a;
    // An isolated irrational root never equals a rational value.
    if (ir.u_factor.eval(*ex.u0) != 0) return false;
    return ir.u_lo <= *ex.u0 && *ex.u0 <= ir.u_hi;
  }
  IntPoly g = poly_gcd(a.u_factor, b.u_factor);
  if (g.degree() < 1) return false;
  Rat lo = std::max(a.u_lo, b.u_lo);
  Rat hi = std::min(a.u_hi, b.u_hi);
  if (lo > hi) return false;
  auto chain = sturm_chain(g);
  return count_roots(chain, lo, hi) > 0;
}

namespace {

// Sign of t on each maximal open interval between consecutive roots
// (gap i lies left of root i; gap n is right of the last root).
std::vector<int> gap_signs(const IntPoly& t, const std::vector<ToricRoot>& roots) {
  const size_t n = roots.size();
  std::vector<int> sign(n + 1, 0);
  auto left_of = [&](size_t i) { return roots[i].u_lo; };
  auto right_of = [&](size_t i) { return roots[i].u_hi; };
  for (size_t g = 0; g <= n; ++g) {
    Rat a = (g == 0) ? Rat(-2) : right_of(g - 1);
    Rat b = (g == n) ? Rat(2) : left_of(g);
    if (a >= b) continue;  // empty gap at an endpoint root
    Rat probe = (a + b) / 2;
    sign[g] = t.sign_at(probe);
  }
  return sign;
}

RootKind kind_from_signs(const ToricRoot& r, int left, int right) {
  if (r.u0 && *r.u0 == -2) return right > 0 ? RootKind::TypeIIPlus : RootKind::TypeIIMinus;
  if (r.u0 && *r.u0 == 2) return left > 0 ? RootKind::TypeIIPlus : RootKind::TypeIIMinus;
  if (r.mult % 2 != 0) return RootKind::TypeI;
  return left > 0 ? RootKind::TypeIIPlus : RootKind::TypeIIMinus;
}

}  // namespace

void classify_roots(const UTransform& t_delta, std::vector<ToricRoot>& roots) {
  std::vector<int> sign = gap_signs(t_delta.t, roots);
  for (size_t i = 0; i < roots.size(); ++i)
    roots[i].kind = kind_from_signs(roots[i], sign[i], sign[i + 1]);
}

RootKind classify_type(const UTransform& t_delta, const ToricRoot& root) {
  std::vector<ToricRoot> all = isolate_toric_roots(t_delta);
  classify_roots(t_delta, all);
  for (const auto& r : all)
    if (same_u_root(r, root)) return r.kind;
  throw std::invalid_argument("classify_type: root does not belong to t_delta");
}

namespace {

int order_at_pm1(const IntPoly& p, int xval) {
  IntPoly lin = (xval == 1) ? IntPoly{-1, 1} : IntPoly{1, 1};
  int e = 0;
  IntPoly cur = p;
  while (true) {
    auto q = IntPoly::divide_exact(cur, lin);
    if (!q) break;
    cur = std::move(*q);
    ++e;
  }
  return e;
}

}  // namespace

std::vector<ToricRoot> toric_roots_of_h(const DiscriminantSplit& split) {
  const IntPoly& h = split.h;
  if (h.is_zero()) throw std::invalid_argument("toric_roots_of_h: zero h");
  std::vector<ToricRoot> roots;
  if (h.degree() < 1) {
    return roots;
  }

  const int e1 = order_at_pm1(h, 1);
  const int em1 = order_at_pm1(h, -1);
  IntPoly h1 = h;
  if (h1.order_at_zero() > 0)
    h1 = *IntPoly::divide_exact(h1, IntPoly::monomial(h1.order_at_zero(), 1));
  if (e1 > 0) h1 = *IntPoly::divide_exact(h1, IntPoly{-1, 1}.pow(static_cast<unsigned>(e1)));
  if (em1 > 0) h1 = *IntPoly::divide_exact(h1, IntPoly{1, 1}.pow(static_cast<unsigned>(em1)));

  if (h1.degree() > 0) {
    // Self-inversive part: common factor with the reversed polynomial.  Its
    // root multiset is closed under inversion, so it is an even-degree
    // reciprocal polynomial and carries every remaining unit-circle root of
    // h with full multiplicity.
    IntPoly hs = poly_gcd(h1, h1.reversed());
    if (hs.degree() > 0) {
      UTransform t = u_transform(hs);
      std::vector<ToricRoot> inner = isolate_toric_roots(t);
      for (auto& r : inner) {
        r.mult_h = r.mult;
        r.mult = 0;
        r.theta_mult = 0;
        roots.push_back(std::move(r));
      }
    }
  }

  if (em1 > 0) {
    ToricRoot r = make_rational_root(Rat(-2), 0);
    r.mult = 0;
    r.mult_h = em1;
    auto [tl, th] = theta_enclosure(Rat(-2), Rat(-2));
    r.theta_lo = tl;
    r.theta_hi = th;
    roots.insert(roots.begin(), std::move(r));
  }
  if (e1 > 0) {
    ToricRoot r = make_rational_root(Rat(2), 0);
    r.mult = 0;
    r.mult_h = e1;
    r.theta_lo = 0;
    r.theta_hi = 0;
    roots.push_back(std::move(r));
  }
  return roots;
}

}  // namespace mahler
