#include "mahler/mahler_measure.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mahler/cyclotomic.hpp"
#include "mahler/dirichlet.hpp"
#include "mahler/quadrature.hpp"
#include "mahler/rootfind.hpp"
#include "mahler/special.hpp"
#include "mahler/torus.hpp"

namespace mahler {

namespace {

struct BreakEntry {
  ToricRoot root;
  bool from_delta = false;
  bool from_a = false;  // also reused as "pole of the log" in the linear form
};

void halve(ToricRoot& r) {
  if (r.u0) return;
  refine_u_interval(r, r.u_hi - r.u_lo);  // one bisection step
}

bool touch(const ToricRoot& x, const ToricRoot& y) {
  return !(x.u_hi < y.u_lo || y.u_hi < x.u_lo);
}

// Merge two families of toric roots into one strictly ordered breakpoint
// list; equal algebraic numbers are combined, distinct ones separated.
std::vector<BreakEntry> merge_breakpoints(const std::vector<ToricRoot>& delta_roots,
                                          const std::vector<ToricRoot>& other_roots) {
  std::vector<BreakEntry> out;
  for (const auto& r : delta_roots) out.push_back({r, true, false});
  for (const auto& r : other_roots) {
    bool merged = false;
    for (auto& e : out) {
      if (same_u_root(e.root, r)) {
        e.from_a = true;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back({r, false, true});
  }
  bool again = true;
  while (again) {
    again = false;
    for (size_t i = 0; i < out.size(); ++i) {
      for (size_t j = i + 1; j < out.size(); ++j) {
        while (touch(out[i].root, out[j].root)) {
          halve(out[i].root);
          halve(out[j].root);
          again = true;
        }
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const BreakEntry& x, const BreakEntry& y) { return x.root.u_lo < y.root.u_lo; });
  return out;
}

// theta = arccos(u/2) of a breakpoint root, to the ambient precision.
Real refined_theta(const ToricRoot& r) {
  if (r.u0) return acos(rat_to_real(*r.u0) / 2);
  Real lo = acos(rat_to_real(r.u_hi) / 2);  // theta increases as u decreases
  Real hi = acos(rat_to_real(r.u_lo) / 2);
  int sign_lo = r.u_factor.sign_at(r.u_hi);  // sign of the factor at theta = lo
  const int iters = static_cast<int>(3.4 * Real::default_precision()) + 16;
  for (int i = 0; i < iters; ++i) {
    Real mid = (lo + hi) / 2;
    Real v = horner(r.u_factor, 2 * cos(mid));
    int s = v == 0 ? 0 : (v > 0 ? 1 : -1);
    if (s == 0) return mid;
    if (s == sign_lo)
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2;
}

// Sign of t on the gap between consecutive breakpoints (gap i left of
// breakpoint i; gap n is the rightmost).
std::vector<int> breakpoint_gap_signs(const IntPoly& t, const std::vector<BreakEntry>& bp) {
  const size_t n = bp.size();
  std::vector<int> sign(n + 1, 0);
  for (size_t g = 0; g <= n; ++g) {
    Rat a = (g == 0) ? Rat(-2) : bp[g - 1].root.u_hi;
    Rat b = (g == n) ? Rat(2) : bp[g].root.u_lo;
    if (a >= b) continue;
    sign[g] = t.sign_at((a + b) / 2);
  }
  return sign;
}

struct PreparedPlan {
  QuadraturePlan plan;
  size_t positive_panels = 0;
};

// Evaluates an integer polynomial at u = 2 cos(theta).  Near theta = 0 and
// pi the direct form cancels (u -+ 2 is quadratic in the offset), so there
// the polynomial is evaluated through its exact Taylor shift at u = +-2
// with 2 - u = 4 sin^2(theta/2) and u + 2 = 4 cos^2(theta/2).
class CircleEvaluator {
 public:
  explicit CircleEvaluator(IntPoly t)
      : plain_(std::move(t)),
        at_plus2_(plain_.composed(IntPoly{2, -1})),   // T(2 - v)
        at_minus2_(plain_.composed(IntPoly{-2, 1})) {}  // T(-2 + w)

  Real operator()(const Real& theta, const Real& pi) const {
    if (4 * theta < pi) {
      Real s = sin(theta / 2);
      Real v = 4 * s * s;
      return horner(at_plus2_, v);
    }
    if (4 * theta > 3 * pi) {
      Real c = cos(theta / 2);
      Real w = 4 * c * c;
      return horner(at_minus2_, w);
    }
    Real u = 2 * cos(theta);
    return horner(plain_, u);
  }

 private:
  IntPoly plain_, at_plus2_, at_minus2_;
};

// Panels with t_delta > 0, in theta order.  Breakpoints are the toric roots
// of Delta and of a (or of the crossing/pole polynomials in the linear
// form); theta = 0, pi close the list.  The u-gap g between bp[g-1] and
// bp[g] maps to the theta interval (theta(bp[g]), theta(bp[g-1])); a
// breakpoint at u = +-2 makes its adjacent outer gap empty, so the panel
// bordering theta = 0 or pi then starts at the breakpoint itself.
PreparedPlan build_panels(const IntPoly& t_delta, const std::vector<BreakEntry>& bp) {
  PreparedPlan out;
  std::vector<int> gap = breakpoint_gap_signs(t_delta, bp);
  const size_t n = bp.size();
  std::vector<Real> bp_theta(n);
  for (size_t i = 0; i < n; ++i) bp_theta[i] = refined_theta(bp[i].root);
  auto kind_of = [&](size_t i) {
    return bp[i].from_delta ? PanelEndpoint::ArcBoundary : PanelEndpoint::ZeroOfA;
  };
  const Real pi = const_pi();
  for (size_t g = n + 1; g-- > 0;) {
    if (gap[g] <= 0) continue;
    Real lo = (g == n) ? Real(0) : bp_theta[g];
    Real hi = (g == 0) ? pi : bp_theta[g - 1];
    if (!(lo < hi)) continue;
    Panel p;
    p.theta_lo = lo;
    p.theta_hi = hi;
    p.lo_kind = (g == n) ? PanelEndpoint::Regular : kind_of(g);
    p.hi_kind = (g == 0) ? PanelEndpoint::Regular : kind_of(g - 1);
    out.plan.panels.push_back(std::move(p));
  }
  out.positive_panels = out.plan.panels.size();
  return out;
}

BigReal integrate_panels(const QuadraturePlan& plan,
                         const std::function<Real(const Real&)>& f, unsigned digits,
                         int threads, int max_level) {
  const size_t n = plan.panels.size();
  std::vector<DEResult> results(n);
  Real tol = pow10(-(static_cast<long>(digits) + 8)) / static_cast<long>(std::max<size_t>(1, n));
  auto run_one = [&](size_t i) {
    const Panel& p = plan.panels[i];
    results[i] = tanh_sinh(f, p.theta_lo, p.theta_hi, tol, max_level);
  };
  if (threads > 1 && n > 1) {
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      for (size_t i; (i = next.fetch_add(1)) < n;) run_one(i);
    };
    std::vector<std::thread> pool;
    const size_t count = std::min<size_t>(static_cast<size_t>(threads), n);
    pool.reserve(count);
    for (size_t t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  } else {
    for (size_t i = 0; i < n; ++i) run_one(i);
  }
  BigReal total{Real(0), Real(0)};
  for (size_t i = 0; i < n; ++i) {
    total.value += results[i].value;
    total.err += results[i].err;
  }
  total.err += Real(static_cast<long>(n + 4)) * ulp_of(total.value + 1);
  return total;
}

void require_quadratic_shape(const IntPoly& a, const IntPoly& b) {
  auto sa = shifted_reciprocal_shift(a);
  auto sb = shifted_reciprocal_shift(b);
  if (!sa || !sb || sa->sign != 1 || sb->sign != 1 || sa->shift != sb->shift ||
      sa->shift % 2 != 0)
    throw std::invalid_argument(
        "mahler_quadratic: a and b must share an even shift with sign +1");
}

}  // namespace

QuadraturePlan plan_quadratic(const IntPoly& a_in, const IntPoly& b_in, unsigned digits) {
  IntPoly a = a_in, b = b_in;
  if (a.leading() < 0) {
    a = -a;
    b = -b;
  }
  require_quadratic_shape(a, b);
  PrecisionGuard guard(work_digits(digits, 64));
  IntPoly delta = discriminant(a, b);
  if (delta.is_zero()) return {};
  UTransform td = u_transform(delta);
  UTransform ta = u_transform(a);
  auto bp = merge_breakpoints(isolate_toric_roots(td), isolate_toric_roots(ta));
  return build_panels(td.t, bp).plan;
}

BigReal mahler_quadratic(const IntPoly& a_in, const IntPoly& b_in, const NumericsOptions& opt) {
  if (a_in.is_zero() || b_in.is_zero())
    throw std::invalid_argument("mahler_quadratic: a and b must be nonzero");
  IntPoly a = a_in, b = b_in;
  if (a.leading() < 0) {
    a = -a;
    b = -b;
  }
  require_quadratic_shape(a, b);
  if (!detect_cyclotomic_product(a))
    throw std::invalid_argument(
        "mahler_quadratic: a must be a cyclotomic product times a power of x");

  PrecisionGuard guard(work_digits(opt.digits, 64));
  IntPoly delta = discriminant(a, b);
  if (delta.is_zero()) return {Real(0), Real(0)};  // P = a (y +- 1)^2

  UTransform td = u_transform(delta);
  UTransform ta = u_transform(a);
  UTransform tb = u_transform(b);
  if (!(td.t == tb.t * tb.t - (ta.t * ta.t) * Int(4)))
    throw std::logic_error("mahler_quadratic: transform identity failed");

  auto bp = merge_breakpoints(isolate_toric_roots(td), isolate_toric_roots(ta));
  PreparedPlan prep = build_panels(td.t, bp);

  const Real floor_val = pow10(-2 * static_cast<long>(Real::default_precision()));
  const Real pi = const_pi();
  CircleEvaluator ea(ta.t), eb(tb.t);
  auto f = [&](const Real& theta) -> Real {
    Real va = ea(theta, pi);
    Real vb = eb(theta, pi);
    Real disc = vb * vb - 4 * va * va;
    if (disc < 0) disc = 0;
    Real ava = abs(va);
    if (ava < floor_val) ava = floor_val;
    return log((abs(vb) + sqrt(disc)) / (2 * ava));
  };

  BigReal total = integrate_panels(prep.plan, f, opt.digits, opt.threads, opt.max_level);
  return bscale(total, 1 / pi);
}

BigReal mahler_linear(const IntPoly& p, const IntPoly& q, const NumericsOptions& opt) {
  if (p.is_zero() || q.is_zero())
    throw std::invalid_argument("mahler_linear: p and q must be nonzero");
  PrecisionGuard guard(work_digits(opt.digits, 64));

  BigReal mp = mahler_univariate(p);

  IntPoly np = p * p.reversed();
  IntPoly nq = q * q.reversed();
  UTransform tnp = u_transform(np);
  UTransform tnq = u_transform(nq);
  IntPoly cross = tnq.t - tnp.t;

  if (cross.is_zero()) return mp;  // |q| = |p| on the whole circle

  UTransform tc{IntPoly{}, cross, 0};  // already a polynomial in u
  std::vector<ToricRoot> crossing = isolate_toric_roots(tc);
  // poles of the log (zeros of p on the circle) and zeros of q
  std::vector<ToricRoot> other = isolate_toric_roots(tnp);
  {
    std::vector<ToricRoot> qzeros = isolate_toric_roots(tnq);
    // merge_breakpoints separates/merges them against the crossings; the two
    // "other" families may share roots only if p and q do, which is fine:
    // duplicates collapse onto the same breakpoint.
    for (auto& r : qzeros) other.push_back(std::move(r));
  }
  std::vector<BreakEntry> bp = merge_breakpoints(crossing, other);
  PreparedPlan prep = build_panels(cross, bp);

  const Real floor_val = pow10(-2 * static_cast<long>(Real::default_precision()));
  const Real pi = const_pi();
  CircleEvaluator eq(tnq.t), ep(tnp.t);
  auto f = [&](const Real& theta) -> Real {
    Real hq = eq(theta, pi);
    Real hp = ep(theta, pi);
    if (hq < floor_val) hq = floor_val;
    if (hp < floor_val) hp = floor_val;
    return (log(hq) - log(hp)) / 2;
  };

  BigReal arc = integrate_panels(prep.plan, f, opt.digits, opt.threads, opt.max_level);
  return badd(mp, bscale(arc, 1 / pi));
}

BigReal cassaigne_maillot(const Real& la, const Real& lb, const Real& lc) {
  if (!(la > 0 && lb > 0 && lc > 0))
    throw std::domain_error("cassaigne_maillot: side lengths must be positive");
  Real perim = la + lb + lc;
  Real m1 = la + lb - lc;
  Real m2 = lb + lc - la;
  Real m3 = la + lc - lb;
  Real margin = std::min(std::min(m1, m2), m3);
  const long prec = static_cast<long>(Real::default_precision());
  if (margin <= 0 || margin / perim < pow10(-(prec - 12)))
    throw std::domain_error("cassaigne_maillot: degenerate triangle");

  auto angle = [&](const Real& x, const Real& y, const Real& opp) -> Real {
    Real c = (x * x + y * y - opp * opp) / (2 * x * y);
    if (c > 1) c = 1;
    if (c < -1) c = -1;
    return acos(c);
  };
  Real alpha = angle(lb, lc, la);
  Real beta = angle(la, lc, lb);
  Real gamma = angle(la, lb, lc);

  Complex z{(lb / la) * cos(gamma), (lb / la) * sin(gamma)};
  BigReal d = bloch_wigner(z);
  const Real pi = const_pi();
  BigReal out;
  out.value = (alpha * log(la) + beta * log(lb) + gamma * log(lc) + d.value) / pi;
  // acos loses accuracy like 1/sqrt(margin) near degeneracy.
  out.err = (d.err + 64 * ulp_of(abs(out.value) + 4) + ulp_of(Real(4)) / sqrt(margin / perim)) / pi;
  return out;
}

BigReal cassaigne_maillot_at(const Real& la, const Real& lb, const Real& lc, unsigned digits) {
  PrecisionGuard guard(work_digits(digits));
  Real a = la, b = lb, c = lc;
  return cassaigne_maillot(a, b, c);
}

Thm41Result verify_thm41(long f, unsigned digits) {
  if (!is_fundamental_negative(f))
    throw std::invalid_argument("verify_thm41: -f is not a fundamental discriminant");
  Thm41Result out;
  out.rhs = l_prime_minus1(f, digits + 5);
  out.rhs = bscale(out.rhs, Real(2));

  PrecisionGuard guard(work_digits(digits, static_cast<unsigned>(f)));
  const Real pi = const_pi();
  BigReal lhs{Real(0), Real(0)};
  for (long u = 1; 2 * u < f; ++u) {
    int chi = kronecker_chi(f, Int(u));
    if (chi == 0) continue;
    Real c = 2 * sin(pi * u / f);
    BigReal g = cassaigne_maillot(Real(1), Real(1), c);
    lhs = badd(lhs, bscale(g, Real(f) * chi));
    BigReal log_alpha_term{Real(-2 * chi) * Real(u) * log(c), Real(0)};
    log_alpha_term.err = 8 * ulp_of(log_alpha_term.value + 1);
    lhs = badd(lhs, log_alpha_term);
  }
  out.lhs = lhs;
  out.diff = abs(out.lhs.value - out.rhs.value);
  out.ok = out.diff < pow10(-(static_cast<long>(digits) - 10));
  return out;
}

}  // namespace mahler
