#ifndef MAHLER_MAHLER_MEASURE_HPP
#define MAHLER_MAHLER_MEASURE_HPP

#include <vector>

#include "mahler/intpoly.hpp"
#include "mahler/real.hpp"

namespace mahler {

struct NumericsOptions {
  unsigned digits = 60;
  int threads = 1;
  int max_level = 12;
};

enum class PanelEndpoint { Regular, ArcBoundary, ZeroOfA };

// One theta-interval of the integration domain; endpoints carry how the
// integrand behaves there (square-root arc boundary of Delta, log pole at a
// toric zero of a, or a plain interval end).
struct Panel {
  Real theta_lo, theta_hi;
  PanelEndpoint lo_kind = PanelEndpoint::Regular;
  PanelEndpoint hi_kind = PanelEndpoint::Regular;
};

struct QuadraturePlan {
  std::vector<Panel> panels;  // ascending in theta; only positive-arc panels
};

// Integration plan for m(a(y^2+1) + by) at the given precision.
QuadraturePlan plan_quadratic(const IntPoly& a, const IntPoly& b, unsigned digits);

// m(P) for P = a(x)(y^2+1) + b(x)y.  Requires a, b nonzero with a common
// even shift and sign +1, and a a cyclotomic product times a power of x.
BigReal mahler_quadratic(const IntPoly& a, const IntPoly& b, const NumericsOptions& opt = {});

// m(p(x) y + q(x)) for nonzero integer polynomials p, q.
BigReal mahler_linear(const IntPoly& p, const IntPoly& q, const NumericsOptions& opt = {});

// Cassaigne-Maillot: m(ax + by + c) for positive side lengths forming a
// nondegenerate triangle (ambient precision; throws std::domain_error on a
// degenerate or numerically degenerate triangle).
BigReal cassaigne_maillot(const Real& la, const Real& lb, const Real& lc);
BigReal cassaigne_maillot_at(const Real& la, const Real& lb, const Real& lc, unsigned digits);

// log(alpha_f) + f * sum chi(u) G(u)  versus  2 d_f.
struct Thm41Result {
  BigReal lhs, rhs;
  Real diff;
  bool ok = false;
};
Thm41Result verify_thm41(long f, unsigned digits);

}  // namespace mahler

#endif  // MAHLER_MAHLER_MEASURE_HPP
