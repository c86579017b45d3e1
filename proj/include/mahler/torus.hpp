#ifndef MAHLER_TORUS_HPP
#define MAHLER_TORUS_HPP

#include <optional>
#include <vector>

#include "mahler/intpoly.hpp"

namespace mahler {

// Exact change of variable u = x + 1/x for an even-shift sign-reciprocal
// polynomial: source(x) = x^half_shift * t(x + 1/x).  On the unit circle,
// e^{-i m theta} source(e^{i theta}) = t(2 cos theta), which is real.
struct UTransform {
  IntPoly source;
  IntPoly t;
  int half_shift = 0;
};

// Requires shifted_reciprocal_shift(p) = (2m, +1); throws otherwise.
UTransform u_transform(const IntPoly& p);

enum class RootKind { Unclassified, TypeI, TypeIIPlus, TypeIIMinus };

// One zero of a transformed polynomial on u in [-2, 2], i.e. one conjugate
// pair e^{+-i theta} on the unit circle (a single point at u = +-2).
struct ToricRoot {
  std::optional<Rat> u0;      // exact rational u-value when available
  IntPoly u_factor;           // primitive squarefree factor vanishing at the root
  Rat u_lo, u_hi;             // isolating interval (point interval when u0 is set)
  Rat theta_lo, theta_hi;     // rational enclosure of theta = arccos(u/2)
  IntPoly alpha_min_poly;     // minimal polynomial of alpha when degree <= 2
  int alpha_degree = 0;       // [Q(alpha):Q]; an upper bound when !alpha_degree_exact
  bool alpha_degree_exact = true;
  int mult = 0;               // u-multiplicity in the isolated polynomial
  int theta_mult = 0;         // theta-order on the circle (2*mult at u = +-2)
  int mult_h = 0;             // ord_alpha h, filled by toric_roots_of_h / the checker
  RootKind kind = RootKind::Unclassified;

  bool at_endpoint() const { return u0 && (*u0 == 2 || *u0 == -2); }
};

// All roots of T.t in [-2, 2] with multiplicities, sorted by ascending u,
// isolating intervals pairwise disjoint and of width < 2^-64.
std::vector<ToricRoot> isolate_toric_roots(const UTransform& T);

// Sign behaviour of t_delta on the circle near the given root.
RootKind classify_type(const UTransform& t_delta, const ToricRoot& root);

// Classify every root in place (roots must be the output of
// isolate_toric_roots(t_delta)).
void classify_roots(const UTransform& t_delta, std::vector<ToricRoot>& roots);

// Unit-circle roots of h with mult_h = ord_alpha h, via the self-inversive
// part gcd(h, rev h); sorted by ascending u.
std::vector<ToricRoot> toric_roots_of_h(const DiscriminantSplit& split);

// Whether two records describe the same algebraic u-value.
bool same_u_root(const ToricRoot& a, const ToricRoot& b);

// Shrink the isolating interval below max_width by sign bisection.
void refine_u_interval(ToricRoot& r, const Rat& max_width);

}  // namespace mahler

#endif  // MAHLER_TORUS_HPP
