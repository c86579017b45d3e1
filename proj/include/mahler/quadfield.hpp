#ifndef MAHLER_QUADFIELD_HPP
#define MAHLER_QUADFIELD_HPP

#include <optional>
#include <vector>

#include "mahler/factor.hpp"
#include "mahler/intpoly.hpp"
#include "mahler/torus.hpp"

namespace mahler {

// A + B*sqrt(d1) with d1 a squarefree integer; canonically d1 = 1 when B = 0.
struct QuadElement {
  Rat A{0};
  Rat B{0};
  Int d1{1};
  bool is_zero() const { return A == 0 && B == 0; }
};

// Conductor of the fundamental discriminant attached to a negative
// squarefree integer d: |d| if d = 1 mod 4, else 4|d|.
Int fundamental_conductor(const Int& d);

// g(alpha) for alpha the upper-half-plane root of x^2 - u0 x + 1, |u0| < 2.
QuadElement eval_g_at_quadratic(const IntPoly& g, const Rat& u0);

// Whether sqrt(A + B sqrt(d1)) lies in a biquadratic extension, and if so
// two signed squarefree generators m1, m2 of the fields involved.
struct MultiquadraticResult {
  bool ok = false;
  std::optional<Int> m1, m2;
};
MultiquadraticResult multiquadratic_test(const QuadElement& e);

enum class ConductorStatus { Ok, NotMultiquadratic, UnsupportedDegree };

// Conductors of the imaginary quadratic subfields of the minimal
// multiquadratic field containing alpha and sqrt(g(alpha)).
struct ConductorResult {
  ConductorStatus status = ConductorStatus::Ok;
  std::vector<Int> conductors;  // sorted ascending
};
ConductorResult conductor_set(const ToricRoot& alpha, const IntPoly& g);

}  // namespace mahler

#endif  // MAHLER_QUADFIELD_HPP
