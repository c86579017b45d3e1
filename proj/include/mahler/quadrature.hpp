#ifndef MAHLER_QUADRATURE_HPP
#define MAHLER_QUADRATURE_HPP

#include <functional>

#include "mahler/real.hpp"

namespace mahler {

struct DEResult {
  Real value{0};
  Real err{0};
  bool converged = false;
  int levels = 0;
};

// Tanh-sinh (double-exponential) quadrature of f over (lo, hi), doubling the
// node density until two consecutive levels agree within tol (absolute).
// Endpoint log and sqrt singularities are handled by the substitution; node
// positions are computed as offsets from the nearer endpoint.
DEResult tanh_sinh(const std::function<Real(const Real&)>& f, const Real& lo, const Real& hi,
                   const Real& tol, int max_level = 12);

}  // namespace mahler

#endif  // MAHLER_QUADRATURE_HPP
