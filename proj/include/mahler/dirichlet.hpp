#ifndef MAHLER_DIRICHLET_HPP
#define MAHLER_DIRICHLET_HPP

#include "mahler/real.hpp"

namespace mahler {

// Whether -f is a fundamental discriminant (f > 0).
bool is_fundamental_negative(long f);

// chi_{-f}(u), the Kronecker symbol (-f | u); throws if -f is not fundamental.
int kronecker_chi(long f, const Int& u);

// Hurwitz zeta(2, a) for 0 < a <= 1 by Euler-Maclaurin, ambient precision.
BigReal hurwitz_zeta2(const Rat& a);

// d_f = L'(chi_{-f}, -1) at the ambient precision, by one route each:
//   clausen route:  d_f = (f / 2 pi) sum_{0<u<f/2} chi(u) Cl2(2 pi u / f)
//   hurwitz route:  d_f = f^{3/2} L(chi,2) / (4 pi),
//                   L(chi,2) = f^-2 sum_u chi(u) zeta(2, u/f)
BigReal l_prime_clausen_route(long f);
BigReal l_prime_hurwitz_route(long f);

// Both routes at the requested precision; throws std::runtime_error if they
// disagree beyond their combined error bounds.
BigReal l_prime_minus1(long f, unsigned digits);

}  // namespace mahler

#endif  // MAHLER_DIRICHLET_HPP
