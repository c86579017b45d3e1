#ifndef MAHLER_BERNOULLI_HPP
#define MAHLER_BERNOULLI_HPP

#include "mahler/intpoly.hpp"

namespace mahler {

// B_n with the B_1 = -1/2 convention; exact, cached, thread-safe.
Rat bernoulli(unsigned n);

// B_n / (n+1)!, the dilogarithm w-series coefficients; exact, cached.
Rat bernoulli_over_factorial(unsigned n);

// |B_{2n}| / (2n (2n+1) (2n)!), the Clausen series coefficients; cached.
Rat clausen_coefficient(unsigned n);

}  // namespace mahler

#endif  // MAHLER_BERNOULLI_HPP
