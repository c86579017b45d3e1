#ifndef MAHLER_FACTOR_HPP
#define MAHLER_FACTOR_HPP

#include <utility>
#include <vector>

#include "mahler/intpoly.hpp"

namespace mahler {

// Prime factorization of |n|, n != 0, as (prime, exponent) pairs sorted by
// prime.  Trial division up to 10^6, then Pollard rho with Miller-Rabin
// splitting; inputs in this project are small.
std::vector<std::pair<Int, int>> factorize(const Int& n);

bool is_squarefree(const Int& n);

// n = k * m^2 with k squarefree, for n > 0.
void squarefree_square_split(const Int& n, Int& k, Int& m);

// q = sign * kernel * square^2 with kernel a positive squarefree integer
// and square a positive rational.  Requires q != 0.
struct SquarefreeKernel {
  int sign = 1;
  Int kernel{1};
  Rat square{1};
};
SquarefreeKernel squarefree_kernel(const Rat& q);

// Signed squarefree representative of q modulo rational squares.
Int signed_kernel(const Rat& q);

}  // namespace mahler

#endif  // MAHLER_FACTOR_HPP
