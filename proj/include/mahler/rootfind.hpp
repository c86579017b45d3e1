#ifndef MAHLER_ROOTFIND_HPP
#define MAHLER_ROOTFIND_HPP

#include <vector>

#include "mahler/intpoly.hpp"
#include "mahler/special.hpp"

namespace mahler {

// All complex roots of a squarefree polynomial (Aberth-Ehrlich iteration at
// the ambient precision).
std::vector<Complex> complex_roots(const IntPoly& p);

// Mahler measure of a univariate integer polynomial:
// log|lc| + sum over roots outside the unit disk of log|root|.
BigReal mahler_univariate(const IntPoly& p);

}  // namespace mahler

#endif  // MAHLER_ROOTFIND_HPP
