#ifndef MAHLER_REAL_HPP
#define MAHLER_REAL_HPP

#include <boost/multiprecision/mpfr.hpp>

#include "mahler/intpoly.hpp"

namespace mahler {

// Arbitrary-precision real; working precision is the (process-global)
// boost default, managed with PrecisionGuard around each computation phase.
using Real = boost::multiprecision::mpfr_float;

// Value with a conservative absolute error bound.
struct BigReal {
  Real value;
  Real err;
};

class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits10);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

// Working precision for a target accuracy: target + guard digits, plus a
// little more when many partial results are accumulated.
unsigned work_digits(unsigned target, unsigned accumulation_count = 1);

Real const_pi();
Real const_catalan();
Real pow10(long e);
Real rat_to_real(const Rat& q);
Int round_to_int(const Real& x);

// |x| * 10^(2 - working digits): the scale of one rounding error on x.
Real ulp_of(const Real& x);

BigReal badd(const BigReal& a, const BigReal& b);
BigReal bsub(const BigReal& a, const BigReal& b);
BigReal bscale(const BigReal& a, const Real& exact_factor);

Real horner(const IntPoly& p, const Real& x);

}  // namespace mahler

#endif  // MAHLER_REAL_HPP
