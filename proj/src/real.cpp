#include "mahler/real.hpp"

#include <cmath>

namespace mahler {

PrecisionGuard::PrecisionGuard(unsigned digits10) : saved_(Real::default_precision()) {
  Real::default_precision(digits10);
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_); }

unsigned work_digits(unsigned target, unsigned accumulation_count) {
  unsigned extra = 0;
  unsigned n = accumulation_count;
  while (n >= 10) {
    n /= 10;
    extra += 2;
  }
  return target + 20 + extra;
}

Real const_pi() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

Real const_catalan() {
  Real r;
  mpfr_const_catalan(r.backend().data(), MPFR_RNDN);
  return r;
}

Real pow10(long e) {
  Real ten = 10;
  return pow(ten, e);
}

Real rat_to_real(const Rat& q) { return q.convert_to<Real>(); }

Int round_to_int(const Real& x) {
  Real r;
  mpfr_round(r.backend().data(), x.backend().data());
  Int out;
  mpfr_get_z(out.backend().data(), r.backend().data(), MPFR_RNDN);
  return out;
}

Real ulp_of(const Real& x) {
  return abs(x) * pow10(2 - static_cast<long>(Real::default_precision()));
}

BigReal badd(const BigReal& a, const BigReal& b) {
  Real v = a.value + b.value;
  return BigReal{v, a.err + b.err + ulp_of(v)};
}

BigReal bsub(const BigReal& a, const BigReal& b) {
  Real v = a.value - b.value;
  return BigReal{v, a.err + b.err + ulp_of(v)};
}

BigReal bscale(const BigReal& a, const Real& f) {
  Real v = a.value * f;
  return BigReal{v, a.err * abs(f) + ulp_of(v)};
}

Real horner(const IntPoly& p, const Real& x) {
  if (p.is_zero()) return Real(0);
  Real acc = 0;
  for (int i = p.degree(); i >= 0; --i) {
    acc *= x;
    if (p[i] != 0) acc += Real(p[i]);
  }
  return acc;
}

}  // namespace mahler
