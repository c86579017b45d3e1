#include "mahler/special.hpp"

#include <stdexcept>

#include "mahler/bernoulli.hpp"

namespace mahler {

Complex complex_log(const Complex& z) {
  return {log(z.abs2()) / 2, atan2(z.im, z.re)};
}

namespace {

Real target_eps() { return pow10(-(static_cast<long>(Real::default_precision()) + 2)); }

}  // namespace

BigReal clausen(const Real& theta) {
  const Real pi = const_pi();
  const Real two_pi = 2 * pi;
  Real t = fmod(theta, two_pi);
  if (t < 0) t += two_pi;
  int sign = 1;
  if (t > pi) {
    t = two_pi - t;
    sign = -1;
  }
  if (t == 0) return {Real(0), target_eps()};

  // Cl_2(t) = t - t log t + sum_{n>=1} |B_2n| t^(2n+1) / (2n (2n+1) (2n)!),
  // term ratio bounded by (t/2pi)^2 <= 1/4 on [0, pi].
  const Real eps = target_eps();
  Real val = t - t * log(t);
  Real t2 = t * t;
  Real tpow = t2 * t;  // t^(2n+1)
  unsigned terms = 0;
  Real term = 0;
  for (unsigned n = 1;; ++n) {
    if (n > 1) tpow *= t2;
    term = rat_to_real(clausen_coefficient(n)) * tpow;
    val += term;
    ++terms;
    if (term < eps) break;
    if (n > 100000) throw std::runtime_error("clausen: series did not converge");
  }
  Real rho = t2 / (two_pi * two_pi);
  Real tail = term * rho / (1 - rho);
  BigReal out;
  out.value = sign > 0 ? val : -val;
  out.err = tail + Real(terms + 6) * ulp_of(val) + eps;
  return out;
}

BigReal clausen_at(const Real& theta, unsigned digits) {
  PrecisionGuard guard(work_digits(digits));
  Real t = theta;  // re-rounded into the working precision on use
  return clausen(t);
}

namespace {

// sum z^n / n^2, |z| <= 0.55 or so.
Complex li2_series(const Complex& z) {
  const Real eps = target_eps();
  Complex sum{Real(0), Real(0)};
  Complex zp = z;
  for (unsigned n = 1;; ++n) {
    Real n2 = Real(n) * Real(n);
    sum = sum + Complex{zp.re / n2, zp.im / n2};
    zp = zp * z;
    if (abs(zp.re) + abs(zp.im) < eps) break;
    if (n > 1000000) throw std::runtime_error("li2_series: did not converge");
  }
  return sum;
}

// sum_k B_k w^(k+1)/(k+1)!, w = -log(1-z); converges for |w| < 2 pi since
// |B_k/(k+1)!| <= 4 (2 pi)^-k.
Complex li2_wseries(const Complex& w) {
  const Real eps = target_eps();
  const Real two_pi = 2 * const_pi();
  Complex sum{Real(0), Real(0)};
  Complex wp = w;  // w^(k+1)
  Real wmag = sqrt(w.abs2());
  Real bound = 4 * wmag;  // 4 |w|^(k+1) / (2 pi)^k
  for (unsigned k = 0;; ++k) {
    if (k <= 1 || k % 2 == 0) {
      Real cr = rat_to_real(bernoulli_over_factorial(k));
      sum = sum + Complex{wp.re * cr, wp.im * cr};
    }
    wp = wp * w;
    bound *= wmag / two_pi;
    if (k > 4 && bound < eps) break;
    if (k > 100000) throw std::runtime_error("li2_wseries: did not converge");
  }
  return sum;
}

}  // namespace

Complex li2(const Complex& z) {
  const Real pi = const_pi();
  if (z.re == 0 && z.im == 0) return {Real(0), Real(0)};
  if (z.im == 0 && z.re == 1) return {pi * pi / 6, Real(0)};

  Real a2 = z.abs2();
  if (a2 > 1) {
    // Li2(z) + Li2(1/z) = -pi^2/6 - log(-z)^2 / 2
    Complex inv = Complex{z.re / a2, -z.im / a2};
    Complex lz = complex_log(Complex{-z.re, -z.im});
    Complex lz2 = lz * lz;
    Complex rest = -li2(inv);
    return {rest.re - pi * pi / 6 - lz2.re / 2, rest.im - lz2.im / 2};
  }
  if (a2 <= Real(0.3025)) return li2_series(z);  // |z| <= 0.55

  Complex one_minus{1 - z.re, -z.im};
  Real d2 = one_minus.abs2();
  if (d2 <= Real(0.09)) {
    // Li2(z) = pi^2/6 - log(z) log(1-z) - Li2(1-z), |1-z| <= 0.3
    Complex prod = complex_log(z) * complex_log(one_minus);
    Complex rest = li2_series(one_minus);
    return {pi * pi / 6 - prod.re - rest.re, -prod.im - rest.im};
  }
  Complex w = -complex_log(one_minus);
  return li2_wseries(w);
}

BigReal bloch_wigner(const Complex& z) {
  if (z.im == 0) return {Real(0), Real(0)};
  Real a2 = z.abs2();
  if (a2 > 1) {
    Complex inv = Complex{z.re / a2, -z.im / a2};
    BigReal r = bloch_wigner(inv);
    return {-r.value, r.err};
  }
  if (z.im < 0) {
    BigReal r = bloch_wigner(z.conj());
    return {-r.value, r.err};
  }
  Complex L = li2(z);
  Real log_abs = log(a2) / 2;
  Real arg1mz = atan2(-z.im, 1 - z.re);
  Real v = L.im + arg1mz * log_abs;
  BigReal out;
  out.value = v;
  // Series lengths stay well below 10^3 terms at the precisions in use.
  out.err = 2000 * ulp_of(abs(L.im) + abs(L.re) + 2);
  return out;
}

}  // namespace mahler
