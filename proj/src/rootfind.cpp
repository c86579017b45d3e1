#include "mahler/rootfind.hpp"

#include <stdexcept>

#include "mahler/cyclotomic.hpp"

namespace mahler {

namespace {

Complex horner_c(const IntPoly& p, const Complex& z) {
  Complex acc{Real(0), Real(0)};
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * z;
    if (p[i] != 0) acc.re += Real(p[i]);
  }
  return acc;
}

}  // namespace

std::vector<Complex> complex_roots(const IntPoly& p) {
  const int n = p.degree();
  if (n < 1) return {};
  IntPoly dp = p.derivative();

  // Cauchy-style radius and spread initial guesses off the real axis.
  Real maxc = 0;
  for (int i = 0; i < n; ++i) {
    Real c = abs(Real(p[i]));
    if (c > maxc) maxc = c;
  }
  Real radius = 1 + maxc / abs(Real(p.leading()));
  const Real pi = const_pi();
  std::vector<Complex> z(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    Real ang = 2 * pi * k / n + Real(4) / 10;
    z[static_cast<size_t>(k)] = {radius * cos(ang), radius * sin(ang)};
  }

  const Real eps = pow10(-(static_cast<long>(Real::default_precision()) - 4));
  for (int iter = 0; iter < 400; ++iter) {
    Real worst = 0;
    for (int k = 0; k < n; ++k) {
      Complex& zk = z[static_cast<size_t>(k)];
      Complex pv = horner_c(p, zk);
      Complex dv = horner_c(dp, zk);
      if (dv.re == 0 && dv.im == 0) {
        zk.re += eps;  // nudge off a critical point
        continue;
      }
      Complex newton = pv / dv;
      Complex s{Real(0), Real(0)};
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        Complex d = zk - z[static_cast<size_t>(j)];
        Real n2 = d.abs2();
        s.re += d.re / n2;
        s.im += -d.im / n2;
      }
      Complex denom = Complex{Real(1), Real(0)} - newton * s;
      Complex step = newton / denom;
      zk = zk - step;
      Real mag = sqrt(step.abs2()) / (1 + sqrt(zk.abs2()));
      if (mag > worst) worst = mag;
    }
    if (worst < eps) return z;
  }
  throw std::runtime_error("complex_roots: Aberth iteration did not converge");
}

BigReal mahler_univariate(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("mahler_univariate: zero polynomial");
  BigReal out{Real(0), Real(0)};
  IntPoly q = p.leading() < 0 ? -p : p;

  // Cyclotomic products times x^k have all roots on the unit circle.
  if (detect_cyclotomic_product(q)) {
    return out;  // log 1 = 0
  }
  out.value = log(abs(Real(p.leading())));
  SquarefreeDecomposition dec = squarefree_decomposition(q);
  // content does not carry |lc|: log|lc| above already includes it via p.
  for (size_t i = 0; i < dec.factors.size(); ++i) {
    const IntPoly& fi = dec.factors[i];
    if (fi.degree() < 1) continue;
    for (const Complex& r : complex_roots(fi)) {
      Real a2 = r.abs2();
      if (a2 > 1) out.value += Real(static_cast<long>(i + 1)) * log(a2) / 2;
    }
  }
  out.err = Real(64 + 8 * p.degree()) * ulp_of(out.value + 1);
  return out;
}

}  // namespace mahler
