#include "mahler/dirichlet.hpp"

#include <sstream>
#include <stdexcept>

#include "mahler/bernoulli.hpp"
#include "mahler/factor.hpp"
#include "mahler/special.hpp"

namespace mahler {

bool is_fundamental_negative(long f) {
  if (f <= 0) return false;
  if (f % 4 == 3) return is_squarefree(Int(f));
  if (f % 4 == 0) {
    long m = f / 4;
    return (m % 4 == 1 || m % 4 == 2) && is_squarefree(Int(m));
  }
  return false;
}

int kronecker_chi(long f, const Int& u) {
  if (!is_fundamental_negative(f)) {
    std::ostringstream os;
    os << "kronecker_chi: -" << f << " is not a fundamental discriminant";
    throw std::invalid_argument(os.str());
  }
  Int mf = -Int(f);
  return mpz_kronecker(mf.backend().data(), u.backend().data());
}

BigReal hurwitz_zeta2(const Rat& a) {
  if (!(a > 0 && a <= 1)) throw std::invalid_argument("hurwitz_zeta2: need 0 < a <= 1");
  const unsigned prec = Real::default_precision();
  const long N = static_cast<long>(0.4 * prec) + 12;
  const Real eps = pow10(-(static_cast<long>(prec) + 2));

  Real av = rat_to_real(a);
  Real sum = 0;
  for (long k = 0; k < N; ++k) {
    Real t = av + k;
    sum += 1 / (t * t);
  }
  Real x = av + N;          // > N >= 12
  sum += 1 / x;             // integral term
  Real x2 = x * x;
  sum += 1 / (2 * x2);      // boundary term

  // Correction series B_2j * x^(-2j-1); remainder bounded by the first
  // omitted term.
  Real xpow = x * x2;       // x^(2j+1) at j = 1
  Real term = 0;
  unsigned terms = 0;
  for (unsigned j = 1;; ++j) {
    term = rat_to_real(bernoulli(2 * j)) / xpow;
    sum += term;
    ++terms;
    if (abs(term) < eps) break;
    if (j > 4 * prec) throw std::runtime_error("hurwitz_zeta2: series did not converge");
    xpow *= x2;
  }
  BigReal out;
  out.value = sum;
  out.err = 4 * abs(term) + Real(N + terms + 8) * ulp_of(sum);
  return out;
}

BigReal l_prime_clausen_route(long f) {
  const Real pi = const_pi();
  BigReal acc{Real(0), Real(0)};
  for (long u = 1; 2 * u < f; ++u) {
    int chi = kronecker_chi(f, Int(u));
    if (chi == 0) continue;
    BigReal c = clausen(2 * pi * u / f);
    acc = badd(acc, bscale(c, Real(chi)));
  }
  return bscale(acc, Real(f) / (2 * pi));
}

BigReal l_prime_hurwitz_route(long f) {
  const Real pi = const_pi();
  BigReal acc{Real(0), Real(0)};
  for (long u = 1; u < f; ++u) {
    int chi = kronecker_chi(f, Int(u));
    if (chi == 0) continue;
    BigReal z = hurwitz_zeta2(Rat(u, f));
    acc = badd(acc, bscale(z, Real(chi)));
  }
  // d_f = f^(3/2) L(chi,2) / (4 pi) with L(chi,2) = f^-2 * acc
  Real factor = sqrt(Real(f)) / (Real(f) * 4 * pi);
  return bscale(acc, factor);
}

BigReal l_prime_minus1(long f, unsigned digits) {
  if (!is_fundamental_negative(f)) {
    std::ostringstream os;
    os << "l_prime_minus1: -" << f << " is not a fundamental discriminant";
    throw std::invalid_argument(os.str());
  }
  PrecisionGuard guard(work_digits(digits, static_cast<unsigned>(f)));
  BigReal a = l_prime_clausen_route(f);
  BigReal b = l_prime_hurwitz_route(f);
  Real diff = abs(a.value - b.value);
  if (diff > a.err + b.err + pow10(-(static_cast<long>(digits) + 5))) {
    std::ostringstream os;
    os << "l_prime_minus1: route disagreement for f = " << f << " (|diff| = " << diff
       << "); this indicates an implementation bug";
    throw std::runtime_error(os.str());
  }
  return a;
}

}  // namespace mahler
