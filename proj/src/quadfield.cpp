#include "mahler/quadfield.hpp"

#include <set>
#include <stdexcept>

namespace mahler {

Int fundamental_conductor(const Int& d) {
  if (d >= 0) throw std::invalid_argument("fundamental_conductor: need d < 0");
  if (!is_squarefree(d)) throw std::invalid_argument("fundamental_conductor: d not squarefree");
  Int r = ((d % 4) + 4) % 4;
  return r == 1 ? Int(-d) : Int(-4 * d);
}

QuadElement eval_g_at_quadratic(const IntPoly& g, const Rat& u0) {
  if (!(abs(u0) < 2)) throw std::invalid_argument("eval_g_at_quadratic: need |u0| < 2");
  // Horner in Z[alpha] with alpha^2 = u0*alpha - 1: value p + q*alpha.
  Rat p = 0, q = 0;
  for (int i = g.degree(); i >= 0; --i) {
    Rat np = -q + Rat(g[i]);
    Rat nq = p + q * u0;
    p = np;
    q = nq;
  }
  // alpha = u0/2 + (s/2)*sqrt(d1) where u0^2 - 4 = -k*s^2, d1 = -k < 0.
  QuadElement out;
  if (q == 0) {
    out.A = p;
    return out;
  }
  SquarefreeKernel k = squarefree_kernel(u0 * u0 - 4);
  out.A = p + q * u0 / 2;
  out.B = q * k.square / 2;
  out.d1 = -k.kernel;
  if (out.B == 0) out.d1 = 1;
  return out;
}

namespace {

std::optional<Rat> rational_sqrt(const Rat& q) {
  if (q < 0) return std::nullopt;
  if (q == 0) return Rat(0);
  Int num = numerator(q), den = denominator(q);
  if (mpz_perfect_square_p(num.backend().data()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.backend().data()) == 0) return std::nullopt;
  return Rat(sqrt(num), sqrt(den));
}

}  // namespace

MultiquadraticResult multiquadratic_test(const QuadElement& e) {
  if (e.is_zero()) throw std::invalid_argument("multiquadratic_test: zero element");
  MultiquadraticResult out;
  if (e.B == 0) {
    out.ok = true;
    out.m1 = signed_kernel(e.A);
    out.m2 = signed_kernel(Rat(e.d1) * e.A);
    return out;
  }
  // sqrt(A + B sqrt(d1)) denests iff the norm A^2 - B^2 d1 is a rational
  // square N^2; then it equals sqrt((A+N)/2) + sqrt((A-N)/2) up to signs.
  Rat norm = e.A * e.A - e.B * e.B * Rat(e.d1);
  auto N = rational_sqrt(norm);
  if (!N) return out;
  Rat u = (e.A + *N) / 2;
  Rat w = (e.A - *N) / 2;
  if (u == 0 || w == 0) return out;
  out.ok = true;
  out.m1 = signed_kernel(u);
  out.m2 = signed_kernel(w);
  return out;
}

namespace {

Int class_mul(const Int& a, const Int& b) { return signed_kernel(Rat(a) * Rat(b)); }

std::vector<Int> negative_conductors(const std::set<Int>& classes) {
  std::set<Int> out;
  for (const Int& s : classes)
    if (s < 0) out.insert(fundamental_conductor(s));
  return {out.begin(), out.end()};
}

}  // namespace

ConductorResult conductor_set(const ToricRoot& alpha, const IntPoly& g) {
  ConductorResult out;
  if (!alpha.u0) {
    out.status = ConductorStatus::UnsupportedDegree;
    return out;
  }
  const Rat& u0 = *alpha.u0;
  if (u0 == 2 || u0 == -2) {
    Int val = g.eval(Int(u0 == 2 ? 1 : -1));
    if (val == 0) throw std::logic_error("conductor_set: g vanishes at a root of h");
    Int k = signed_kernel(Rat(val));
    if (k < 0) out.conductors.push_back(fundamental_conductor(k));
    return out;
  }

  Int d_alpha = signed_kernel(u0 * u0 - 4);  // negative squarefree
  QuadElement e = eval_g_at_quadratic(g, u0);
  if (e.is_zero()) throw std::logic_error("conductor_set: g vanishes at a root of h");
  MultiquadraticResult mq = multiquadratic_test(e);
  if (!mq.ok) {
    out.status = ConductorStatus::NotMultiquadratic;
    return out;
  }
  // Subgroup of Q^x / squares generated by the field generators; its
  // negative classes give the imaginary quadratic subfields.
  std::set<Int> classes{Int(1)};
  for (const Int& gen : {d_alpha, *mq.m1, *mq.m2}) {
    std::set<Int> next = classes;
    for (const Int& s : classes) next.insert(class_mul(s, gen));
    classes = next;
  }
  out.conductors = negative_conductors(classes);
  return out;
}

}  // namespace mahler
