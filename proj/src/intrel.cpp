#include "mahler/intrel.hpp"

#include <algorithm>
#include <stdexcept>

namespace mahler {

namespace {

Rat dot(const IntVec& a, const IntVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i] * b[i]);
  return s;
}

Int round_rat(const Rat& q) {
  // nearest integer, ties toward +inf (any fixed tie rule works here)
  Int num2 = numerator(q) * 2 + denominator(q);
  Int den2 = denominator(q) * 2;
  Int fl;
  mpz_fdiv_q(fl.backend().data(), num2.backend().data(), den2.backend().data());
  return fl;
}

struct Gso {
  std::vector<std::vector<Rat>> mu;
  std::vector<Rat> B;
};

// mu and |b*_i|^2 from scratch via the Gram-matrix recursion.
Gso compute_gso(const IntMatrix& b) {
  const size_t n = b.size();
  Gso g;
  g.mu.assign(n, std::vector<Rat>(n, Rat(0)));
  g.B.assign(n, Rat(0));
  std::vector<std::vector<Rat>> r(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j <= i; ++j) {
      Rat v = dot(b[i], b[j]);
      for (size_t k = 0; k < j; ++k) v -= g.mu[j][k] * r[i][k];
      r[i][j] = v;
      if (j < i) g.mu[i][j] = v / g.B[j];
    }
    g.mu[i][i] = 1;
    g.B[i] = r[i][i];
    if (g.B[i] == 0) throw std::invalid_argument("lll_reduce: rows are linearly dependent");
  }
  return g;
}

void size_reduce(IntMatrix& b, Gso& g, size_t k, size_t l) {
  if (abs(g.mu[k][l]) * 2 <= 1) return;
  Int q = round_rat(g.mu[k][l]);
  for (size_t i = 0; i < b[k].size(); ++i) b[k][i] -= q * b[l][i];
  Rat qq(q);
  for (size_t j = 0; j < l; ++j) g.mu[k][j] -= qq * g.mu[l][j];
  g.mu[k][l] -= qq;
}

// Exchange step bookkeeping (Cohen, Algorithm 2.6.3).
void swap_rows(IntMatrix& b, Gso& g, size_t k) {
  std::swap(b[k], b[k - 1]);
  const size_t n = b.size();
  Rat mu_old = g.mu[k][k - 1];
  Rat B_new = g.B[k] + mu_old * mu_old * g.B[k - 1];
  g.mu[k][k - 1] = mu_old * g.B[k - 1] / B_new;
  Rat Bk_new = g.B[k - 1] * g.B[k] / B_new;
  g.B[k] = Bk_new;
  g.B[k - 1] = B_new;
  for (size_t j = 0; j + 1 < k; ++j) std::swap(g.mu[k][j], g.mu[k - 1][j]);
  for (size_t i = k + 1; i < n; ++i) {
    Rat t = g.mu[i][k];
    g.mu[i][k] = g.mu[i][k - 1] - mu_old * t;
    g.mu[i][k - 1] = t + g.mu[k][k - 1] * g.mu[i][k];
  }
}

}  // namespace

IntMatrix lll_reduce(IntMatrix basis, const Rat& delta) {
  if (basis.empty()) return basis;
  if (!(delta > Rat(1, 4) && delta < 1))
    throw std::invalid_argument("lll_reduce: need 1/4 < delta < 1");
  const size_t n = basis.size();
  for (const auto& row : basis)
    if (row.size() != basis[0].size())
      throw std::invalid_argument("lll_reduce: ragged matrix");

  Gso g = compute_gso(basis);
  size_t k = 1;
  while (k < n) {
    size_reduce(basis, g, k, k - 1);
    if (g.B[k] >= (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.B[k - 1]) {
      for (size_t l = k - 1; l-- > 0;) size_reduce(basis, g, k, l);
      ++k;
    } else {
      swap_rows(basis, g, k);
      k = std::max<size_t>(k - 1, 1);
    }
  }
  return basis;
}

std::optional<RelationResult> lindep_once(const std::vector<Real>& xs, unsigned digits) {
  if (xs.size() < 2) throw std::invalid_argument("lindep: need at least two inputs");
  const size_t n = xs.size();
  const long g_guard = 10;
  Real lambda = pow10(static_cast<long>(digits) - g_guard);

  IntMatrix basis(n, IntVec(n + 1, Int(0)));
  for (size_t i = 0; i < n; ++i) {
    basis[i][i] = 1;
    basis[i][n] = round_to_int(lambda * xs[i]);
  }
  IntMatrix red = lll_reduce(std::move(basis), Rat(99, 100));

  // shortest reduced row
  size_t best = 0;
  Int best_norm{-1};
  for (size_t i = 0; i < n; ++i) {
    Int norm = 0;
    for (const Int& v : red[i]) norm += v * v;
    if (best_norm < 0 || norm < best_norm) {
      best_norm = norm;
      best = i;
    }
  }
  std::vector<Int> coeff(red[best].begin(), red[best].begin() + static_cast<long>(n));
  bool all_zero = std::all_of(coeff.begin(), coeff.end(), [](const Int& v) { return v == 0; });
  if (all_zero) return std::nullopt;

  // normalize: primitive, first nonzero coefficient positive
  Int content = 0;
  for (const Int& v : coeff) content = gcd(content, v);
  for (Int& v : coeff) v /= content;
  for (const Int& v : coeff) {
    if (v == 0) continue;
    if (v < 0)
      for (Int& w : coeff) w = -w;
    break;
  }

  // coefficient height cap: beyond this, treat as a noise fit
  for (const Int& v : coeff)
    if (abs(v) > Int("1000000000000")) return std::nullopt;

  Real resid = 0;
  Real scale = 1;
  for (size_t i = 0; i < n; ++i) {
    resid += Real(coeff[i]) * xs[i];
    Real a = abs(xs[i]);
    if (a > scale) scale = a;
  }
  resid = abs(resid);
  Real thresh = pow10(-(static_cast<long>(digits) - 3 * g_guard / 2)) * scale;
  if (!(resid < thresh)) return std::nullopt;

  RelationResult out;
  out.coefficients = std::move(coeff);
  out.residual = resid;
  if (out.coefficients[0] != 0) {
    for (size_t j = 1; j < n; ++j)
      out.rationals.emplace_back(Rat(-out.coefficients[j], out.coefficients[0]));
  }
  return out;
}

std::optional<RelationResult> lindep(const std::function<std::vector<Real>(unsigned)>& provider,
                                     unsigned digits) {
  std::optional<RelationResult> first;
  {
    PrecisionGuard guard(work_digits(digits));
    std::vector<Real> xs = provider(digits);
    first = lindep_once(xs, digits);
  }
  if (!first) return std::nullopt;

  const unsigned digits2 = digits + digits / 2;
  PrecisionGuard guard(work_digits(digits2));
  std::vector<Real> xs2 = provider(digits2);
  if (xs2.size() != first->coefficients.size())
    throw std::logic_error("lindep: provider changed its arity");
  Real resid = 0;
  Real scale = 1;
  for (size_t i = 0; i < xs2.size(); ++i) {
    resid += Real(first->coefficients[i]) * xs2[i];
    Real a = abs(xs2[i]);
    if (a > scale) scale = a;
  }
  resid = abs(resid);
  Real thresh = pow10(-(static_cast<long>(digits2) - 15)) * scale;
  if (!(resid < thresh)) return std::nullopt;
  first->residual = resid;
  first->confirmed_at = digits2;
  return first;
}

}  // namespace mahler
