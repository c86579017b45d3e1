// Test-only oracles, independent of the implementation paths they check.
#ifndef MAHLER_TESTS_ORACLES_HPP
#define MAHLER_TESTS_ORACLES_HPP

#include <complex>
#include <random>
#include <vector>

#include "mahler/intpoly.hpp"
#include "mahler/intrel.hpp"

namespace mahler::testing {

// --- rational-coefficient Euclidean gcd (oracle for poly_gcd) ---

using RatPoly = std::vector<Rat>;  // ascending

inline RatPoly rp_from(const IntPoly& p) {
  RatPoly r;
  for (const auto& c : p.coeffs()) r.emplace_back(c);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

inline RatPoly rp_rem(RatPoly a, const RatPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rat q = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

// monic gcd over Q
inline RatPoly rp_gcd(RatPoly a, RatPoly b) {
  while (!b.empty()) {
    RatPoly r = rp_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

// --- unit-circle zero counting by the argument principle (double precision) ---

inline int roots_inside_radius(const IntPoly& p, double radius, int samples = 1 << 14) {
  using C = std::complex<double>;
  IntPoly dp = p.derivative();
  double acc = 0;
  for (int j = 0; j < samples; ++j) {
    double th = 2 * 3.14159265358979323846 * j / samples;
    C z = std::polar(radius, th);
    C pv = 0, dv = 0;
    for (int i = p.degree(); i >= 0; --i) pv = pv * z + C(p[i].convert_to<double>());
    for (int i = dp.degree(); i >= 0; --i) dv = dv * z + C(dp[i].convert_to<double>());
    acc += (dv / pv * z).real();
  }
  return static_cast<int>(std::lround(acc / samples));
}

// Unit-circle zero count of p (with multiplicity), assuming no further roots
// in the annulus [radius, 1/radius]:  #circle = deg + ord_0 - 2 * N_inside.
inline int circle_zero_count(const IntPoly& p, double radius = 0.95) {
  int inside = roots_inside_radius(p, radius);
  return p.degree() + p.order_at_zero() - 2 * inside;
}

// --- deterministic RNG helpers ---

inline std::mt19937_64 rng(unsigned long long seed) { return std::mt19937_64(seed); }

inline IntPoly random_poly(std::mt19937_64& g, int max_deg, long coeff_bound) {
  std::uniform_int_distribution<int> dd(0, max_deg);
  std::uniform_int_distribution<long> cc(-coeff_bound, coeff_bound);
  int d = dd(g);
  std::vector<Int> c(static_cast<size_t>(d) + 1);
  for (auto& v : c) v = cc(g);
  IntPoly p{std::move(c)};
  return p.is_zero() ? IntPoly{1} : p;
}

// --- LLL reducedness checker (independent exact GSO) ---

inline bool is_size_reduced_and_lovasz(const IntMatrix& b, const Rat& delta) {
  const size_t n = b.size();
  std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, Rat(0)));
  std::vector<Rat> B(n, Rat(0));
  std::vector<std::vector<Rat>> r(n, std::vector<Rat>(n, Rat(0)));
  auto dot = [&](const IntVec& x, const IntVec& y) {
    Rat s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += Rat(x[i] * y[i]);
    return s;
  };
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j <= i; ++j) {
      Rat v = dot(b[i], b[j]);
      for (size_t k = 0; k < j; ++k) v -= mu[j][k] * r[i][k];
      r[i][j] = v;
      if (j < i) mu[i][j] = v / B[j];
    }
    B[i] = r[i][i];
  }
  for (size_t i = 1; i < n; ++i)
    for (size_t j = 0; j < i; ++j)
      if (abs(mu[i][j]) * 2 > 1) return false;
  for (size_t k = 1; k < n; ++k)
    if (B[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) return false;
  return true;
}

}  // namespace mahler::testing

#endif
