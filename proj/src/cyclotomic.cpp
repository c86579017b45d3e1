#include "mahler/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace mahler {

long euler_phi(long n) {
  if (n <= 0) throw std::invalid_argument("euler_phi: need n >= 1");
  long phi = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    phi -= phi / p;
    while (n % p == 0) n /= p;
  }
  if (n > 1) phi -= phi / n;
  return phi;
}

int moebius_mu(long n) {
  if (n <= 0) throw std::invalid_argument("moebius_mu: need n >= 1");
  int mu = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

std::vector<long> divisors(long n) {
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

const IntPoly& cyclotomic(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic: need n >= 1");
  static std::map<long, IntPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);

  std::function<const IntPoly&(long)> get = [&](long m) -> const IntPoly& {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    // x^m - 1 divided by Phi_d for every proper divisor d of m.
    IntPoly num = IntPoly::monomial(static_cast<int>(m), 1) - IntPoly::constant(1);
    for (long d : divisors(m)) {
      if (d == m) continue;
      num = *IntPoly::divide_exact(num, get(d));
    }
    return cache.emplace(m, std::move(num)).first->second;
  };
  return get(n);
}

std::vector<long> cyclotomic_indices_with_phi_upto(long max_phi) {
  std::vector<long> out;
  if (max_phi < 1) return out;
  // phi(n) >= sqrt(n/2), so n <= 2*max_phi^2 suffices.
  for (long n = 1; n <= 2 * max_phi * max_phi; ++n)
    if (euler_phi(n) <= max_phi) out.push_back(n);
  return out;
}

namespace {

// Phi_n(2) = prod_{d | n} (2^d - 1)^{mu(n/d)}, computed without building Phi_n.
Int cyclotomic_at_two(long n) {
  if (n == 1) return Int(1);
  Int num = 1, den = 1;
  for (long d : divisors(n)) {
    int mu = moebius_mu(n / d);
    if (mu == 0) continue;
    Int v = (Int(1) << static_cast<unsigned>(d)) - 1;
    (mu > 0 ? num : den) *= v;
  }
  return num / den;
}

}  // namespace

std::optional<CyclotomicProduct> detect_cyclotomic_product(const IntPoly& p) {
  if (p.is_zero() || p.leading() != 1) return std::nullopt;
  CyclotomicProduct out;
  out.x_power = p.order_at_zero();
  IntPoly rem = *IntPoly::divide_exact(p, IntPoly::monomial(out.x_power, 1));
  if (rem.degree() == 0) return out;

  Int rem_at_two = rem.eval(Int(2));
  for (long n : cyclotomic_indices_with_phi_upto(rem.degree())) {
    if (rem.degree() == 0) break;
    if (euler_phi(n) > rem.degree()) continue;
    // Cheap necessary condition before building Phi_n: Phi_n(2) | rem(2).
    if (rem_at_two % cyclotomic_at_two(n) != 0) continue;
    const IntPoly& cyc = cyclotomic(n);
    int mult = 0;
    while (auto q = IntPoly::divide_exact(rem, cyc)) {
      rem = std::move(*q);
      ++mult;
    }
    if (mult > 0) {
      out.factors.emplace_back(n, mult);
      rem_at_two = rem.eval(Int(2));
    }
  }
  if (!(rem.degree() == 0 && rem.leading() == 1)) return std::nullopt;
  return out;
}

}  // namespace mahler
