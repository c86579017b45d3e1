#include "mahler/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace mahler {

namespace {

std::mutex g_mutex;
std::vector<Rat> g_even;       // g_even[n] = B_{2n}
std::vector<Rat> g_over_fact;  // B_k / (k+1)!
Int g_over_fact_factorial{1};  // (size)! while extending g_over_fact
std::vector<Rat> g_clausen;    // |B_{2n}| / (2n (2n+1) (2n)!)
Int g_clausen_factorial{1};    // (2*size)! while extending g_clausen

// Tangent numbers T_1..T_m by the triangle recurrence, then
// B_{2n} = (-1)^(n-1) * T_n * 2n / (4^n (4^n - 1)).
void grow_even_locked(size_t m) {
  if (g_even.size() > m) return;
  std::vector<Int> t(m + 1, Int(0));
  if (m >= 1) t[1] = 1;
  for (size_t k = 2; k <= m; ++k) t[k] = Int(static_cast<long>(k - 1)) * t[k - 1];
  for (size_t k = 2; k <= m; ++k)
    for (size_t j = k; j <= m; ++j)
      t[j] = Int(static_cast<long>(j - k)) * t[j - 1] + Int(static_cast<long>(j - k + 2)) * t[j];
  g_even.assign(m + 1, Rat(0));
  g_even[0] = 1;
  Int four_n = 1;
  for (size_t n = 1; n <= m; ++n) {
    four_n *= 4;
    Rat b(t[n] * Int(2 * static_cast<long>(n)), four_n * (four_n - 1));
    g_even[n] = (n % 2 == 1) ? b : -b;
  }
}

Rat bernoulli_locked(unsigned n) {
  if (n == 0) return Rat(1);
  if (n == 1) return Rat(-1, 2);
  if (n % 2 == 1) return Rat(0);
  size_t half = n / 2;
  if (g_even.size() <= half) grow_even_locked(half + half / 2 + 16);
  return g_even[half];
}

}  // namespace

Rat bernoulli(unsigned n) {
  std::lock_guard<std::mutex> lock(g_mutex);
  return bernoulli_locked(n);
}

Rat bernoulli_over_factorial(unsigned n) {
  std::lock_guard<std::mutex> lock(g_mutex);
  while (g_over_fact.size() <= n) {
    unsigned k = static_cast<unsigned>(g_over_fact.size());
    g_over_fact_factorial *= (k + 1);  // now (k+1)!
    g_over_fact.push_back(bernoulli_locked(k) / Rat(g_over_fact_factorial));
  }
  return g_over_fact[n];
}

Rat clausen_coefficient(unsigned n) {
  std::lock_guard<std::mutex> lock(g_mutex);
  while (g_clausen.size() <= n) {
    unsigned k = static_cast<unsigned>(g_clausen.size());  // building entry for 2k
    if (k == 0) {
      g_clausen.push_back(Rat(0));  // unused slot, keeps indexing simple
    } else {
      g_clausen_factorial *= static_cast<long>(2 * k - 1);
      g_clausen_factorial *= static_cast<long>(2 * k);  // now (2k)!
      Rat denom = Rat(2 * k) * Rat(2 * k + 1) * Rat(g_clausen_factorial);
      g_clausen.push_back(abs(bernoulli_locked(2 * k)) / denom);
    }
  }
  return g_clausen[n];
}

}  // namespace mahler
