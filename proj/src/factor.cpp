#include "mahler/factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mahler {

namespace {

bool is_probable_prime(const Int& n) {
  return mpz_probab_prime_p(n.backend().data(), 32) != 0;
}

Int pollard_rho(const Int& n) {
  // Brent's variant; n odd composite, not a prime power of interest here.
  for (Int c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      d = gcd(abs(x - y), n);
    }
    if (d != n) return d;
  }
}

void factor_into(const Int& n, std::map<Int, int>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<Int, int>> factorize(const Int& n) {
  if (n == 0) throw std::invalid_argument("factorize: zero");
  Int rest = abs(n);
  std::map<Int, int> acc;
  for (long p : {2L, 3L, 5L}) {
    while (rest % p == 0) {
      rest /= p;
      ++acc[Int(p)];
    }
  }
  // wheel over 6k+-1 up to 10^6
  for (long p = 7; p <= 1000000 && Int(p) * p <= rest; p += (p % 6 == 1) ? 4 : 2) {
    while (rest % p == 0) {
      rest /= p;
      ++acc[Int(p)];
    }
  }
  if (rest > 1) factor_into(rest, acc);
  return {acc.begin(), acc.end()};
}

bool is_squarefree(const Int& n) {
  if (n == 0) return false;
  for (const auto& [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

void squarefree_square_split(const Int& n, Int& k, Int& m) {
  if (n <= 0) throw std::invalid_argument("squarefree_square_split: need n > 0");
  k = 1;
  m = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e & 1) k *= p;
    for (int i = 0; i < e / 2; ++i) m *= p;
  }
}

SquarefreeKernel squarefree_kernel(const Rat& q) {
  if (q == 0) throw std::invalid_argument("squarefree_kernel: zero");
  SquarefreeKernel out;
  out.sign = q > 0 ? 1 : -1;
  Int num = abs(numerator(q));
  Int den = denominator(q);
  Int kn, mn, kd, md;
  squarefree_square_split(num, kn, mn);
  squarefree_square_split(den, kd, md);
  // q = sign * (kn*mn^2)/(kd*md^2); fold the denominator's squarefree part
  // into the kernel via 1/kd = kd/kd^2.
  out.kernel = kn * kd;
  out.square = Rat(mn, md * kd);
  return out;
}

Int signed_kernel(const Rat& q) {
  SquarefreeKernel k = squarefree_kernel(q);
  return k.sign > 0 ? k.kernel : -k.kernel;
}

}  // namespace mahler
