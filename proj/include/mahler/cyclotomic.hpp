#ifndef MAHLER_CYCLOTOMIC_HPP
#define MAHLER_CYCLOTOMIC_HPP

#include <optional>
#include <utility>
#include <vector>

#include "mahler/intpoly.hpp"

namespace mahler {

long euler_phi(long n);
int moebius_mu(long n);
std::vector<long> divisors(long n);

// The n-th cyclotomic polynomial, n >= 1 (cached).
const IntPoly& cyclotomic(long n);

// All n with euler_phi(n) <= max_phi, ascending.
std::vector<long> cyclotomic_indices_with_phi_upto(long max_phi);

// Factorization p = x^x_power * prod Phi_n^mult, if p is of that shape.
struct CyclotomicProduct {
  int x_power = 0;
  std::vector<std::pair<long, int>> factors;  // (n, multiplicity), sorted by n
};
std::optional<CyclotomicProduct> detect_cyclotomic_product(const IntPoly& p);

}  // namespace mahler

#endif  // MAHLER_CYCLOTOMIC_HPP
