#include "mahler/quadrature.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace mahler {

namespace {

// One abscissa on (-1, 1), stored as the distance to the nearer endpoint:
// for t > 0, 1 - x(t) = 2 / (1 + e^{2y}) with y = (pi/2) sinh t.
struct Node {
  Real offset;  // distance from the endpoint, in (0, 1]
  Real weight;  // w(t) = (pi/2) cosh t / cosh^2 y
};

struct LevelTable {
  // level k holds the nodes for t = j * 2^-k, j odd (level 0: all j >= 0)
  std::vector<std::vector<Node>> levels;
  Real t_max{0};
};

using TablePtr = std::shared_ptr<const LevelTable>;

Node make_node(const Real& t, const Real& pi) {
  Node n;
  Real y = (pi / 2) * sinh(t);
  n.offset = 2 / (1 + exp(2 * y));
  Real ch = cosh(y);
  n.weight = (pi / 2) * cosh(t) / (ch * ch);
  return n;
}

TablePtr node_table(int up_to_level) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, int>, TablePtr> cache;
  const unsigned prec = Real::default_precision();
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(prec, up_to_level);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  auto table = std::make_shared<LevelTable>();
  const Real pi = const_pi();
  // Truncate where the offset drops below the square of the working
  // resolution, so integrable power singularities up to offset^-1/2 still
  // leave a tail below the target.
  const Real target = Real(2 * (prec + 8)) * log(Real(10));
  table->t_max = asinh(target / pi);

  table->levels.resize(static_cast<size_t>(up_to_level) + 1);
  const double tmax_d = table->t_max.convert_to<double>();
  {
    Real h(1);
    std::vector<Node>& lvl = table->levels[0];
    for (long j = 0; j * 1.0 <= tmax_d; ++j) lvl.push_back(make_node(Real(j) * h, pi));
  }
  for (int k = 1; k <= up_to_level; ++k) {
    Real h = pow(Real(2), -k);
    std::vector<Node>& lvl = table->levels[static_cast<size_t>(k)];
    const double hd = std::pow(2.0, -k);
    for (long j = 1; j * hd <= tmax_d; j += 2) lvl.push_back(make_node(Real(j) * h, pi));
  }
  cache[key] = table;
  return table;
}

}  // namespace

DEResult tanh_sinh(const std::function<Real(const Real&)>& f, const Real& lo, const Real& hi,
                   const Real& tol, int max_level) {
  DEResult out;
  const Real len = hi - lo;
  if (len <= 0) return {Real(0), Real(0), true, 0};
  TablePtr table = node_table(max_level);
  const Real half = len / 2;

  // theta for a node at signed t: offset d from the nearer endpoint.
  auto eval_pair = [&](const Node& n, bool center) -> Real {
    Real d = half * n.offset;
    Real th_lo = lo + d;
    if (center) return Real(n.weight * f(th_lo));  // t = 0: offset = 1, midpoint
    Real th_hi = hi - d;
    Real fsum = f(th_lo) + f(th_hi);
    return Real(n.weight * fsum);
  };

  Real h(1);
  Real sum = 0;
  {
    const auto& lvl = table->levels[0];
    for (size_t j = 0; j < lvl.size(); ++j) sum += eval_pair(lvl[j], j == 0);
  }
  Real prev = sum * half;  // h = 1
  Real prev_diff = 0;
  for (int k = 1; k <= max_level; ++k) {
    h /= 2;
    const auto& lvl = table->levels[static_cast<size_t>(k)];
    for (const Node& n : lvl) sum += eval_pair(n, false);
    Real cur = sum * half * h;
    Real diff = abs(cur - prev);
    out.value = cur;
    out.levels = k;
    if (k >= 3 && diff <= tol) {
      out.err = diff + ulp_of(cur) * Real(static_cast<long>(lvl.size() + 16));
      out.converged = true;
      return out;
    }
    prev = cur;
    prev_diff = diff;
  }
  out.err = prev_diff;
  out.converged = false;
  return out;
}

}  // namespace mahler
