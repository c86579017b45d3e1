#ifndef MAHLER_INTREL_HPP
#define MAHLER_INTREL_HPP

#include <functional>
#include <optional>
#include <vector>

#include "mahler/real.hpp"

namespace mahler {

using IntVec = std::vector<Int>;
using IntMatrix = std::vector<IntVec>;

// Exact LLL reduction (rational Gram-Schmidt bookkeeping, integer basis).
// Rows are basis vectors; requires linearly independent rows and
// 1/4 < delta < 1.
IntMatrix lll_reduce(IntMatrix basis, const Rat& delta = Rat(99, 100));

// n0 x0 + n1 x1 + ... + ns xs ~ 0 with r_j = -n_j / n0.
struct RelationResult {
  std::vector<Int> coefficients;
  Real residual{0};
  std::vector<Rat> rationals;  // populated iff coefficients[0] != 0
  unsigned confirmed_at = 0;   // digits of the re-verification pass
};

// Single detection pass at the given precision (inputs must carry absolute
// error below 10^-digits).  No relation is a valid answer.
std::optional<RelationResult> lindep_once(const std::vector<Real>& xs, unsigned digits);

// Two-tier protocol: detect at `digits`, then recompute the inputs at
// 1.5x the precision via `provider` and keep the relation only if the
// residual shrinks accordingly.
std::optional<RelationResult> lindep(const std::function<std::vector<Real>(unsigned)>& provider,
                                     unsigned digits);

}  // namespace mahler

#endif  // MAHLER_INTREL_HPP
