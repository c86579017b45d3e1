#ifndef MAHLER_SEARCH_HPP
#define MAHLER_SEARCH_HPP

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "mahler/intpoly.hpp"

namespace mahler {

struct SearchConfig {
  int ell = 2;       // >= 2
  long bound = 10;   // B: free coefficients and (0,c) constants range over [-B, B]
  bool case1 = true;       // a(0) = +-1
  bool case2 = true;       // a(0) = 0
  bool sign_plus = true;   // b + 2a = c v^2
  bool sign_minus = true;  // b - 2a = c v^2
  bool vanish_plus = true;   // impose h(1) = 0
  bool vanish_minus = true;  // impose h(-1) = 0
  int threads = 1;
  bool resume = false;
  std::string checkpoint_path;  // empty: no checkpointing
};

struct CandidateRecord {
  IntPoly a, b, v;
  Int c{0};
  int ell = 0;
  std::vector<Int> conductors;  // sorted ascending
  std::string digest;
  long a_index = -1;  // position in the deterministic a-enumeration
  std::string coords; // remaining enumeration coordinates
};

struct SearchSummary {
  long a_total = 0;
  long a_processed = 0;
  long candidates_checked = 0;
  long permissible_found = 0;
  long emitted = 0;
  long strong_tuples = 0;  // distinct tuples with s = 1
  long weak_tuples = 0;    // distinct tuples with s > 1
  bool resumed = false;
};

// Paper-reported reference counts for the comparison report:
// {ell, strong, weak, B}.
struct Table4Row {
  int ell;
  long strong, weak, bound;
};
const std::array<Table4Row, 6>& table4_reference();

// All candidate a(x) = x^k * prod Phi_n of shift 2*ell with sign +1,
// deterministic order; which_case 1 keeps k = 0, case 2 keeps k >= 1.
std::vector<IntPoly> enumerate_a(int ell, int which_case);

// Candidate (v, c) pairs for one a: v = a0 + a1 x + ... + a0 x^ell with the
// middle coefficient (even ell) solved from the vanishing condition at
// `vanish` through either v(s) = 0 or (c v^2 - 4*sign*a)(s) = 0.
// sign = +1 encodes b + 2a = c v^2, sign = -1 encodes b - 2a = c v^2.
std::vector<std::pair<IntPoly, Int>> enumerate_v(int ell, long bound, int which_case, int vanish,
                                                 int sign, const IntPoly& a);

using SearchSink = std::function<void(const CandidateRecord&)>;

// Enumerate, check, deduplicate on the sorted conductor tuple (first found
// wins), emit through sink in deterministic order, checkpoint per a-block.
SearchSummary run_search(const SearchConfig& cfg, const SearchSink& sink);

// Stable hash of the semantic search parameters (checkpoint compatibility).
std::string search_config_hash(const SearchConfig& cfg);

std::string fnv1a_hex(const std::string& data);

}  // namespace mahler

#endif  // MAHLER_SEARCH_HPP
