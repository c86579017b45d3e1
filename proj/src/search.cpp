#include "mahler/search.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "mahler/cyclotomic.hpp"
#include "mahler/factor.hpp"
#include "mahler/permissible.hpp"

namespace mahler {

const std::array<Table4Row, 6>& table4_reference() {
  static const std::array<Table4Row, 6> rows = {{
      {2, 10, 3, 100},
      {3, 10, 46, 100},
      {4, 20, 28, 100},
      {5, 3, 28, 30},
      {6, 12, 62, 30},
      {7, 1, 9, 10},
  }};
  return rows;
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string search_config_hash(const SearchConfig& cfg) {
  std::ostringstream os;
  os << "ell=" << cfg.ell << ";B=" << cfg.bound << ";c1=" << cfg.case1 << ";c2=" << cfg.case2
     << ";sp=" << cfg.sign_plus << ";sm=" << cfg.sign_minus << ";vp=" << cfg.vanish_plus
     << ";vm=" << cfg.vanish_minus;
  return fnv1a_hex(os.str());
}

std::vector<IntPoly> enumerate_a(int ell, int which_case) {
  if (ell < 2) throw std::invalid_argument("enumerate_a: need ell >= 2");
  const long shift = 2L * ell;
  std::vector<long> ns = cyclotomic_indices_with_phi_upto(shift);

  // Multisets over ns with total phi <= 2*ell, even remainder, even count of
  // Phi_1 factors; case 1 has no x-power (k = 0), case 2 has k >= 1.
  std::vector<std::vector<long>> multisets;
  std::vector<long> cur;
  std::function<void(size_t, long, int)> rec = [&](size_t idx, long phi_left, int phi1_count) {
    long used = shift - phi_left;
    if ((shift - used) % 2 == 0 && phi1_count % 2 == 0) {
      long k = (shift - used) / 2;
      if ((which_case == 1 && k == 0) || (which_case == 2 && k >= 1)) multisets.push_back(cur);
    }
    for (size_t i = idx; i < ns.size(); ++i) {
      long phi = euler_phi(ns[i]);
      if (phi > phi_left) continue;
      cur.push_back(ns[i]);
      rec(i, phi_left - phi, phi1_count + (ns[i] == 1 ? 1 : 0));
      cur.pop_back();
    }
  };
  rec(0, shift, 0);
  std::sort(multisets.begin(), multisets.end());
  multisets.erase(std::unique(multisets.begin(), multisets.end()), multisets.end());

  std::vector<IntPoly> out;
  out.reserve(multisets.size());
  for (const auto& ms : multisets) {
    long phi_sum = 0;
    for (long n : ms) phi_sum += euler_phi(n);
    long k = (shift - phi_sum) / 2;
    IntPoly a = IntPoly::monomial(static_cast<int>(k), 1);
    for (long n : ms) a = a * cyclotomic(n);
    out.push_back(std::move(a));
  }
  return out;
}

namespace {

std::vector<std::pair<long, Int>> a0_c_pairs(int which_case, long bound) {
  std::vector<std::pair<long, Int>> out;
  if (which_case == 2) {
    out.emplace_back(1, Int(1));
    return out;
  }
  out.emplace_back(1, Int(-1));
  out.emplace_back(1, Int(2));
  out.emplace_back(1, Int(-2));
  out.emplace_back(1, Int(3));
  out.emplace_back(2, Int(1));
  for (long c = -bound; c <= bound; ++c) {
    if (c == 0 || !is_squarefree(Int(c))) continue;
    out.emplace_back(0, Int(c));
  }
  return out;
}

IntPoly build_v(int ell, long a0, const std::vector<long>& free, long mid, bool has_mid) {
  std::vector<Int> c(static_cast<size_t>(ell) + 1, Int(0));
  c[0] = a0;
  c[static_cast<size_t>(ell)] = a0;
  for (size_t j = 0; j < free.size(); ++j) {
    c[j + 1] = free[j];
    c[static_cast<size_t>(ell) - (j + 1)] = free[j];
  }
  if (has_mid) c[static_cast<size_t>(ell) / 2] = mid;
  return IntPoly(std::move(c));
}

bool first_nonzero_positive(const IntPoly& v) {
  for (int i = 0; i <= v.degree(); ++i) {
    if (v[i] != 0) return v[i] > 0;
  }
  return false;  // zero polynomial
}

// sqrt of 4*sign*a(s)/c if it is a nonnegative perfect square in Z.
std::optional<Int> middle_route_target(const IntPoly& a, int s, int sign, const Int& c) {
  Int t = 4 * sign * a.eval(Int(s));
  if (c == 0 || t % c != 0) return std::nullopt;
  Int sq = t / c;
  if (sq < 0) return std::nullopt;
  if (mpz_perfect_square_p(sq.backend().data()) == 0) return std::nullopt;
  return sqrt(sq);
}

}  // namespace

std::vector<std::pair<IntPoly, Int>> enumerate_v(int ell, long bound, int which_case, int vanish,
                                                 int sign, const IntPoly& a) {
  if (ell < 2) throw std::invalid_argument("enumerate_v: need ell >= 2");
  if (vanish != 1 && vanish != -1) throw std::invalid_argument("enumerate_v: vanish must be +-1");
  if (sign != 1 && sign != -1) throw std::invalid_argument("enumerate_v: sign must be +-1");

  const bool even_ell = ell % 2 == 0;
  const int n_free = (ell - 1) / 2;
  std::vector<std::pair<IntPoly, Int>> out;
  std::set<std::string> seen;

  auto push = [&](const IntPoly& v, const Int& c) {
    if (v.is_zero() || !first_nonzero_positive(v)) return;
    std::string key = v.to_string() + "|" + c.str();
    if (seen.insert(key).second) out.emplace_back(v, c);
  };

  for (const auto& [a0, c] : a0_c_pairs(which_case, bound)) {
    std::vector<long> free(static_cast<size_t>(n_free), -bound);
    bool running = true;
    if (n_free == 0) running = true;
    while (running) {
      if (even_ell) {
        // 2 sum_{j<ell/2} a_j s^j + a_mid s^{ell/2} at s = vanish
        long s = vanish;
        long s_half = (ell / 2) % 2 == 0 ? 1 : s;
        long twice_sum = 2 * a0;  // j = 0 term, s^0 = 1
        long sj = 1;
        for (int j = 1; j < ell / 2; ++j) {
          sj *= s;
          twice_sum += 2 * free[static_cast<size_t>(j - 1)] * sj;
        }
        // route 1: v(s) = 0
        {
          long mid = -twice_sum * s_half;
          push(build_v(ell, a0, free, mid, true), c);
        }
        // route 2: (c v^2 - 4*sign*a)(s) = 0, i.e. v(s) = +-sqrt(4*sign*a(s)/c)
        if (auto n = middle_route_target(a, static_cast<int>(s), sign, c)) {
          for (int r : {1, -1}) {
            Int mid_big = Int(s_half) * (Int(r) * *n - twice_sum);
            if (mid_big >= std::numeric_limits<long>::min() &&
                mid_big <= std::numeric_limits<long>::max()) {
              push(build_v(ell, a0, free, mid_big.convert_to<long>(), true), c);
            }
          }
        }
      } else {
        // odd ell: v(-1) = 0 automatically; an explicit +1 vanishing target
        // keeps only tuples with v(1) = 0 or (c v^2 - 4*sign*a)(1) = 0.
        IntPoly v = build_v(ell, a0, free, 0, false);
        bool keep = true;
        if (vanish == 1) {
          Int v1 = v.eval(Int(1));
          keep = (v1 == 0);
          if (!keep) {
            if (auto n = middle_route_target(a, 1, sign, c)) keep = (v1 == *n || v1 == -*n);
          }
        }
        if (keep) push(v, c);
      }
      // odometer over the free coefficients
      running = false;
      for (size_t j = 0; j < free.size(); ++j) {
        if (free[j] < bound) {
          ++free[j];
          for (size_t i = 0; i < j; ++i) free[i] = -bound;
          running = true;
          break;
        }
      }
    }
  }
  return out;
}

namespace {

struct BlockResult {
  std::vector<CandidateRecord> passing;  // deterministic in-block order
  long checked = 0;
};

std::string tuple_key(const std::vector<Int>& conductors) {
  std::ostringstream os;
  for (size_t i = 0; i < conductors.size(); ++i) os << (i ? "," : "") << conductors[i];
  return os.str();
}

BlockResult process_block(const SearchConfig& cfg, int which_case, long a_index,
                          const IntPoly& a) {
  BlockResult out;
  std::vector<int> signs;
  if (cfg.sign_plus) signs.push_back(1);
  if (cfg.sign_minus) signs.push_back(-1);
  std::vector<int> vanishes;
  if (cfg.vanish_plus) vanishes.push_back(1);
  if (cfg.vanish_minus) vanishes.push_back(-1);

  for (int sign : signs) {
    std::set<std::string> seen_vc;  // the two vanish targets can coincide
    for (int vanish : vanishes) {
      for (const auto& [v, c] : enumerate_v(cfg.ell, cfg.bound, which_case, vanish, sign, a)) {
        std::string key = v.to_string() + "|" + c.str();
        if (!seen_vc.insert(key).second) continue;
        IntPoly cv2 = (v * v) * c;
        IntPoly b = (sign > 0) ? cv2 - a * Int(2) : cv2 + a * Int(2);
        if (b.is_zero()) continue;
        const Int& b0 = b[0];
        if (!(b0 == 0 || b0 == 1 || b0 == 2)) continue;  // necessary by (1)+(3)
        ++out.checked;
        PermissibilityReport rep = check(a, b, /*short_circuit=*/true);
        if (!rep.permissible) continue;
        CandidateRecord rec;
        rec.a = rep.a;
        rec.b = rep.b;
        rec.v = v;
        rec.c = c;
        rec.ell = cfg.ell;
        rec.conductors = rep.conductors;
        rec.a_index = a_index;
        {
          std::ostringstream os;
          os << "case=" << which_case << ";sign=" << (sign > 0 ? "+" : "-")
             << ";vanish=" << (vanish > 0 ? "+1" : "-1") << ";v=" << v.to_string()
             << ";c=" << c;
          rec.coords = os.str();
        }
        rec.digest = fnv1a_hex(rec.a.to_string() + "|" + rec.b.to_string() + "|" +
                               tuple_key(rec.conductors));
        out.passing.push_back(std::move(rec));
      }
    }
  }
  return out;
}

struct Checkpoint {
  std::string config_hash;
  std::set<long> completed;
  std::set<std::string> tuples;
};

bool load_checkpoint(const std::string& path, Checkpoint& cp) {
  std::ifstream in(path);
  if (!in) return false;
  nlohmann::json j;
  try {
    in >> j;
  } catch (...) {
    return false;
  }
  if (j.value("type", "") != "checkpoint" || j.value("version", 0) != 1) return false;
  const auto& p = j.at("payload");
  cp.config_hash = p.value("config_hash", "");
  for (const auto& v : p.at("completed")) cp.completed.insert(v.get<long>());
  for (const auto& t : p.at("tuples")) cp.tuples.insert(t.get<std::string>());
  return true;
}

void save_checkpoint(const std::string& path, const Checkpoint& cp) {
  nlohmann::ordered_json p;
  p["config_hash"] = cp.config_hash;
  p["completed"] = cp.completed;
  p["tuples"] = cp.tuples;
  nlohmann::ordered_json j;
  j["type"] = "checkpoint";
  j["version"] = 1;
  j["payload"] = p;
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump() << "\n";
  }
  std::rename(tmp.c_str(), path.c_str());
}

}  // namespace

SearchSummary run_search(const SearchConfig& cfg, const SearchSink& sink) {
  if (cfg.ell < 2) throw std::invalid_argument("run_search: need ell >= 2");
  SearchSummary summary;

  struct Task {
    int which_case;
    long a_index;
    IntPoly a;
  };
  std::vector<Task> tasks;
  {
    long idx = 0;
    if (cfg.case1)
      for (auto& a : enumerate_a(cfg.ell, 1)) tasks.push_back({1, idx++, std::move(a)});
    if (cfg.case2)
      for (auto& a : enumerate_a(cfg.ell, 2)) tasks.push_back({2, idx++, std::move(a)});
  }
  summary.a_total = static_cast<long>(tasks.size());

  Checkpoint cp;
  cp.config_hash = search_config_hash(cfg);
  if (cfg.resume && !cfg.checkpoint_path.empty()) {
    Checkpoint loaded;
    if (load_checkpoint(cfg.checkpoint_path, loaded)) {
      if (loaded.config_hash != cp.config_hash)
        throw std::runtime_error("run_search: checkpoint belongs to a different configuration");
      cp = std::move(loaded);
      summary.resumed = true;
    }
  }

  std::set<std::string> strong_seen, weak_seen;
  for (const std::string& t : cp.tuples) {
    if (t.empty()) continue;
    if (t.find(',') == std::string::npos)
      strong_seen.insert(t);
    else
      weak_seen.insert(t);
  }

  auto commit_block = [&](const Task& task, BlockResult&& res) {
    summary.candidates_checked += res.checked;
    for (auto& rec : res.passing) {
      ++summary.permissible_found;
      std::string key = tuple_key(rec.conductors);
      if (cp.tuples.insert(key).second) {
        ++summary.emitted;
        if (rec.conductors.size() == 1) strong_seen.insert(key);
        if (rec.conductors.size() > 1) weak_seen.insert(key);
        sink(rec);
      }
    }
    cp.completed.insert(task.a_index);
    ++summary.a_processed;
    if (!cfg.checkpoint_path.empty()) save_checkpoint(cfg.checkpoint_path, cp);
  };

  if (cfg.threads <= 1) {
    for (const Task& t : tasks) {
      if (cp.completed.count(t.a_index)) continue;
      commit_block(t, process_block(cfg, t.which_case, t.a_index, t.a));
    }
  } else {
    // Workers race through blocks; the committer applies them in order so
    // dedup (first found wins) matches the single-threaded run exactly.
    std::vector<const Task*> todo;
    for (const Task& t : tasks)
      if (!cp.completed.count(t.a_index)) todo.push_back(&t);
    std::mutex mu;
    std::condition_variable cv;
    std::map<size_t, BlockResult> done;
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      for (size_t i; (i = next.fetch_add(1)) < todo.size();) {
        BlockResult r = process_block(cfg, todo[i]->which_case, todo[i]->a_index, todo[i]->a);
        std::lock_guard<std::mutex> lock(mu);
        done.emplace(i, std::move(r));
        cv.notify_all();
      }
    };
    std::vector<std::thread> pool;
    const size_t nw = std::min<size_t>(static_cast<size_t>(cfg.threads),
                                       std::max<size_t>(1, todo.size()));
    pool.reserve(nw);
    for (size_t i = 0; i < nw; ++i) pool.emplace_back(worker);
    for (size_t i = 0; i < todo.size(); ++i) {
      BlockResult r;
      {
        std::unique_lock<std::mutex> lock(mu);
        cv.wait(lock, [&] { return done.count(i) > 0; });
        r = std::move(done.at(i));
        done.erase(i);
      }
      commit_block(*todo[i], std::move(r));
    }
    for (auto& th : pool) th.join();
  }

  summary.strong_tuples = static_cast<long>(strong_seen.size());
  summary.weak_tuples = static_cast<long>(weak_seen.size());
  return summary;
}

}  // namespace mahler
