// Copyright 2026 The circdd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "circdd/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <thread>

#include "circdd/bounds.hpp"
#include "circdd/circulant_graph.hpp"
#include "circdd/error.hpp"
#include "circdd/path_classes.hpp"

namespace circdd {
namespace {

using Clock = std::chrono::steady_clock;

void CheckSearchArgs(std::int64_t n, int degree, int diameter) {
  if (degree < 2) throw Error(ErrorCode::kInvalidArgument, "degree must be >= 2");
  if (diameter < 1) throw Error(ErrorCode::kInvalidArgument, "diameter must be >= 1");
  if (n < 2 || n > kMaxOrder) throw Error(ErrorCode::kInvalidOrder, "order out of range");
  if (degree % 2 == 1 && n % 2 == 1) {
    throw Error(ErrorCode::kParityError,
                "odd degree " + std::to_string(degree) + " needs even n, got " + std::to_string(n));
  }
  if (n < degree + 1) {
    throw Error(ErrorCode::kInvalidArgument, "n must be >= degree + 1");
  }
}

class TreeSearch {
 public:
  TreeSearch(std::int64_t n, int degree, int diameter, const PruneConfig& cfg, SearchMode mode,
             const SearchOptions& options)
      : n_(static_cast<Vertex>(n)),
        t_(static_cast<std::size_t>(degree / 2)),
        half_(degree % 2 == 1),
        diameter_(diameter),
        cfg_(cfg),
        mode_(mode),
        options_(options),
        prune_(cfg.has_ceilings()) {
    const std::int64_t k = cfg.k;
    hi_ = half_ ? n / 2 - k : (n - k) / 2;
    if (cfg.require_s1_eq_1) {
      base_ = {1};
      if (t_ == 1) {
        root_is_leaf_ = true;
      } else {
        for (std::int64_t g = 1 + k; g <= hi_; ++g) items_.push_back(static_cast<Vertex>(g));
      }
    } else {
      for (std::int64_t g = k; g <= hi_; ++g) items_.push_back(static_cast<Vertex>(g));
    }
    if (root_is_leaf_) items_.push_back(0);  // placeholder: the root itself
    item_solutions_.resize(items_.size());
  }

  SearchOutcome Run() {
    const unsigned threads = std::max(1u, std::min<unsigned>(options_.threads,
                                                             static_cast<unsigned>(items_.size())));
    last_report_ = Clock::now();
    if (threads <= 1) {
      Work();
    } else {
      std::vector<std::thread> pool;
      pool.reserve(threads);
      for (unsigned i = 0; i < threads; ++i) pool.emplace_back([this] { Work(); });
      for (auto& th : pool) th.join();
    }

    SearchOutcome out;
    out.nodes_visited = nodes_.load();
    out.pruned = pruned_.load();
    out.budget_hit = budget_hit_.load();
    if (mode_ == SearchMode::kFirstOnly) {
      for (auto& sols : item_solutions_) {
        if (!sols.empty()) {
          out.solutions.push_back(sols.front());
          break;
        }
      }
    } else {
      for (auto& sols : item_solutions_) {
        out.solutions.insert(out.solutions.end(), sols.begin(), sols.end());
      }
      std::sort(out.solutions.begin(), out.solutions.end());
    }
    out.exhausted = !out.budget_hit && out.pruned == 0 && !cut_short_.load();
    if (options_.progress) {
      options_.progress(SearchProgress{out.nodes_visited, out.pruned, subtrees_done_.load(),
                                       items_.size()});
    }
    return out;
  }

 private:
  struct Worker {
    BoundedBfs bfs;
    PathCounter counter;
    std::vector<Vertex> proper;
    std::vector<Vertex> steps;
    std::size_t item = 0;
    std::uint64_t since_report = 0;
  };

  void Work() {
    Worker w;
    for (;;) {
      const std::size_t idx = next_item_.fetch_add(1);
      if (idx >= items_.size()) return;
      if (Aborted(idx)) {
        cut_short_ = true;
        continue;
      }
      w.item = idx;
      w.proper = base_;
      if (!root_is_leaf_) w.proper.push_back(items_[idx]);
      Visit(w);
      ++subtrees_done_;
    }
  }

  bool Aborted(std::size_t idx) const {
    if (budget_hit_.load(std::memory_order_relaxed)) return true;
    return mode_ == SearchMode::kFirstOnly &&
           first_found_.load(std::memory_order_relaxed) <= idx;
  }

  void BuildSteps(Worker& w) const {
    w.steps.clear();
    for (Vertex s : w.proper) w.steps.push_back(s);
    if (half_) w.steps.push_back(n_ / 2);
    for (Vertex s : w.proper) w.steps.push_back(n_ - s);
  }

  bool Admissible(Worker& w) const {
    w.bfs.Run(n_, w.steps, static_cast<std::uint32_t>(diameter_ - 1));
    w.counter.Run(n_, w.steps, diameter_ - 1);
    for (Vertex v : w.counter.touched()) {
      const std::uint32_t i = w.bfs.distance(v);
      if (i == kUnreachable || static_cast<int>(i) >= diameter_) continue;
      for (int d = static_cast<int>(i); d < diameter_; ++d) {
        if (w.counter.count(v, d) > cfg_.ceiling(static_cast<int>(i), d)) return false;
      }
    }
    return true;
  }

  void Report(Worker& w) {
    if (!options_.progress || ++w.since_report < 4096) return;
    w.since_report = 0;
    std::unique_lock lock(report_mu_, std::try_to_lock);
    if (!lock.owns_lock()) return;
    const auto now = Clock::now();
    if (now - last_report_ < options_.progress_interval) return;
    last_report_ = now;
    options_.progress(SearchProgress{nodes_.load(), pruned_.load(), subtrees_done_.load(),
                                     items_.size()});
  }

  // Returns false when the item must stop (budget, or an earlier item or
  // this one already produced the first solution).
  bool Visit(Worker& w) {
    if (Aborted(w.item)) {
      cut_short_ = true;
      return false;
    }
    const std::uint64_t count = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (options_.node_budget != 0 && count > options_.node_budget) {
      budget_hit_ = true;
      return false;
    }
    Report(w);

    BuildSteps(w);
    if (prune_ && !Admissible(w)) {
      pruned_.fetch_add(1, std::memory_order_relaxed);
      return true;
    }
    if (w.proper.size() == t_) {
      if (HasDiameter(w.bfs, n_, w.steps, static_cast<std::uint32_t>(diameter_))) {
        std::vector<std::int64_t> gens(w.proper.begin(), w.proper.end());
        if (half_) gens.push_back(n_ / 2);
        item_solutions_[w.item].push_back(ConnectionSet::Canonical(n_, gens));
        if (mode_ == SearchMode::kFirstOnly) {
          std::size_t cur = first_found_.load();
          while (w.item < cur && !first_found_.compare_exchange_weak(cur, w.item)) {
          }
          cut_short_ = true;
          return false;
        }
      }
      return true;
    }
    const std::int64_t m = w.proper.back();
    for (std::int64_t g = m + cfg_.k; g <= hi_; ++g) {
      w.proper.push_back(static_cast<Vertex>(g));
      const bool go_on = Visit(w);
      w.proper.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  const Vertex n_;
  const std::size_t t_;
  const bool half_;
  const int diameter_;
  const PruneConfig& cfg_;
  const SearchMode mode_;
  const SearchOptions& options_;
  const bool prune_;
  std::int64_t hi_ = 0;
  bool root_is_leaf_ = false;
  std::vector<Vertex> base_;
  std::vector<Vertex> items_;
  std::vector<std::vector<ConnectionSet>> item_solutions_;

  std::atomic<std::size_t> next_item_{0};
  std::atomic<std::size_t> subtrees_done_{0};
  std::atomic<std::size_t> first_found_{std::numeric_limits<std::size_t>::max()};
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<std::uint64_t> pruned_{0};
  std::atomic<bool> budget_hit_{false};
  std::atomic<bool> cut_short_{false};
  std::mutex report_mu_;
  Clock::time_point last_report_;
};

}  // namespace

SearchOutcome Search(std::int64_t n, int degree, int diameter, const PruneConfig& cfg,
                     SearchMode mode, const SearchOptions& options) {
  CheckSearchArgs(n, degree, diameter);
  if (cfg.k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  TreeSearch search(n, degree, diameter, cfg, mode, options);
  return search.Run();
}

std::vector<ConnectionSet> BruteForceOracle(std::int64_t n, int degree, int diameter) {
  CheckSearchArgs(n, degree, diameter);
  const int t = degree / 2;
  const bool half = degree % 2 == 1;
  const std::int64_t pool = (n - 1) / 2;  // proper generators 1..(n-1)/2
  if (t > pool) return {};
  const BigNat space = Binomial(static_cast<int>(std::min<std::int64_t>(pool, 1 << 20)), t);
  if (pool > (1 << 20) || space > kOracleLimit) {
    throw Error(ErrorCode::kTooLarge, "C(" + std::to_string(pool) + ", " + std::to_string(t) +
                                          ") candidate sets exceed the oracle limit");
  }

  std::vector<ConnectionSet> out;
  std::vector<std::int64_t> pick(static_cast<std::size_t>(t));
  std::iota(pick.begin(), pick.end(), 1);
  for (;;) {
    std::vector<std::int64_t> gens = pick;
    if (half) gens.push_back(n / 2);
    ConnectionSet set = ConnectionSet::Canonical(n, gens);
    const auto diam = Diameter(CirculantGraph(set));
    if (diam && static_cast<int>(*diam) == diameter) out.push_back(std::move(set));

    // Next t-combination of 1..pool in lexicographic order.
    int i = t - 1;
    while (i >= 0 && pick[i] == pool - (t - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < t; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<OrderResult> MaxOrderSearch(int degree, int diameter, std::int64_t n_lo,
                                          std::int64_t n_hi, const PruneConfig& cfg,
                                          const SearchOptions& options) {
  if (n_lo > n_hi) throw Error(ErrorCode::kInvalidArgument, "empty order range");
  if (BigNat(n_hi) > CirculantUpperBound(degree, diameter)) {
    throw Error(ErrorCode::kInvalidArgument,
                "n_hi = " + std::to_string(n_hi) + " exceeds the circulant bound");
  }
  for (std::int64_t n = n_hi; n >= n_lo; --n) {
    if (degree % 2 == 1 && n % 2 == 1) continue;
    if (n < degree + 1) break;
    SearchOutcome found = Search(n, degree, diameter, cfg, SearchMode::kFirstOnly, options);
    if (!found.solutions.empty()) return OrderResult{n, std::move(found.solutions.front())};
  }
  return std::nullopt;
}

ConnectionSet LeastMultiplicativeImage(const ConnectionSet& set) {
  const std::int64_t n = set.order();
  const std::vector<Vertex> gens = set.generators();
  std::optional<ConnectionSet> best;
  std::vector<std::int64_t> scaled(gens.size());
  for (std::int64_t r = 1; r < n; ++r) {
    if (std::gcd(r, n) != 1) continue;
    for (std::size_t i = 0; i < gens.size(); ++i) scaled[i] = (r * gens[i]) % n;
    ConnectionSet image = ConnectionSet::Canonical(n, scaled);
    if (!best || image < *best) best = std::move(image);
  }
  return best ? *best : set;
}

std::vector<ConnectionSet> CollapseMultiplicative(const std::vector<ConnectionSet>& sets) {
  std::set<ConnectionSet> reps;
  for (const ConnectionSet& s : sets) reps.insert(LeastMultiplicativeImage(s));
  return {reps.begin(), reps.end()};
}

}  // namespace circdd
