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

// Depth-first search over connection sets with path-count pruning.
//
// The tree is rooted at {1} (even degree) or {1, n/2} (odd degree); with s1
// free the root is empty and the first generator ranges over [k, n/2). A
// node with largest proper generator m gets one child per generator g in
// [m + k, floor((n - k) / 2)] (even) or [m + k, n/2 - k] (odd). Nodes
// that violate a ceiling are cut with their whole subtree; leaves are
// checked for the exact diameter by BFS.

#ifndef CIRCDD_SEARCH_HPP_
#define CIRCDD_SEARCH_HPP_

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "circdd/connection_set.hpp"
#include "circdd/prune_config.hpp"

namespace circdd {

enum class SearchMode { kFirstOnly, kAll };

struct SearchProgress {
  std::uint64_t nodes_visited = 0;
  std::uint64_t pruned = 0;
  std::size_t subtrees_done = 0;
  std::size_t subtrees_total = 0;
};

struct SearchOptions {
  unsigned threads = 1;
  // Stop after this many tree nodes; 0 means no limit.
  std::uint64_t node_budget = 0;
  // Called from worker threads at most once per interval, and once more
  // with the final counts when the search ends.
  std::function<void(const SearchProgress&)> progress;
  std::chrono::milliseconds progress_interval{2000};
};

struct SearchOutcome {
  // Sorted ascending. FirstOnly yields the first solution in serial DFS order.
  std::vector<ConnectionSet> solutions;
  std::uint64_t nodes_visited = 0;
  std::uint64_t pruned = 0;
  // True iff every leaf of the restricted tree was examined: nothing was
  // pruned, the node budget held, and no early stop skipped work.
  bool exhausted = false;
  bool budget_hit = false;
};

// Throws ParityError for odd degree with odd n, InvalidArgument for degree < 2
// or n < degree + 1.
SearchOutcome Search(std::int64_t n, int degree, int diameter, const PruneConfig& cfg,
                     SearchMode mode, const SearchOptions& options = {});

// Every canonical set of the given degree on Z_n with diameter exactly D,
// by plain enumeration. Throws TooLarge when there are more than 10^7
// candidate sets.
inline constexpr std::uint64_t kOracleLimit = 10'000'000;
std::vector<ConnectionSet> BruteForceOracle(std::int64_t n, int degree, int diameter);

struct OrderResult {
  std::int64_t order = 0;
  ConnectionSet set;
};

// Scans n from n_hi down to n_lo (odd degree: even n only) and returns the
// first order with a solution. Throws InvalidArgument if n_hi exceeds the
// circulant bound.
std::optional<OrderResult> MaxOrderSearch(int degree, int diameter, std::int64_t n_lo,
                                          std::int64_t n_hi, const PruneConfig& cfg,
                                          const SearchOptions& options = {});

// Lexicographically least canonical image of `set` over all units r.
ConnectionSet LeastMultiplicativeImage(const ConnectionSet& set);

// Keeps one representative (the least image) per multiplicative class.
std::vector<ConnectionSet> CollapseMultiplicative(const std::vector<ConnectionSet>& sets);

}  // namespace circdd

#endif  // CIRCDD_SEARCH_HPP_
