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

#ifndef CIRCDD_PRUNE_CONFIG_HPP_
#define CIRCDD_PRUNE_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "circdd/circulant_graph.hpp"
#include "circdd/connection_set.hpp"
#include "circdd/path_classes.hpp"

namespace circdd {

inline constexpr std::uint32_t kUnbounded = std::numeric_limits<std::uint32_t>::max();

// Search restrictions for the pruned DFS: minimum generator gap k and
// ceilings c(i, d) on the number of length-d path classes to a vertex at
// distance i. Missing ceilings are unbounded.
struct PruneConfig {
  int k = 1;
  bool require_s1_eq_1 = true;
  std::map<std::pair<int, int>, std::uint32_t> ceilings;

  std::uint32_t ceiling(int i, int d) const {
    auto it = ceilings.find({i, d});
    return it == ceilings.end() ? kUnbounded : it->second;
  }
  bool has_ceilings() const;

  // k = 1, no ceilings, s1 free: the full space of canonical sets.
  static PruneConfig Exhaustive();

  // Text format, one directive per line, '#' starts a comment:
  //   k <int>
  //   s1 fixed|free
  //   <i> <d> <ceiling>|inf
  // Throws ParseError.
  static PruneConfig Parse(std::string_view text);
  std::string ToString() const;

  static PruneConfig Load(const std::filesystem::path& path);
  void Save(const std::filesystem::path& path) const;

  friend bool operator==(const PruneConfig&, const PruneConfig&) = default;
};

// False iff some vertex w at distance i < D has |P_w^d| > c(i, d) for some
// i <= d < D. Uses `counter` as scratch; `profile` must belong to g (only
// distances < D are read).
bool PruneAdmissible(const CirculantGraph& g, int diameter, const PruneConfig& cfg,
                     const DistanceProfile& profile, PathCounter& counter);
bool PruneAdmissible(const CirculantGraph& g, int diameter, const PruneConfig& cfg,
                     const DistanceProfile& profile);

// max |P_w^d| over vertices w at distance i, for 0 <= i <= d < D.
std::map<std::pair<int, int>, std::uint32_t> ObservedPathCounts(const CirculantGraph& g,
                                                                int diameter);

// Ceilings that admit every search-tree node on the way to each witness.
// Each witness is first mapped to every multiplicative image containing 1
// (witnesses without a unit generator are skipped); every prefix of its
// generator list is then profiled. The result is the maximum observed count
// plus `slack`, for all 0 <= i <= d < D. Returns an unbounded config when no
// witness qualifies.
PruneConfig ProfileCeilings(std::span<const ConnectionSet> witnesses, int diameter,
                            std::uint32_t slack = 1);

}  // namespace circdd

#endif  // CIRCDD_PRUNE_CONFIG_HPP_
