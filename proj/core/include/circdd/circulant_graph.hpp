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

#ifndef CIRCDD_CIRCULANT_GRAPH_HPP_
#define CIRCDD_CIRCULANT_GRAPH_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "circdd/connection_set.hpp"

namespace circdd {

// C(n; S): vertices Z_n, v ~ w iff (w - v) mod n lies in S u -S.
// Adjacency is never materialised; neighbours are v + step for each signed
// step of S.
class CirculantGraph {
 public:
  explicit CirculantGraph(ConnectionSet set)
      : set_(std::move(set)), steps_(set_.signed_steps()) {}

  Vertex order() const { return set_.order(); }
  int degree() const { return set_.degree(); }
  const ConnectionSet& connection_set() const { return set_; }
  std::span<const Vertex> steps() const { return steps_; }

  friend bool operator==(const CirculantGraph& a, const CirculantGraph& b) {
    return a.set_ == b.set_;
  }

 private:
  ConnectionSet set_;
  std::vector<Vertex> steps_;
};

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

struct DistanceProfile {
  // dist[w] = distance from vertex 0 to w, kUnreachable if none.
  std::vector<std::uint32_t> dist;
  // Largest finite entry of dist.
  std::uint32_t ecc = 0;
  bool connected = false;
};

// gcd(n, s_1, ..., s_t[, n/2]) == 1.
bool IsConnected(const CirculantGraph& g);

DistanceProfile DistancesFromZero(const CirculantGraph& g);

// Eccentricity of vertex 0, which is the diameter by vertex-transitivity.
// std::nullopt means the graph is disconnected (infinite diameter).
std::optional<std::uint32_t> Diameter(const CirculantGraph& g);

// C(n; rS). Throws NotAUnit unless gcd(r, n) == 1.
CirculantGraph MultiplySet(const CirculantGraph& g, std::int64_t r);

// Reusable breadth-first search from vertex 0 that stops after a given depth.
// Visited marks are epoch-stamped, so consecutive runs do not pay an O(n)
// reset. Intended for hot loops; not thread-safe, one instance per thread.
class BoundedBfs {
 public:
  struct Result {
    std::uint32_t reached = 0;  // vertices with distance <= max_depth
    std::uint32_t depth = 0;    // largest distance observed
  };

  // Explores levels 0..max_depth of C(n; steps).
  Result Run(Vertex n, std::span<const Vertex> steps, std::uint32_t max_depth);

  // Distance recorded by the last Run, kUnreachable beyond its horizon.
  std::uint32_t distance(Vertex w) const {
    return stamp_[w] == epoch_ ? dist_[w] : kUnreachable;
  }

  // Vertices reached by the last Run, in BFS order.
  std::span<const Vertex> visited() const { return {queue_.data(), reached_}; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> dist_;
  std::vector<Vertex> queue_;
  std::uint32_t epoch_ = 0;
  std::uint32_t reached_ = 0;
};

// True iff C(n; steps) has diameter exactly `diameter`.
bool HasDiameter(BoundedBfs& bfs, Vertex n, std::span<const Vertex> steps,
                 std::uint32_t diameter);

}  // namespace circdd

#endif  // CIRCDD_CIRCULANT_GRAPH_HPP_
