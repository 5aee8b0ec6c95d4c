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

#include "circdd/circulant_graph.hpp"

#include <numeric>
#include <string>

#include "circdd/error.hpp"

namespace circdd {

bool IsConnected(const CirculantGraph& g) {
  std::uint64_t d = g.order();
  for (Vertex s : g.connection_set().generators()) d = std::gcd(d, std::uint64_t{s});
  return d == 1;
}

DistanceProfile DistancesFromZero(const CirculantGraph& g) {
  const Vertex n = g.order();
  const auto steps = g.steps();
  DistanceProfile out;
  out.dist.assign(n, kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(n);
  out.dist[0] = 0;
  queue.push_back(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    const std::uint32_t next = out.dist[v] + 1;
    for (Vertex s : steps) {
      Vertex w = v + s;  // v, s < n <= 2^31 - 1, no overflow
      if (w >= n) w -= n;
      if (out.dist[w] == kUnreachable) {
        out.dist[w] = next;
        queue.push_back(w);
      }
    }
  }
  out.ecc = out.dist[queue.back()];
  out.connected = queue.size() == n;
  return out;
}

std::optional<std::uint32_t> Diameter(const CirculantGraph& g) {
  const DistanceProfile p = DistancesFromZero(g);
  if (!p.connected) return std::nullopt;
  return p.ecc;
}

CirculantGraph MultiplySet(const CirculantGraph& g, std::int64_t r) {
  const std::int64_t n = g.order();
  std::int64_t rr = r % n;
  if (rr < 0) rr += n;
  if (std::gcd(rr, n) != 1) {
    throw Error(ErrorCode::kNotAUnit, "gcd(" + std::to_string(r) + ", " + std::to_string(n) +
                                          ") = " + std::to_string(std::gcd(rr, n)));
  }
  std::vector<std::int64_t> scaled;
  for (Vertex s : g.connection_set().generators()) scaled.push_back((rr * s) % n);
  return CirculantGraph(ConnectionSet::Canonical(n, scaled));
}

BoundedBfs::Result BoundedBfs::Run(Vertex n, std::span<const Vertex> steps,
                                   std::uint32_t max_depth) {
  if (stamp_.size() < n) {
    stamp_.assign(n, 0);
    dist_.assign(n, 0);
    queue_.resize(n);
    epoch_ = 0;
  }
  if (++epoch_ == 0) {  // wrapped; clear stale stamps
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  Result result;
  std::uint32_t tail = 0;
  stamp_[0] = epoch_;
  dist_[0] = 0;
  queue_[tail++] = 0;
  for (std::uint32_t head = 0; head < tail; ++head) {
    const Vertex v = queue_[head];
    const std::uint32_t next = dist_[v] + 1;
    if (next > max_depth) break;
    for (Vertex s : steps) {
      Vertex w = v + s;
      if (w >= n) w -= n;
      if (stamp_[w] != epoch_) {
        stamp_[w] = epoch_;
        dist_[w] = next;
        queue_[tail++] = w;
      }
    }
  }
  reached_ = tail;
  result.reached = tail;
  result.depth = dist_[queue_[tail - 1]];
  return result;
}

bool HasDiameter(BoundedBfs& bfs, Vertex n, std::span<const Vertex> steps,
                 std::uint32_t diameter) {
  const auto r = bfs.Run(n, steps, diameter);
  return r.reached == n && r.depth == diameter;
}

}  // namespace circdd
