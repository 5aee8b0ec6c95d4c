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

// Path classes: length-d paths from vertex 0 to w in a circulant, identified
// up to commutation of their steps, i.e. by the multiset of signed
// generators used.
//
// A multiset is a class iff its canonical representative walk is simple. The
// representative orders the steps by the fixed order of
// ConnectionSet::signed_steps() (+s ascending, n/2, -s ascending). A simple
// walk repeats no vertex, except that a closed walk (w = 0) of length >= 3
// may end where it started. Length-2 backtracks (+s,-s or n/2,n/2) traverse a
// single edge twice and are not cycles.

#ifndef CIRCDD_PATH_CLASSES_HPP_
#define CIRCDD_PATH_CLASSES_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "circdd/circulant_graph.hpp"

namespace circdd {

struct PathClass {
  // Signed generators in canonical order; n/2 is written as +n/2.
  std::vector<std::int64_t> steps;
  Vertex target = 0;

  friend bool operator==(const PathClass&, const PathClass&) = default;
};

// All classes of exactly `length` steps ending at w.
std::vector<PathClass> PathClasses(const CirculantGraph& g, Vertex w, int length);

// |P_w^d| for every vertex w and every 0 <= d <= max_length in one sweep.
// |P_0^0| is 1 (the empty path). Reusable across graphs; one per thread.
class PathCounter {
 public:
  // `steps` must be in canonical order (CirculantGraph::steps()).
  void Run(Vertex n, std::span<const Vertex> steps, int max_length);

  std::uint32_t count(Vertex w, int length) const {
    if (stamp_[w] != epoch_ || length > max_length_) return 0;
    return counts_[static_cast<std::size_t>(w) * stride_ + static_cast<std::size_t>(length)];
  }

  // Vertices with at least one class of length <= max_length (including 0).
  std::span<const Vertex> touched() const { return touched_; }

 private:
  void Touch(Vertex w);

  Vertex n_ = 0;
  int max_length_ = 0;
  std::size_t stride_ = 1;
  std::vector<Vertex> walk_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::uint32_t> stamp_;
  std::vector<Vertex> touched_;
  std::uint32_t epoch_ = 0;
};

}  // namespace circdd

#endif  // CIRCDD_PATH_CLASSES_HPP_
