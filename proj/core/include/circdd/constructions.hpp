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

#ifndef CIRCDD_CONSTRUCTIONS_HPP_
#define CIRCDD_CONSTRUCTIONS_HPP_

#include <cstdint>
#include <optional>
#include <utility>

#include "circdd/circulant_graph.hpp"
#include "circdd/connection_set.hpp"

namespace circdd {

// Products up to this order get their diameter measured by BFS.
inline constexpr std::int64_t kProductVerifyCap = 1'000'000;

// C(n; S1) x C(m; S2) realised as C(nm; m S1 u n S2).
struct ProductWitness {
  CirculantGraph first;
  CirculantGraph second;
  CirculantGraph product;
  int degree = 0;
  std::uint32_t diameter = 0;
  // False when the order exceeded kProductVerifyCap and the diameter is the
  // sum of the factor diameters rather than a BFS measurement.
  bool measured = false;
};

// Throws NotCoprime when gcd(n, m) != 1, DisconnectedFactor when either
// factor is disconnected.
ProductWitness CartesianProduct(const CirculantGraph& first, const CirculantGraph& second);

// Splits C(n1 * n2; S) back into C(n1; S1) x C(n2; S2) when every generator
// is a multiple of n2 (first factor) or of n1 (second factor). Returns
// nullopt if gcd(n1, n2) != 1, n1 does not divide the order, or some
// generator belongs to neither factor.
std::optional<std::pair<ConnectionSet, ConnectionSet>> SplitProduct(const ConnectionSet& set,
                                                                    std::int64_t first_order);

// {s, s+1} with s = floor((sqrt(2n - 1) - 1) / 2). Throws InvalidArgument for
// n < 5 and DegenerateOrder if s + 1 >= n/2.
ConnectionSet OptimalDegree4Set(std::int64_t n);

// C(s^t; 1, s, ..., s^{t-1}) for odd s >= 3, t >= 2. Throws EvenBase for even
// s and TooLarge when s^t exceeds the order cap.
CirculantGraph PowerConstruction(std::int64_t s, int t);

// C(n; 1): the cycle, diameter floor(n/2).
CirculantGraph Cycle(std::int64_t n);

// C(n; 1, ..., floor(n/2)): the complete graph K_n.
CirculantGraph Complete(std::int64_t n);

}  // namespace circdd

#endif  // CIRCDD_CONSTRUCTIONS_HPP_
