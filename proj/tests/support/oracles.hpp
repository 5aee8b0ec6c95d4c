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

// Slow reference implementations for tests. Nothing here calls into the
// library, so agreement with it is evidence rather than tautology.

#ifndef CIRCDD_TESTS_SUPPORT_ORACLES_HPP_
#define CIRCDD_TESTS_SUPPORT_ORACLES_HPP_

#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

// Generators as given (each s contributes +s and -s mod n).
using Generators = std::vector<std::int64_t>;

// Adjacency list of the circulant, duplicates removed.
std::vector<std::vector<std::int64_t>> Adjacency(std::int64_t n, const Generators& gens);

// BFS distances from `source`; -1 for unreachable.
std::vector<int> Distances(std::int64_t n, const Generators& gens, std::int64_t source = 0);

// Max eccentricity over every vertex; -1 when disconnected.
int AllPairsDiameter(std::int64_t n, const Generators& gens);

// Number of distinct neighbours of vertex 0.
int Degree(std::int64_t n, const Generators& gens);

// Lattice points of Z^t with L1 norm <= radius, counted dimension by
// dimension. Radius < 0 gives 0.
std::uint64_t L1Ball(int t, int radius);

// Vertices within distance D of 0 in Z^t x Z_2, where the Z_2 step is free:
// L1Ball(t, D) + L1Ball(t, D - 1).
std::uint64_t L1BallWithInvolution(int t, int radius);

// 1 + deg + deg(deg-1) + ... + deg(deg-1)^(D-1).
std::uint64_t MooreTree(int degree, int diameter);

// Path classes of length `length` from 0 to w: all ordered tuples of
// signed steps, reduced to multisets; a class counts if its canonical
// walk (steps sorted +s ascending, then n/2, then -s ascending) repeats no
// vertex, with a return to 0 allowed only as the last vertex when w = 0 and
// length >= 3. Each class is returned as its sorted list of signed steps.
std::set<std::vector<std::int64_t>> PathClasses(std::int64_t n, const Generators& proper,
                                                bool half, std::int64_t w, int length);

// Every canonical generator set of the given degree on Z_n with diameter
// exactly D, as sorted proper generators followed by n/2 when present.
std::vector<std::vector<std::int64_t>> AllSetsWithDiameter(std::int64_t n, int degree, int diameter);

}  // namespace oracle

#endif  // CIRCDD_TESTS_SUPPORT_ORACLES_HPP_
