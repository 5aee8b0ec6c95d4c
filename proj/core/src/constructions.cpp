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

#include "circdd/constructions.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "circdd/error.hpp"

namespace circdd {
namespace {

std::int64_t ISqrt(std::int64_t x) {
  std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace

ProductWitness CartesianProduct(const CirculantGraph& first, const CirculantGraph& second) {
  const std::int64_t n = first.order();
  const std::int64_t m = second.order();
  if (std::gcd(n, m) != 1) {
    throw Error(ErrorCode::kNotCoprime, "gcd(" + std::to_string(n) + ", " + std::to_string(m) +
                                            ") = " + std::to_string(std::gcd(n, m)));
  }
  const auto d1 = Diameter(first);
  const auto d2 = Diameter(second);
  if (!d1 || !d2) {
    throw Error(ErrorCode::kDisconnectedFactor,
                (d1 ? second : first).connection_set().ToString() + " is disconnected");
  }
  if (n * m > kMaxOrder) {
    throw Error(ErrorCode::kTooLarge, "product order " + std::to_string(n * m) + " exceeds cap");
  }

  std::vector<std::int64_t> gens;
  for (Vertex s : first.connection_set().generators()) gens.push_back(m * s);
  for (Vertex s : second.connection_set().generators()) gens.push_back(n * s);

  ProductWitness w{first, second, CirculantGraph(ConnectionSet::Canonical(n * m, gens)), 0, 0, false};
  w.degree = w.product.degree();
  if (n * m <= kProductVerifyCap) {
    const auto d = Diameter(w.product);
    w.diameter = *d;  // connected: factors are
    w.measured = true;
  } else {
    w.diameter = *d1 + *d2;
  }
  return w;
}

std::optional<std::pair<ConnectionSet, ConnectionSet>> SplitProduct(const ConnectionSet& set,
                                                                    std::int64_t first_order) {
  const std::int64_t n = set.order();
  if (first_order < 2 || n % first_order != 0) return std::nullopt;
  const std::int64_t second_order = n / first_order;
  if (second_order < 2 || std::gcd(first_order, second_order) != 1) return std::nullopt;

  std::vector<std::int64_t> first, second;
  for (Vertex s : set.generators()) {
    if (s % second_order == 0) {
      first.push_back(s / second_order);
    } else if (s % first_order == 0) {
      second.push_back(s / first_order);
    } else {
      return std::nullopt;
    }
  }
  if (first.empty() || second.empty()) return std::nullopt;
  // x = m*a mod nm with m | x gives x/m = a mod n, so division recovers the
  // factor generator up to sign; Canonical folds it.
  return std::make_pair(ConnectionSet::Canonical(first_order, first),
                        ConnectionSet::Canonical(second_order, second));
}

ConnectionSet OptimalDegree4Set(std::int64_t n) {
  if (n < 5) throw Error(ErrorCode::kInvalidArgument, "order must be >= 5");
  const std::int64_t s = (ISqrt(2 * n - 1) - 1) / 2;
  if (2 * (s + 1) >= n) {
    throw Error(ErrorCode::kDegenerateOrder,
                "s1 + 1 = " + std::to_string(s + 1) + " is not below n/2 for n = " + std::to_string(n));
  }
  return ConnectionSet::Canonical(n, {s, s + 1});
}

CirculantGraph PowerConstruction(std::int64_t s, int t) {
  if (s % 2 == 0) throw Error(ErrorCode::kEvenBase, "base " + std::to_string(s) + " is even");
  if (s < 3 || t < 2) throw Error(ErrorCode::kInvalidArgument, "need odd s >= 3 and t >= 2");
  std::vector<std::int64_t> gens;
  std::int64_t p = 1;
  for (int i = 0; i < t; ++i) {
    gens.push_back(p);
    if (p > kMaxOrder / s) {
      throw Error(ErrorCode::kTooLarge, std::to_string(s) + "^" + std::to_string(t) + " exceeds cap");
    }
    p *= s;
  }
  return CirculantGraph(ConnectionSet::Canonical(p, gens));
}

CirculantGraph Cycle(std::int64_t n) { return CirculantGraph(ConnectionSet::Canonical(n, {1})); }

CirculantGraph Complete(std::int64_t n) {
  std::vector<std::int64_t> gens;
  for (std::int64_t s = 1; s <= n / 2; ++s) gens.push_back(s);
  return CirculantGraph(ConnectionSet::Canonical(n, gens));
}

}  // namespace circdd
