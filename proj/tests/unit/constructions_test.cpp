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

#include <gtest/gtest.h>

#include <numeric>

#include "circdd/circulant_graph.hpp"
#include "circdd/constructions.hpp"
#include "circdd/error.hpp"
#include "oracles.hpp"

namespace circdd {
namespace {

CirculantGraph G(std::int64_t n, std::initializer_list<std::int64_t> s) {
  return CirculantGraph(ConnectionSet::Canonical(n, s));
}

std::vector<std::int64_t> Gens(const CirculantGraph& g) {
  std::vector<std::int64_t> out;
  for (Vertex s : g.connection_set().generators()) out.push_back(s);
  return out;
}

TEST(CartesianProduct, FourByThreeIsTheTwelveVertexGraph) {
  const auto w = CartesianProduct(G(4, {1}), G(3, {1}));
  EXPECT_EQ(w.product.connection_set(), ConnectionSet::Canonical(12, {3, 4}));
  EXPECT_EQ(w.degree, 4);
  EXPECT_EQ(w.diameter, 3u);
  EXPECT_TRUE(w.measured);
}

TEST(CartesianProduct, ThreeByFive) {
  const auto w = CartesianProduct(G(3, {1}), G(5, {1}));
  EXPECT_EQ(w.product.connection_set(), ConnectionSet::Canonical(15, {3, 5}));
  EXPECT_EQ(w.diameter, 3u);
  EXPECT_EQ(oracle::AllPairsDiameter(15, {3, 5}), 3);
}

TEST(CartesianProduct, RejectsBadFactors) {
  try {
    CartesianProduct(G(4, {1}), G(6, {1, 3}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotCoprime);
  }
  try {
    CartesianProduct(G(9, {3}), G(4, {1}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDisconnectedFactor);
  }
}

TEST(CartesianProduct, HalfGeneratorsScale) {
  // 3 * (4/2) = 6 = 12/2 stays a half generator; 4 * 1 is proper.
  const auto w = CartesianProduct(G(4, {1, 2}), G(3, {1}));
  EXPECT_TRUE(w.product.connection_set().has_half());
  EXPECT_EQ(w.degree, 5);
  const auto v = CartesianProduct(G(3, {1}), G(2, {1}));
  EXPECT_EQ(v.product.connection_set(), ConnectionSet::Canonical(6, {2, 3}));
  EXPECT_EQ(v.degree, 3);
  EXPECT_EQ(v.diameter, 2u);
}

TEST(CartesianProduct, DegreeAndDiameterAddUpToFiveThousandVertices) {
  std::vector<CirculantGraph> small;
  for (std::int64_t n = 2; n <= 70; ++n) {
    small.push_back(G(n, {1}));
    if (n >= 5) small.push_back(G(n, {1, 2}));
    if (n % 2 == 0 && n >= 6) small.push_back(G(n, {1, n / 2}));
    if (n >= 13) small.push_back(G(n, {1, 5}));
  }
  int checked = 0;
  for (const auto& a : small) {
    for (const auto& b : small) {
      const std::int64_t n = a.order(), m = b.order();
      if (n * m > 5000 || std::gcd(n, m) != 1 || n > m) continue;
      if (!IsConnected(a) || !IsConnected(b)) continue;
      const auto w = CartesianProduct(a, b);
      const int deg = oracle::Degree(n * m, Gens(w.product));
      const auto da = oracle::Distances(n, Gens(a));
      const auto db = oracle::Distances(m, Gens(b));
      const int diam_a = *std::max_element(da.begin(), da.end());
      const int diam_b = *std::max_element(db.begin(), db.end());
      const auto dp = oracle::Distances(n * m, Gens(w.product));
      ASSERT_EQ(deg, oracle::Degree(n, Gens(a)) + oracle::Degree(m, Gens(b)));
      ASSERT_EQ(*std::max_element(dp.begin(), dp.end()), diam_a + diam_b)
          << a.connection_set().ToString() << " x " << b.connection_set().ToString();
      ASSERT_EQ(w.product, CartesianProduct(b, a).product);
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(SplitProduct, RecoversFactors) {
  const auto w = CartesianProduct(G(25, {3, 4}), G(117, {1, 10, 40}));
  const auto split = SplitProduct(w.product.connection_set(), 25);
  ASSERT_TRUE(split.has_value());
  EXPECT_EQ(split->first, ConnectionSet::Canonical(25, {3, 4}));
  EXPECT_EQ(split->second, ConnectionSet::Canonical(117, {1, 10, 40}));
  EXPECT_FALSE(SplitProduct(ConnectionSet::Canonical(15, {1, 2}), 3).has_value());
}

TEST(OptimalDegree4, Family) {
  EXPECT_EQ(OptimalDegree4Set(13), ConnectionSet::Canonical(13, {2, 3}));
  EXPECT_EQ(OptimalDegree4Set(25), ConnectionSet::Canonical(25, {3, 4}));
  EXPECT_EQ(OptimalDegree4Set(41), ConnectionSet::Canonical(41, {4, 5}));
  EXPECT_EQ(Diameter(CirculantGraph(OptimalDegree4Set(13))), 2u);
  EXPECT_EQ(Diameter(CirculantGraph(OptimalDegree4Set(25))), 3u);
  EXPECT_EQ(Diameter(CirculantGraph(OptimalDegree4Set(41))), 4u);
}

TEST(OptimalDegree4, ReachesTheBoundAtEveryDiameter) {
  for (std::int64_t d = 2; d <= 20; ++d) {
    const std::int64_t n = 2 * d * d + 2 * d + 1;
    EXPECT_EQ(Diameter(CirculantGraph(OptimalDegree4Set(n))), static_cast<std::uint32_t>(d));
  }
}

TEST(OptimalDegree4, AlwaysConnected) {
  for (std::int64_t n = 5; n <= 3000; ++n) {
    try {
      EXPECT_TRUE(IsConnected(CirculantGraph(OptimalDegree4Set(n)))) << n;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kDegenerateOrder) << n;
      EXPECT_LT(n, 12);
    }
  }
}

TEST(PowerConstruction, SmallCases) {
  EXPECT_EQ(PowerConstruction(3, 2), G(9, {1, 3}));
  EXPECT_EQ(Diameter(PowerConstruction(3, 2)), 2u);
  EXPECT_EQ(Diameter(PowerConstruction(5, 2)), 4u);
  EXPECT_EQ(PowerConstruction(3, 3), G(27, {1, 3, 9}));
  EXPECT_EQ(Diameter(PowerConstruction(3, 3)), 3u);
  try {
    PowerConstruction(4, 2);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEvenBase);
  }
}

TEST(PowerConstruction, DiameterFormulaUpToAMillion) {
  for (std::int64_t s = 3; s <= 1000; s += 2) {
    std::int64_t order = s * s;
    for (int t = 2; order <= 1'000'000; ++t, order *= s) {
      const auto d = Diameter(PowerConstruction(s, t));
      ASSERT_EQ(d, static_cast<std::uint32_t>(t * (s - 1) / 2)) << s << "^" << t;
    }
  }
}

TEST(SmallFamilies, CycleAndComplete) {
  EXPECT_EQ(Diameter(Cycle(9)), 4u);
  EXPECT_EQ(Complete(7).degree(), 6);
  EXPECT_EQ(Diameter(Complete(7)), 1u);
  EXPECT_EQ(Complete(8).degree(), 7);
}

}  // namespace
}  // namespace circdd
