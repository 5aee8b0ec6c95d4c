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

#include <algorithm>
#include <random>

#include "circdd/bounds.hpp"
#include "circdd/error.hpp"
#include "circdd/search.hpp"
#include "oracles.hpp"

namespace circdd {
namespace {

std::vector<std::vector<std::int64_t>> AsLists(const std::vector<ConnectionSet>& sets) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& s : sets) {
    std::vector<std::int64_t> gens;
    for (Vertex g : s.generators()) gens.push_back(g);
    out.push_back(gens);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ConnectionSet> All(std::int64_t n, int deg, int diam, const PruneConfig& cfg,
                               unsigned threads = 1) {
  SearchOptions opt;
  opt.threads = threads;
  return Search(n, deg, diam, cfg, SearchMode::kAll, opt).solutions;
}

TEST(Search, FindsTheThirteenVertexGraph) {
  const auto sols = All(13, 4, 2, PruneConfig{});
  EXPECT_NE(std::find(sols.begin(), sols.end(), ConnectionSet::Canonical(13, {1, 5})), sols.end());
}

TEST(Search, FixedUnitGeneratorIsARealRestriction) {
  EXPECT_TRUE(All(12, 4, 2, PruneConfig{}).empty());
  const auto free = All(12, 4, 2, PruneConfig::Exhaustive());
  EXPECT_NE(std::find(free.begin(), free.end(), ConnectionSet::Canonical(12, {2, 3})), free.end());
}

TEST(Search, RejectsBadArguments) {
  auto code_of = [](const std::function<void()>& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIoError;
  };
  EXPECT_EQ(code_of([] { Search(13, 5, 2, PruneConfig{}, SearchMode::kAll); }), ErrorCode::kParityError);
  EXPECT_EQ(code_of([] { Search(4, 4, 2, PruneConfig{}, SearchMode::kAll); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { Search(13, 1, 2, PruneConfig{}, SearchMode::kAll); }), ErrorCode::kInvalidArgument);
}

TEST(Search, EverySolutionHasTheRequestedDegreeAndDiameter) {
  for (std::int64_t n : {20, 24, 30}) {
    for (int deg : {4, 5, 6}) {
      if (deg % 2 == 1 && n % 2 == 1) continue;
      for (const auto& s : All(n, deg, 3, PruneConfig::Exhaustive())) {
        EXPECT_EQ(s.degree(), deg);
        EXPECT_EQ(Diameter(CirculantGraph(s)), 3u) << s.ToString();
      }
    }
  }
}

TEST(Search, ExhaustiveEqualsBothOraclesUpToForty) {
  for (std::int64_t n = 3; n <= 40; ++n) {
    for (int deg = 2; deg <= 6; ++deg) {
      if (n < deg + 1 || (deg % 2 == 1 && n % 2 == 1)) continue;
      for (int diam = 1; diam <= n / 2; ++diam) {
        const auto reference = oracle::AllSetsWithDiameter(n, deg, diam);
        const auto lib_oracle = AsLists(BruteForceOracle(n, deg, diam));
        const auto searched = AsLists(All(n, deg, diam, PruneConfig::Exhaustive()));
        ASSERT_EQ(lib_oracle, reference) << n << " " << deg << " " << diam;
        ASSERT_EQ(searched, reference) << n << " " << deg << " " << diam;
        if (reference.empty() && diam > 3) break;
      }
    }
  }
}

TEST(Search, OutcomeFlags) {
  const auto full = Search(30, 4, 3, PruneConfig::Exhaustive(), SearchMode::kAll);
  EXPECT_TRUE(full.exhausted);
  EXPECT_FALSE(full.budget_hit);
  EXPECT_EQ(full.pruned, 0u);
  EXPECT_GT(full.nodes_visited, 0u);

  SearchOptions tiny;
  tiny.node_budget = 5;
  const auto cut = Search(100, 6, 3, PruneConfig::Exhaustive(), SearchMode::kAll, tiny);
  EXPECT_TRUE(cut.budget_hit);
  EXPECT_FALSE(cut.exhausted);

  PruneConfig tight;
  tight.ceilings[{1, 1}] = 0;
  const auto pruned = Search(30, 4, 3, tight, SearchMode::kAll);
  EXPECT_GT(pruned.pruned, 0u);
  EXPECT_FALSE(pruned.exhausted);
  EXPECT_TRUE(pruned.solutions.empty());
}

TEST(Search, FirstOnlyReturnsTheFirstSolutionOfTheFullList) {
  for (std::int64_t n : {35, 40, 48}) {
    const auto all = All(n, 6, 3, PruneConfig{});
    const auto first = Search(n, 6, 3, PruneConfig{}, SearchMode::kFirstOnly);
    if (all.empty()) {
      EXPECT_TRUE(first.solutions.empty());
      continue;
    }
    ASSERT_EQ(first.solutions.size(), 1u);
    EXPECT_NE(std::find(all.begin(), all.end(), first.solutions[0]), all.end());
  }
}

TEST(Search, ResultsDoNotDependOnThreadCount) {
  const PruneConfig cfg = PruneConfig::Exhaustive();
  for (auto [n, deg, diam] : {std::tuple{55, 6, 3}, std::tuple{60, 7, 3}, std::tuple{41, 4, 4}}) {
    const auto one = All(n, deg, diam, cfg, 1);
    for (unsigned threads : {2u, 3u, 8u}) EXPECT_EQ(All(n, deg, diam, cfg, threads), one);
    SearchOptions a, b;
    b.threads = 4;
    EXPECT_EQ(Search(n, deg, diam, PruneConfig{}, SearchMode::kFirstOnly, a).solutions,
              Search(n, deg, diam, PruneConfig{}, SearchMode::kFirstOnly, b).solutions);
  }
}

TEST(Search, TighteningCeilingsNeverAddsSolutions) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const std::int64_t n = 20 + static_cast<std::int64_t>(rng() % 30);
    const int deg = (n % 2 == 0 && trial % 2) ? 5 : 4;
    const int diam = 3;
    PruneConfig loose;
    for (int i = 0; i < diam; ++i) {
      for (int d = i; d < diam; ++d) {
        if (rng() % 2) loose.ceilings[{i, d}] = 1 + static_cast<std::uint32_t>(rng() % 6);
      }
    }
    PruneConfig tight = loose;
    for (auto& [key, c] : tight.ceilings) {
      if (rng() % 2 && c > 0) --c;
    }
    tight.ceilings[{static_cast<int>(rng() % diam), diam - 1}] = static_cast<std::uint32_t>(rng() % 3);
    const auto wide = All(n, deg, diam, loose);
    const auto narrow = All(n, deg, diam, tight);
    for (const auto& s : narrow) {
      EXPECT_NE(std::find(wide.begin(), wide.end(), s), wide.end()) << s.ToString();
    }
  }
}

TEST(Search, MinimumGap) {
  PruneConfig cfg = PruneConfig::Exhaustive();
  cfg.k = 3;
  for (const auto& s : All(40, 6, 3, cfg)) {
    const auto& p = s.proper();
    EXPECT_GE(p.front(), 3u);
    for (std::size_t i = 1; i < p.size(); ++i) EXPECT_GE(p[i] - p[i - 1], 3u) << s.ToString();
  }
}

TEST(BruteForceOracle, KnownCells) {
  const auto thirteen = BruteForceOracle(13, 4, 2);
  EXPECT_NE(std::find(thirteen.begin(), thirteen.end(), ConnectionSet::Canonical(13, {1, 5})),
            thirteen.end());
  EXPECT_NE(std::find(thirteen.begin(), thirteen.end(), ConnectionSet::Canonical(13, {2, 3})),
            thirteen.end());
  EXPECT_EQ(MultiplySet(CirculantGraph(ConnectionSet::Canonical(13, {1, 5})), 2).connection_set(),
            ConnectionSet::Canonical(13, {2, 3}));
  EXPECT_TRUE(BruteForceOracle(14, 4, 2).empty());
  EXPECT_FALSE(BruteForceOracle(8, 3, 2).empty());
  EXPECT_TRUE(BruteForceOracle(10, 3, 2).empty());
  EXPECT_THROW(BruteForceOracle(100000, 8, 5), Error);
}

TEST(MaxOrderSearch, SmallCells) {
  const auto four = MaxOrderSearch(4, 2, 5, 13, PruneConfig{});
  ASSERT_TRUE(four.has_value());
  EXPECT_EQ(four->order, 13);
  EXPECT_EQ(four->set, ConnectionSet::Canonical(13, {1, 5}));

  const auto three = MaxOrderSearch(3, 2, 4, 8, PruneConfig{});
  ASSERT_TRUE(three.has_value());
  EXPECT_EQ(three->order, 8);
  EXPECT_EQ(three->set, ConnectionSet::Canonical(8, {1, 4}));

  const auto six = MaxOrderSearch(6, 2, 10, 25, PruneConfig{});
  ASSERT_TRUE(six.has_value());
  EXPECT_EQ(six->order, 21);
  EXPECT_EQ(Diameter(CirculantGraph(six->set)), 2u);

  EXPECT_THROW(MaxOrderSearch(4, 2, 5, 14, PruneConfig{}), Error);
  EXPECT_FALSE(MaxOrderSearch(4, 2, 5, 5, PruneConfig{}).has_value());
}

TEST(MaxOrderSearch, NeverExceedsTheBound) {
  for (int deg = 3; deg <= 6; ++deg) {
    for (int diam = 2; diam <= 3; ++diam) {
      const auto bound = CirculantUpperBound(deg, diam).convert_to<std::int64_t>();
      const auto r = MaxOrderSearch(deg, diam, deg + 1, bound, PruneConfig::Exhaustive());
      ASSERT_TRUE(r.has_value());
      EXPECT_LE(r->order, bound);
      EXPECT_EQ(Diameter(CirculantGraph(r->set)), static_cast<std::uint32_t>(diam));
    }
  }
}

TEST(Collapse, OneRepresentativePerMultiplicativeClass) {
  const auto all = BruteForceOracle(13, 4, 2);
  const auto reps = CollapseMultiplicative(all);
  EXPECT_EQ(reps, std::vector<ConnectionSet>{ConnectionSet::Canonical(13, {1, 5})});
  EXPECT_EQ(LeastMultiplicativeImage(ConnectionSet::Canonical(13, {2, 3})),
            ConnectionSet::Canonical(13, {1, 5}));
}

TEST(Progress, CallbackSeesFinalCounts) {
  SearchOptions opt;
  std::uint64_t last = 0;
  opt.progress = [&](const SearchProgress& p) { last = p.nodes_visited; };
  opt.progress_interval = std::chrono::milliseconds(0);
  const auto out = Search(60, 6, 3, PruneConfig::Exhaustive(), SearchMode::kAll, opt);
  EXPECT_EQ(last, out.nodes_visited);
}

}  // namespace
}  // namespace circdd
