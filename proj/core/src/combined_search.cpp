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

#include "circdd/combined_search.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "circdd/builtin_records.hpp"
#include "circdd/circulant_graph.hpp"
#include "circdd/error.hpp"

namespace circdd {
namespace {

struct Factor {
  int degree = 0;
  int diameter = 0;
  ConnectionSet set;

  std::int64_t order() const { return set.order(); }
};

struct Candidate {
  Factor first;
  Factor second;

  std::int64_t product() const { return first.order() * second.order(); }
  bool coprime() const { return std::gcd(first.order(), second.order()) == 1; }
};

bool HasCell(const ConnectionSet& set, int degree, int diameter) {
  if (set.degree() != degree) return false;
  const auto d = Diameter(CirculantGraph(set));
  return d && static_cast<int>(*d) == diameter;
}

class FactorSource {
 public:
  FactorSource(const RecordTable& records, const WitnessCatalog& catalog,
               const CombinedOptions& options)
      : records_(records), catalog_(catalog), options_(options) {}

  // Largest known factor of the cell that comes with a connection set.
  std::optional<Factor> Largest(int degree, int diameter) {
    if (const RecordEntry* rec = records_.Find(degree, diameter)) {
      if (rec->set && VerifyEntry(*rec).passed) return Factor{degree, diameter, *rec->set};
      if (auto f = AtOrder(degree, diameter, static_cast<std::int64_t>(rec->order))) return f;
    }
    const RecordEntry* best = catalog_.Largest(degree, diameter);
    std::optional<ConnectionSet> family = FamilyWitness(degree, diameter);
    if (family && (!best || family->order() > best->order)) return Factor{degree, diameter, *family};
    if (best) return Factor{degree, diameter, *best->set};
    return std::nullopt;
  }

  // A factor of exactly order n: catalog, then families, then a budgeted search.
  std::optional<Factor> AtOrder(int degree, int diameter, std::int64_t n) {
    if (n < degree + 1) return std::nullopt;
    if (const RecordEntry* e = catalog_.WithOrder(degree, diameter, static_cast<std::uint64_t>(n))) {
      return Factor{degree, diameter, *e->set};
    }
    if (auto set = FamilyAtOrder(degree, n); set && HasCell(*set, degree, diameter)) {
      return Factor{degree, diameter, *set};
    }
    if (options_.node_budget == 0 || (degree % 2 == 1 && n % 2 == 1)) return std::nullopt;
    SearchOptions so;
    so.threads = options_.threads;
    so.node_budget = options_.node_budget;
    const SearchOutcome out = Search(n, degree, diameter, Ceilings(degree, diameter),
                                     SearchMode::kFirstOnly, so);
    if (out.solutions.empty()) return std::nullopt;
    return Factor{degree, diameter, out.solutions.front()};
  }

 private:
  static std::optional<ConnectionSet> FamilyAtOrder(int degree, std::int64_t n) {
    switch (degree) {
      case 2: return ConnectionSet::Canonical(n, {1});
      case 3:
        if (n % 2 != 0 || n < 6) return std::nullopt;
        return ConnectionSet::Canonical(n, {1, n / 2});
      case 4:
        try {
          return OptimalDegree4Set(n);
        } catch (const Error&) {
          return std::nullopt;
        }
      default: return std::nullopt;
    }
  }

  const PruneConfig& Ceilings(int degree, int diameter) {
    auto it = ceilings_.find({degree, diameter});
    if (it == ceilings_.end()) {
      const auto sets = catalog_.Sets(degree, diameter);
      it = ceilings_.emplace(std::make_pair(degree, diameter), ProfileCeilings(sets, diameter)).first;
    }
    return it->second;
  }

  const RecordTable& records_;
  const WitnessCatalog& catalog_;
  const CombinedOptions& options_;
  std::map<std::pair<int, int>, PruneConfig> ceilings_;
};

std::string Describe(const Candidate& c) {
  return std::to_string(c.first.order()) + " (" + std::to_string(c.first.degree) + "," +
         std::to_string(c.first.diameter) + ") x " + std::to_string(c.second.order()) + " (" +
         std::to_string(c.second.degree) + "," + std::to_string(c.second.diameter) +
         ") = " + std::to_string(c.product());
}

// Inserts after every candidate with a product >= c's; returns the position.
std::size_t InsertSorted(std::vector<Candidate>& list, Candidate c) {
  auto pos = std::find_if(list.begin(), list.end(),
                          [&](const Candidate& x) { return x.product() < c.product(); });
  const auto at = list.insert(pos, std::move(c));
  return static_cast<std::size_t>(at - list.begin());
}

}  // namespace

CombinedResult CombinedSearch(int degree, int diameter, const RecordTable& records,
                              const WitnessCatalog& catalog, const CombinedOptions& options) {
  if (degree < 4 || diameter < 2) {
    throw Error(ErrorCode::kInvalidArgument, "combined search needs degree >= 4 and diameter >= 2");
  }
  auto trace = [&](const std::string& line) {
    if (options.trace) options.trace->push_back(line);
  };
  FactorSource source(records, catalog, options);

  std::int64_t best = 0;
  std::vector<Candidate> list;
  for (int i = 2; i <= degree / 2; ++i) {
    for (int j = 1; j <= diameter / 2; ++j) {
      auto g1 = source.Largest(i, j);
      auto g2 = source.Largest(degree - i, diameter - j);
      if (!g1 || !g2) continue;
      Candidate c{std::move(*g1), std::move(*g2)};
      if (c.product() <= best) continue;
      const bool coprime = c.coprime();
      trace("candidate " + Describe(c) + (coprime ? "" : " (not coprime)"));
      const std::size_t at = InsertSorted(list, std::move(c));
      if (coprime) {
        best = list[at].product();
        list.erase(list.begin() + static_cast<std::ptrdiff_t>(at) + 1, list.end());
      }
    }
  }

  while (!list.empty() && !list.front().coprime()) {
    const Candidate g = list.front();
    list.erase(list.begin());
    const std::int64_t n = g.first.order();
    const std::int64_t m = g.second.order();

    std::optional<Factor> g1;
    std::int64_t n2 = n - 1;
    for (; n2 >= 2 && n2 * m > best; --n2) {
      if (std::gcd(n2, m) != 1) continue;
      if ((g1 = source.AtOrder(g.first.degree, g.first.diameter, n2))) break;
    }
    std::optional<Factor> g2;
    std::int64_t m2 = m - 1;
    for (; m2 >= 2 && n * m2 > best; --m2) {
      if (std::gcd(n, m2) != 1) continue;
      if ((g2 = source.AtOrder(g.second.degree, g.second.diameter, m2))) break;
    }
    const std::int64_t p1 = g1 ? n2 * m : 0;
    const std::int64_t p2 = g2 ? n * m2 : 0;
    if (p1 == 0 && p2 == 0) {
      trace("dropped " + Describe(g));
      continue;
    }
    Candidate next = p1 > p2 ? Candidate{std::move(*g1), g.second} : Candidate{g.first, std::move(*g2)};
    trace("replaced " + Describe(g) + " by " + Describe(next));
    best = next.product();
    const std::size_t at = InsertSorted(list, std::move(next));
    list.erase(list.begin() + static_cast<std::ptrdiff_t>(at) + 1, list.end());
  }

  if (list.empty()) {
    throw Error(ErrorCode::kNoProductFound, "no coprime factor pair for (" + std::to_string(degree) +
                                                ", " + std::to_string(diameter) + ")");
  }
  const Candidate& win = list.front();
  CombinedResult result{CartesianProduct(CirculantGraph(win.first.set), CirculantGraph(win.second.set)),
                        win.first.degree, win.first.diameter};
  if (result.witness.degree != degree || static_cast<int>(result.witness.diameter) != diameter) {
    throw Error(ErrorCode::kNoProductFound, "product " + Describe(win) + " misses the cell");
  }
  return result;
}

}  // namespace circdd
