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

// Large circulants as Cartesian products C(n; S1) x C(m; S2), gcd(n, m) = 1.
//
// For every split of degree (i + (deg - i), i = 2..deg/2) and diameter
// (j + (D - j), j = 1..D/2) the largest available factors are paired. When
// the best pairs have non-coprime orders, one factor at a time is stepped
// down to the largest smaller order that is coprime to the other factor and
// has a witness of the same degree and diameter.

#ifndef CIRCDD_COMBINED_SEARCH_HPP_
#define CIRCDD_COMBINED_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circdd/constructions.hpp"
#include "circdd/records.hpp"
#include "circdd/search.hpp"

namespace circdd {

struct CombinedOptions {
  // Node budget per factor search when no catalog witness exists for a
  // required order; 0 disables searching (catalog and families only).
  std::uint64_t node_budget = 0;
  unsigned threads = 1;
  // Diagnostic trace of the candidate list, one line per event.
  std::vector<std::string>* trace = nullptr;
};

struct CombinedResult {
  ProductWitness witness;
  // Degree and diameter of the first factor in the winning split.
  int split_degree = 0;
  int split_diameter = 0;
};

// `records` supplies the largest known order per cell; a factor is usable
// only if `catalog` (or a family construction, or a budgeted search) gives a
// connection set of exactly that order, degree and diameter. Throws
// NoProductFound when no coprime pair is realisable, InvalidArgument for
// degree < 4 or diameter < 2.
CombinedResult CombinedSearch(int degree, int diameter, const RecordTable& records,
                              const WitnessCatalog& catalog, const CombinedOptions& options = {});

}  // namespace circdd

#endif  // CIRCDD_COMBINED_SEARCH_HPP_
