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

// Built-in record data: published connection sets, published record orders
// for degrees 3..16 and diameters 2..10, and published Cartesian-product
// records, plus the seed table and witness catalog derived from them.

#ifndef CIRCDD_BUILTIN_RECORDS_HPP_
#define CIRCDD_BUILTIN_RECORDS_HPP_

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>

#include "circdd/connection_set.hpp"
#include "circdd/records.hpp"

namespace circdd {

inline constexpr std::size_t kMaxPublishedGenerators = 8;

struct PublishedSet {
  int degree;
  int diameter;
  std::uint64_t order;
  // Generators as printed (proper ones, then n/2 for odd degree); unused
  // slots are 0.
  std::int64_t generators[kMaxPublishedGenerators];
  bool optimal;

  std::size_t size() const;
  // Canonical form of the printed generators.
  ConnectionSet set() const;
};

struct PublishedOrder {
  int degree;
  int diameter;
  std::uint64_t order;
  // Citation key of the originating work, "sets" when the order comes with
  // a published connection set, empty for the classical degree 3/4 families.
  std::string_view source;
};

struct PublishedProduct {
  int degree;
  int diameter;
  std::uint64_t order;
  int degree1;
  int diameter1;
  std::uint64_t order1;
  int degree2;
  int diameter2;
  std::uint64_t order2;
};

// Verbatim, including the (10, 10) row whose printed set is defective.
std::span<const PublishedSet> PublishedSets();
// The big table minus its unreadable (16, 3) cell.
std::span<const PublishedOrder> PublishedOrders();
// Product records; the (11, 8) row carries factor order 967 where the
// printed 984 is a typo (8 * 967 = 7736, and 967 appears in the set).
std::span<const PublishedProduct> PublishedProducts();

// Largest member of a classical family for the cell, or nullopt:
// D = 1 -> K_{deg+1}; deg 2 -> cycle C(2D+1); deg 3 -> C(4D; 1, 2D);
// deg 4 -> the optimal double loop on 2D^2 + 2D + 1 vertices.
std::optional<ConnectionSet> FamilyWitness(int degree, int diameter);

// Verified witnesses: published sets that verify, the repaired (10, 10)
// set, factors split out of published product sets, products composed
// from catalog factors, and family witnesses for degrees <= 4 and
// diameter 1 over the given ranges.
const WitnessCatalog& BuiltinCatalog();

// One entry per cell: the best catalog witness, or an order-only entry when
// a larger published order has no witness here.
RecordTable SeedBuiltin();

}  // namespace circdd

#endif  // CIRCDD_BUILTIN_RECORDS_HPP_
