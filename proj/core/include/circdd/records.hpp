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

#ifndef CIRCDD_RECORDS_HPP_
#define CIRCDD_RECORDS_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "circdd/connection_set.hpp"
#include "circdd/grid.hpp"

namespace circdd {

struct RecordEntry {
  int degree = 0;
  int diameter = 0;
  std::uint64_t order = 0;
  std::optional<ConnectionSet> set;
  std::string source;
  bool optimal = false;
  bool verified = false;

  friend bool operator==(const RecordEntry&, const RecordEntry&) = default;
};

struct VerificationReport {
  bool passed = false;
  bool connected = false;
  int measured_degree = 0;
  std::uint64_t measured_order = 0;
  // nullopt when disconnected or no set was given.
  std::optional<std::uint32_t> measured_diameter;
  bool within_bound = false;
  // One line per mismatching field, e.g. "diameter: expected 4, measured 3".
  std::vector<std::string> mismatches;
};

VerificationReport VerifyEntry(const RecordEntry& e);

class RecordTable {
 public:
  using Key = std::pair<int, int>;

  const RecordEntry* Find(int degree, int diameter) const;

  // Unchecked insert used for seeding; keeps the larger order on collision.
  void Put(RecordEntry e);
  // Unchecked overwrite of the cell.
  void Assign(RecordEntry e);

  // Replaces the cell iff e.order is strictly larger than the stored order.
  // Throws RejectedUnverified when e has no set or fails verification.
  bool UpdateIfBetter(RecordEntry e);

  const std::map<Key, RecordEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // {"version": 1, "entries": [...]} sorted by (degree, diameter).
  std::string ToJson() const;
  // Throws ParseError on malformed documents or unknown versions.
  static RecordTable FromJson(std::string_view text);

  void Save(const std::filesystem::path& path) const;
  static RecordTable Load(const std::filesystem::path& path);

  friend bool operator==(const RecordTable&, const RecordTable&) = default;

 private:
  std::map<Key, RecordEntry> entries_;
};

inline constexpr int kRecordSchemaVersion = 1;

// 100 * order / circulant bound for every record inside the ranges.
Grid PercentageGrid(const RecordTable& table, int deg_lo = 3, int deg_hi = 16, int diam_lo = 2,
                    int diam_hi = 10);

enum class TableFormat { kText, kCsv, kJson };

// One line per cell: degree, diameter, order, source, bound, percentage.
std::string RenderTable(const RecordTable& table, TableFormat format, int deg_lo = 3,
                        int deg_hi = 16, int diam_lo = 2, int diam_hi = 10);

// Every known witness per cell, not only the best one. The combined product
// search draws sub-optimal factors from here.
class WitnessCatalog {
 public:
  // Verifies `e` and keeps it only if it passes; returns whether it did.
  bool Add(RecordEntry e);

  // Witnesses of the cell, order descending then set ascending.
  std::vector<const RecordEntry*> At(int degree, int diameter) const;
  const RecordEntry* Largest(int degree, int diameter) const;
  const RecordEntry* WithOrder(int degree, int diameter, std::uint64_t order) const;

  std::vector<ConnectionSet> Sets(int degree, int diameter) const;
  std::size_t size() const;

 private:
  std::map<RecordTable::Key, std::vector<RecordEntry>> cells_;
};

// Single writer, many readers.
class RecordStore {
 public:
  explicit RecordStore(RecordTable table) : table_(std::move(table)) {}

  std::optional<RecordEntry> Find(int degree, int diameter) const;
  bool UpdateIfBetter(RecordEntry e);
  RecordTable Snapshot() const;

 private:
  mutable std::shared_mutex mu_;
  RecordTable table_;
};

}  // namespace circdd

#endif  // CIRCDD_RECORDS_HPP_
