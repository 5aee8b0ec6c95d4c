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

#include "circdd/records.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "circdd/bounds.hpp"
#include "circdd/circulant_graph.hpp"
#include "circdd/error.hpp"

namespace circdd {
namespace {

using nlohmann::json;

std::string Mismatch(std::string_view field, const std::string& expected,
                     const std::string& measured) {
  return std::string(field) + ": expected " + expected + ", measured " + measured;
}

bool WithinBound(const RecordEntry& e) {
  if (e.degree < 2 || e.diameter < 1) return false;
  return BigNat(e.order) <= CirculantUpperBound(e.degree, e.diameter);
}

std::string Percent(const RecordEntry& e, const BigNat& bound) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(1)
      << 100.0 * static_cast<double>(e.order) / bound.convert_to<double>();
  return out.str();
}

}  // namespace

VerificationReport VerifyEntry(const RecordEntry& e) {
  VerificationReport r;
  r.within_bound = WithinBound(e);
  if (!r.within_bound) {
    r.mismatches.push_back("order: " + std::to_string(e.order) + " exceeds the circulant bound");
  }
  if (!e.set) {
    r.mismatches.push_back("set: absent");
    return r;
  }
  const CirculantGraph g(*e.set);
  r.measured_order = g.order();
  r.measured_degree = g.degree();
  const DistanceProfile profile = DistancesFromZero(g);
  r.connected = profile.connected;
  if (profile.connected) r.measured_diameter = profile.ecc;

  if (r.measured_order != e.order) {
    r.mismatches.push_back(
        Mismatch("order", std::to_string(e.order), std::to_string(r.measured_order)));
  }
  if (r.measured_degree != e.degree) {
    r.mismatches.push_back(
        Mismatch("degree", std::to_string(e.degree), std::to_string(r.measured_degree)));
  }
  if (!r.connected) {
    r.mismatches.push_back("diameter: expected " + std::to_string(e.diameter) +
                           ", graph is disconnected");
  } else if (static_cast<int>(*r.measured_diameter) != e.diameter) {
    r.mismatches.push_back(Mismatch("diameter", std::to_string(e.diameter),
                                    std::to_string(*r.measured_diameter)));
  }
  r.passed = r.mismatches.empty();
  return r;
}

const RecordEntry* RecordTable::Find(int degree, int diameter) const {
  auto it = entries_.find({degree, diameter});
  return it == entries_.end() ? nullptr : &it->second;
}

void RecordTable::Put(RecordEntry e) {
  auto [it, inserted] = entries_.try_emplace({e.degree, e.diameter}, e);
  if (!inserted && e.order > it->second.order) it->second = std::move(e);
}

void RecordTable::Assign(RecordEntry e) {
  const Key key{e.degree, e.diameter};
  entries_.insert_or_assign(key, std::move(e));
}

bool RecordTable::UpdateIfBetter(RecordEntry e) {
  const std::string cell = "(" + std::to_string(e.degree) + ", " + std::to_string(e.diameter) + ")";
  if (!e.set) throw Error(ErrorCode::kRejectedUnverified, cell + ": entry has no connection set");
  const VerificationReport report = VerifyEntry(e);
  if (!report.passed) {
    std::string why;
    for (const auto& m : report.mismatches) why += (why.empty() ? "" : "; ") + m;
    throw Error(ErrorCode::kRejectedUnverified, cell + ": " + why);
  }
  e.verified = true;
  const RecordEntry* current = Find(e.degree, e.diameter);
  if (current && e.order <= current->order) return false;
  entries_[{e.degree, e.diameter}] = std::move(e);
  return true;
}

std::string RecordTable::ToJson() const {
  json entries = json::array();
  for (const auto& [key, e] : entries_) {
    json j = {{"degree", e.degree},     {"diameter", e.diameter}, {"order", e.order},
              {"source", e.source},     {"optimal", e.optimal},   {"verified", e.verified}};
    if (e.set) j["set"] = e.set->ToString();
    entries.push_back(std::move(j));
  }
  json doc = {{"version", kRecordSchemaVersion}, {"entries", std::move(entries)}};
  return doc.dump(2) + "\n";
}

RecordTable RecordTable::FromJson(std::string_view text) {
  RecordTable table;
  try {
    const json doc = json::parse(text);
    const int version = doc.at("version").get<int>();
    if (version != kRecordSchemaVersion) {
      throw Error(ErrorCode::kParseError, "unsupported records version " + std::to_string(version));
    }
    for (const json& j : doc.at("entries")) {
      RecordEntry e;
      e.degree = j.at("degree").get<int>();
      e.diameter = j.at("diameter").get<int>();
      e.order = j.at("order").get<std::uint64_t>();
      e.source = j.value("source", "");
      e.optimal = j.value("optimal", false);
      e.verified = j.value("verified", false);
      if (j.contains("set")) e.set = ConnectionSet::Parse(j.at("set").get<std::string>());
      if (table.Find(e.degree, e.diameter)) {
        throw Error(ErrorCode::kParseError, "duplicate cell (" + std::to_string(e.degree) + ", " +
                                                std::to_string(e.diameter) + ")");
      }
      table.Put(std::move(e));
    }
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::kParseError, std::string("records: ") + ex.what());
  }
  return table;
}

void RecordTable::Save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out << ToJson();
}

RecordTable RecordTable::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return FromJson(buf.str());
}

Grid PercentageGrid(const RecordTable& table, int deg_lo, int deg_hi, int diam_lo, int diam_hi) {
  Grid grid(deg_lo, deg_hi, diam_lo, diam_hi);
  for (const auto& [key, e] : table.entries()) {
    if (!grid.contains(key.first, key.second)) continue;
    const BigNat bound = CirculantUpperBound(key.first, key.second);
    grid.at(key.first, key.second) =
        100.0 * static_cast<double>(e.order) / bound.convert_to<double>();
  }
  return grid;
}

std::string RenderTable(const RecordTable& table, TableFormat format, int deg_lo, int deg_hi,
                        int diam_lo, int diam_hi) {
  std::ostringstream out;
  json rows = json::array();
  if (format == TableFormat::kCsv) out << "degree,diameter,order,source,bound,percent\n";
  if (format == TableFormat::kText) {
    out << std::left << std::setw(4) << "deg" << std::setw(4) << "D" << std::right << std::setw(10)
        << "order" << "  " << std::left << std::setw(28) << "source" << std::right
        << std::setw(10) << "bound" << std::setw(8) << "%" << "\n";
  }
  for (int deg = deg_lo; deg <= deg_hi; ++deg) {
    for (int d = diam_lo; d <= diam_hi; ++d) {
      const RecordEntry* e = table.Find(deg, d);
      const BigNat bound = CirculantUpperBound(deg, d);
      const std::string order = e ? std::to_string(e->order) : "";
      const std::string source = e ? e->source : "";
      const std::string pct = e ? Percent(*e, bound) : "";
      switch (format) {
        case TableFormat::kCsv:
          out << deg << ',' << d << ',' << order << ",\"" << source << "\"," << bound << ','
              << pct << "\n";
          break;
        case TableFormat::kText:
          out << std::left << std::setw(4) << deg << std::setw(4) << d << std::right
              << std::setw(10) << (e ? order : "-") << "  " << std::left << std::setw(28)
              << (e ? source : "-") << std::right << std::setw(10) << bound << std::setw(8)
              << (e ? pct : "-") << "\n";
          break;
        case TableFormat::kJson: {
          json row = {{"degree", deg}, {"diameter", d}, {"bound", bound.str()}};
          if (e) {
            row["order"] = e->order;
            row["source"] = e->source;
            row["percent"] = pct;
          }
          rows.push_back(std::move(row));
          break;
        }
      }
    }
  }
  if (format == TableFormat::kJson) out << rows.dump(2) << "\n";
  return out.str();
}

bool WitnessCatalog::Add(RecordEntry e) {
  if (!e.set) return false;
  if (!VerifyEntry(e).passed) return false;
  e.verified = true;
  auto& cell = cells_[{e.degree, e.diameter}];
  if (std::any_of(cell.begin(), cell.end(), [&](const RecordEntry& x) { return x.set == e.set; })) {
    return true;
  }
  cell.push_back(std::move(e));
  std::sort(cell.begin(), cell.end(), [](const RecordEntry& a, const RecordEntry& b) {
    if (a.order != b.order) return a.order > b.order;
    return *a.set < *b.set;
  });
  return true;
}

std::vector<const RecordEntry*> WitnessCatalog::At(int degree, int diameter) const {
  std::vector<const RecordEntry*> out;
  auto it = cells_.find({degree, diameter});
  if (it == cells_.end()) return out;
  for (const RecordEntry& e : it->second) out.push_back(&e);
  return out;
}

const RecordEntry* WitnessCatalog::Largest(int degree, int diameter) const {
  auto it = cells_.find({degree, diameter});
  return it == cells_.end() || it->second.empty() ? nullptr : &it->second.front();
}

const RecordEntry* WitnessCatalog::WithOrder(int degree, int diameter, std::uint64_t order) const {
  for (const RecordEntry* e : At(degree, diameter)) {
    if (e->order == order) return e;
  }
  return nullptr;
}

std::vector<ConnectionSet> WitnessCatalog::Sets(int degree, int diameter) const {
  std::vector<ConnectionSet> out;
  for (const RecordEntry* e : At(degree, diameter)) out.push_back(*e->set);
  return out;
}

std::size_t WitnessCatalog::size() const {
  std::size_t n = 0;
  for (const auto& [key, cell] : cells_) n += cell.size();
  return n;
}

std::optional<RecordEntry> RecordStore::Find(int degree, int diameter) const {
  std::shared_lock lock(mu_);
  const RecordEntry* e = table_.Find(degree, diameter);
  return e ? std::optional<RecordEntry>(*e) : std::nullopt;
}

bool RecordStore::UpdateIfBetter(RecordEntry e) {
  std::unique_lock lock(mu_);
  return table_.UpdateIfBetter(std::move(e));
}

RecordTable RecordStore::Snapshot() const {
  std::shared_lock lock(mu_);
  return table_;
}

}  // namespace circdd
