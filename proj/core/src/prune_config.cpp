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

#include "circdd/prune_config.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "circdd/error.hpp"

namespace circdd {
namespace {

std::int64_t ModInverse(std::int64_t a, std::int64_t n) {
  std::int64_t t = 0, new_t = 1, r = n, new_r = a % n;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return t < 0 ? t + n : t;
}

[[noreturn]] void Fail(int line, const std::string& what) {
  throw Error(ErrorCode::kParseError, "prune config line " + std::to_string(line) + ": " + what);
}

}  // namespace

bool PruneConfig::has_ceilings() const {
  return std::any_of(ceilings.begin(), ceilings.end(),
                     [](const auto& kv) { return kv.second != kUnbounded; });
}

PruneConfig PruneConfig::Exhaustive() {
  PruneConfig cfg;
  cfg.require_s1_eq_1 = false;
  return cfg;
}

PruneConfig PruneConfig::Parse(std::string_view text) {
  PruneConfig cfg;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::string head;
    if (!(line >> head)) continue;
    std::string extra;
    if (head == "k") {
      int k = 0;
      if (!(line >> k) || k < 1) Fail(line_no, "k needs an integer >= 1");
      if (line >> extra) Fail(line_no, "trailing text");
      cfg.k = k;
    } else if (head == "s1") {
      std::string mode;
      line >> mode;
      if (mode == "fixed") {
        cfg.require_s1_eq_1 = true;
      } else if (mode == "free") {
        cfg.require_s1_eq_1 = false;
      } else {
        Fail(line_no, "s1 must be 'fixed' or 'free'");
      }
      if (line >> extra) Fail(line_no, "trailing text");
    } else {
      int i = 0, d = 0;
      std::string value;
      try {
        std::size_t used = 0;
        i = std::stoi(head, &used);
        if (used != head.size()) Fail(line_no, "bad distance '" + head + "'");
      } catch (const std::logic_error&) {
        Fail(line_no, "unknown directive '" + head + "'");
      }
      if (!(line >> d >> value)) Fail(line_no, "expected '<i> <d> <ceiling>'");
      if (line >> extra) Fail(line_no, "trailing text");
      if (i < 0 || d < i) Fail(line_no, "need 0 <= i <= d");
      std::uint32_t c = kUnbounded;
      if (value != "inf") {
        try {
          std::size_t used = 0;
          const long long v = std::stoll(value, &used);
          if (used != value.size() || v < 0 || v >= kUnbounded) throw std::out_of_range(value);
          c = static_cast<std::uint32_t>(v);
        } catch (const std::logic_error&) {
          Fail(line_no, "bad ceiling '" + value + "'");
        }
      }
      cfg.ceilings[{i, d}] = c;
    }
  }
  return cfg;
}

std::string PruneConfig::ToString() const {
  std::ostringstream out;
  out << "k " << k << "\n";
  out << "s1 " << (require_s1_eq_1 ? "fixed" : "free") << "\n";
  for (const auto& [key, c] : ceilings) {
    out << key.first << ' ' << key.second << ' ';
    if (c == kUnbounded) {
      out << "inf";
    } else {
      out << c;
    }
    out << "\n";
  }
  return out.str();
}

PruneConfig PruneConfig::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return Parse(buf.str());
}

void PruneConfig::Save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out << ToString();
}

bool PruneAdmissible(const CirculantGraph& g, int diameter, const PruneConfig& cfg,
                     const DistanceProfile& profile, PathCounter& counter) {
  if (!cfg.has_ceilings() || diameter < 1) return true;
  counter.Run(g.order(), g.steps(), diameter - 1);
  // Every vertex at distance i < D has a length-i class (its shortest walk
  // reordered canonically stays simple), so the touched list covers them.
  for (Vertex w : counter.touched()) {
    const std::uint32_t i = profile.dist[w];
    if (i == kUnreachable || static_cast<int>(i) >= diameter) continue;
    for (int d = static_cast<int>(i); d < diameter; ++d) {
      if (counter.count(w, d) > cfg.ceiling(static_cast<int>(i), d)) return false;
    }
  }
  return true;
}

bool PruneAdmissible(const CirculantGraph& g, int diameter, const PruneConfig& cfg,
                     const DistanceProfile& profile) {
  PathCounter counter;
  return PruneAdmissible(g, diameter, cfg, profile, counter);
}

std::map<std::pair<int, int>, std::uint32_t> ObservedPathCounts(const CirculantGraph& g,
                                                                int diameter) {
  std::map<std::pair<int, int>, std::uint32_t> out;
  if (diameter < 1) return out;
  const DistanceProfile profile = DistancesFromZero(g);
  PathCounter counter;
  counter.Run(g.order(), g.steps(), diameter - 1);
  for (Vertex w : counter.touched()) {
    const std::uint32_t i = profile.dist[w];
    if (i == kUnreachable || static_cast<int>(i) >= diameter) continue;
    for (int d = static_cast<int>(i); d < diameter; ++d) {
      auto& slot = out[{static_cast<int>(i), d}];
      slot = std::max(slot, counter.count(w, d));
    }
  }
  return out;
}

PruneConfig ProfileCeilings(std::span<const ConnectionSet> witnesses, int diameter,
                            std::uint32_t slack) {
  PruneConfig cfg;
  std::set<ConnectionSet> nodes;
  for (const ConnectionSet& s : witnesses) {
    const std::int64_t n = s.order();
    for (Vertex g : s.generators()) {
      if (std::gcd<std::int64_t, std::int64_t>(g, n) != 1) continue;
      const ConnectionSet image = MultiplySet(CirculantGraph(s), ModInverse(g, n)).connection_set();
      const auto& proper = image.proper();
      if (proper.empty() || proper.front() != 1) continue;
      std::vector<std::int64_t> prefix;
      for (Vertex p : proper) {
        prefix.push_back(p);
        std::vector<std::int64_t> gens = prefix;
        if (image.has_half()) gens.push_back(image.half());
        nodes.insert(ConnectionSet::Canonical(n, gens));
      }
    }
  }
  if (nodes.empty()) return cfg;

  std::map<std::pair<int, int>, std::uint32_t> maxima;
  for (int i = 0; i < diameter; ++i) {
    for (int d = i; d < diameter; ++d) maxima[{i, d}] = 0;
  }
  for (const ConnectionSet& node : nodes) {
    for (const auto& [key, c] : ObservedPathCounts(CirculantGraph(node), diameter)) {
      maxima[key] = std::max(maxima[key], c);
    }
  }
  for (const auto& [key, c] : maxima) cfg.ceilings[key] = c + slack;
  return cfg;
}

}  // namespace circdd
