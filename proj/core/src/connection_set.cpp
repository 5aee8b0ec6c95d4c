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

#include "circdd/connection_set.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "circdd/error.hpp"

namespace circdd {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidOrder: return "InvalidOrder";
    case ErrorCode::kInvalidGenerator: return "InvalidGenerator";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kNotAUnit: return "NotAUnit";
    case ErrorCode::kNotCoprime: return "NotCoprime";
    case ErrorCode::kDisconnectedFactor: return "DisconnectedFactor";
    case ErrorCode::kDegenerateOrder: return "DegenerateOrder";
    case ErrorCode::kEvenBase: return "EvenBase";
    case ErrorCode::kParityError: return "ParityError";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNoProductFound: return "NoProductFound";
    case ErrorCode::kRejectedUnverified: return "RejectedUnverified";
    case ErrorCode::kSingularFit: return "SingularFit";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

ConnectionSet ConnectionSet::Canonical(std::int64_t n, std::span<const std::int64_t> raw) {
  if (n < 2 || n > kMaxOrder) {
    throw Error(ErrorCode::kInvalidOrder, "order " + std::to_string(n) + " outside [2, 2^31-1]");
  }
  if (raw.empty()) throw Error(ErrorCode::kEmptySet, "no generators given for order " + std::to_string(n));

  std::vector<Vertex> proper;
  proper.reserve(raw.size());
  bool has_half = false;
  for (std::int64_t x : raw) {
    std::int64_t r = x % n;
    if (r < 0) r += n;
    if (r == 0) {
      throw Error(ErrorCode::kInvalidGenerator,
                  std::to_string(x) + " is congruent to 0 mod " + std::to_string(n));
    }
    r = std::min(r, n - r);
    if (2 * r == n) {
      has_half = true;
    } else {
      proper.push_back(static_cast<Vertex>(r));
    }
  }
  std::sort(proper.begin(), proper.end());
  proper.erase(std::unique(proper.begin(), proper.end()), proper.end());
  return ConnectionSet(static_cast<Vertex>(n), std::move(proper), has_half);
}

namespace {

std::int64_t ParseInt(std::string_view token, std::string_view whole) {
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
  if (token.starts_with("+-") || token.starts_with("-+")) token.remove_prefix(2);
  else if (token.starts_with("+")) token.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::kParseError,
                "bad integer '" + std::string(token) + "' in '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

ConnectionSet ConnectionSet::Parse(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) {
    throw Error(ErrorCode::kParseError, "expected 'n;s1,s2,...', got '" + std::string(text) + "'");
  }
  const std::int64_t n = ParseInt(text.substr(0, semi), text);
  std::vector<std::int64_t> gens;
  std::string_view rest = text.substr(semi + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view tok = rest.substr(0, comma);
    bool blank = std::all_of(tok.begin(), tok.end(),
                             [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    // A trailing comma is tolerated; an empty middle token is not.
    if (blank && comma != std::string_view::npos) {
      throw Error(ErrorCode::kParseError, "empty generator in '" + std::string(text) + "'");
    }
    if (!blank) gens.push_back(ParseInt(tok, text));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return Canonical(n, gens);
}

std::vector<Vertex> ConnectionSet::generators() const {
  std::vector<Vertex> out = proper_;
  if (has_half_) out.push_back(half());
  return out;
}

std::vector<Vertex> ConnectionSet::signed_steps() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(degree()));
  out.insert(out.end(), proper_.begin(), proper_.end());
  if (has_half_) out.push_back(half());
  for (Vertex s : proper_) out.push_back(n_ - s);
  return out;
}

std::string ConnectionSet::ToString() const {
  std::ostringstream os;
  os << n_ << ';';
  bool first = true;
  for (Vertex s : generators()) {
    if (!first) os << ',';
    os << s;
    first = false;
  }
  return os.str();
}

std::strong_ordering operator<=>(const ConnectionSet& a, const ConnectionSet& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = std::lexicographical_compare_three_way(a.proper_.begin(), a.proper_.end(),
                                                      b.proper_.begin(), b.proper_.end());
      c != 0) {
    return c;
  }
  return a.has_half_ <=> b.has_half_;
}

}  // namespace circdd
