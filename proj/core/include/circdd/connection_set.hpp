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

#ifndef CIRCDD_CONNECTION_SET_HPP_
#define CIRCDD_CONNECTION_SET_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace circdd {

using Vertex = std::uint32_t;

// Largest supported group order.
inline constexpr std::int64_t kMaxOrder = (std::int64_t{1} << 31) - 1;

// Canonical symmetric generating set of Z_n.
//
// Stores only one representative per pair {s, n - s}: the "proper" generators
// satisfy 1 <= s < n/2 and are kept sorted, and the self-inverse element n/2
// (n even) is tracked by a flag. The degree of the circulant is
// 2 * |proper| + has_half.
class ConnectionSet {
 public:
  // Reduces every element mod n, folds x onto min(x, n - x), merges
  // duplicates and recognises n/2. Throws InvalidOrder for n < 2 or
  // n > kMaxOrder, InvalidGenerator for an element congruent to 0 and
  // EmptySet when `raw` is empty.
  static ConnectionSet Canonical(std::int64_t n, std::span<const std::int64_t> raw);
  static ConnectionSet Canonical(std::int64_t n, std::initializer_list<std::int64_t> raw) {
    return Canonical(n, std::span<const std::int64_t>(raw.begin(), raw.size()));
  }

  // Parses the text form "n;s1,s2,..." (half generator written explicitly)
  // and canonicalises it. Accepts surrounding whitespace and "+-" prefixes.
  static ConnectionSet Parse(std::string_view text);

  Vertex order() const { return n_; }
  const std::vector<Vertex>& proper() const { return proper_; }
  bool has_half() const { return has_half_; }
  Vertex half() const { return n_ / 2; }
  int degree() const { return 2 * static_cast<int>(proper_.size()) + (has_half_ ? 1 : 0); }

  // Proper generators followed by n/2 when present.
  std::vector<Vertex> generators() const;

  // Every element of S u -S as a residue in [1, n): +s ascending, then the
  // half generator, then -s in ascending order of s. This is also the fixed
  // total order used to pick canonical path representatives.
  std::vector<Vertex> signed_steps() const;

  // "n;s1,...,st[,n/2]".
  std::string ToString() const;

  friend bool operator==(const ConnectionSet&, const ConnectionSet&) = default;
  friend std::strong_ordering operator<=>(const ConnectionSet& a, const ConnectionSet& b);

 private:
  ConnectionSet(Vertex n, std::vector<Vertex> proper, bool has_half)
      : n_(n), proper_(std::move(proper)), has_half_(has_half) {}

  Vertex n_ = 0;
  std::vector<Vertex> proper_;
  bool has_half_ = false;
};

}  // namespace circdd

#endif  // CIRCDD_CONNECTION_SET_HPP_
