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

#ifndef CIRCDD_GRID_HPP_
#define CIRCDD_GRID_HPP_

#include <optional>
#include <string>
#include <vector>

namespace circdd {

// Dense (degree, diameter) matrix over inclusive ranges; cells may be missing.
class Grid {
 public:
  Grid(int deg_lo, int deg_hi, int diam_lo, int diam_hi);

  int deg_lo() const { return deg_lo_; }
  int deg_hi() const { return deg_hi_; }
  int diam_lo() const { return diam_lo_; }
  int diam_hi() const { return diam_hi_; }

  bool contains(int degree, int diameter) const {
    return degree >= deg_lo_ && degree <= deg_hi_ && diameter >= diam_lo_ && diameter <= diam_hi_;
  }

  // Throws InvalidArgument outside the ranges.
  std::optional<double>& at(int degree, int diameter);
  const std::optional<double>& at(int degree, int diameter) const;

  std::size_t present() const;

  // Header row "deg,D=lo,...,D=hi", then one row per degree. Missing cells
  // are empty fields. `precision` significant digits.
  std::string ToCsv(int precision = 10) const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t index(int degree, int diameter) const;

  int deg_lo_, deg_hi_, diam_lo_, diam_hi_;
  std::vector<std::optional<double>> values_;
};

}  // namespace circdd

#endif  // CIRCDD_GRID_HPP_
