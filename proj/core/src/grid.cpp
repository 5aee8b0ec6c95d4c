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

#include "circdd/grid.hpp"

#include <algorithm>
#include <sstream>

#include "circdd/error.hpp"

namespace circdd {

Grid::Grid(int deg_lo, int deg_hi, int diam_lo, int diam_hi)
    : deg_lo_(deg_lo), deg_hi_(deg_hi), diam_lo_(diam_lo), diam_hi_(diam_hi) {
  if (deg_lo > deg_hi || diam_lo > diam_hi) {
    throw Error(ErrorCode::kInvalidArgument, "empty grid range");
  }
  values_.resize(static_cast<std::size_t>(deg_hi - deg_lo + 1) *
                 static_cast<std::size_t>(diam_hi - diam_lo + 1));
}

std::size_t Grid::index(int degree, int diameter) const {
  if (!contains(degree, diameter)) {
    throw Error(ErrorCode::kInvalidArgument, "cell (" + std::to_string(degree) + ", " +
                                                 std::to_string(diameter) + ") outside grid");
  }
  return static_cast<std::size_t>(degree - deg_lo_) * static_cast<std::size_t>(diam_hi_ - diam_lo_ + 1) +
         static_cast<std::size_t>(diameter - diam_lo_);
}

std::optional<double>& Grid::at(int degree, int diameter) { return values_[index(degree, diameter)]; }

const std::optional<double>& Grid::at(int degree, int diameter) const {
  return values_[index(degree, diameter)];
}

std::size_t Grid::present() const {
  return static_cast<std::size_t>(
      std::count_if(values_.begin(), values_.end(), [](const auto& v) { return v.has_value(); }));
}

std::string Grid::ToCsv(int precision) const {
  std::ostringstream out;
  out.precision(precision);
  out << "deg";
  for (int d = diam_lo_; d <= diam_hi_; ++d) out << ",D=" << d;
  out << "\n";
  for (int deg = deg_lo_; deg <= deg_hi_; ++deg) {
    out << deg;
    for (int d = diam_lo_; d <= diam_hi_; ++d) {
      out << ',';
      if (const auto& v = at(deg, d)) out << *v;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace circdd
