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

// Least-squares polynomial surfaces over (degree, diameter) grids.

#ifndef CIRCDD_ANALYSIS_HPP_
#define CIRCDD_ANALYSIS_HPP_

#include <map>
#include <string>
#include <utility>

#include "circdd/bounds.hpp"
#include "circdd/grid.hpp"
#include "circdd/records.hpp"

namespace circdd {

enum class FitTransform { kIdentity, kLog };

struct PolyFit {
  int max_total_degree = 0;
  FitTransform transform = FitTransform::kIdentity;
  // (a, b) -> coefficient of deg^a * D^b, for a + b <= max_total_degree.
  std::map<std::pair<int, int>, double> coefficients;
  double r_squared = 0.0;
  std::size_t samples = 0;

  // Value of the polynomial (in transformed space). Evaluated in the
  // centred basis used for fitting.
  double Evaluate(double degree, double diameter) const;

  std::string ToJson() const;

  // Centred representation used by Evaluate.
  double deg_center = 0.0;
  double diam_center = 0.0;
  std::map<std::pair<int, int>, double> centered;
};

// OLS fit of the present cells. Throws SingularFit when there are fewer
// cells than monomials or the design is rank deficient, InvalidArgument for
// a degree other than 3 or 4 and for non-positive cells under kLog.
PolyFit FitPoly(const Grid& grid, int max_total_degree, FitTransform transform);

// Cell = fit(deg, D) - T(actual), divided by T(actual) when normalising,
// where T is the fit's transform. Missing actual cells stay missing. Throws
// DivisionByZero when normalising by a zero cell.
Grid DiffGrid(const PolyFit& fit, const Grid& actual, bool normalize);

// Quartic identity fit, intended for PercentageGrid output.
PolyFit PercentageFit(const Grid& grid);

// Bounds as reals. Either circulant kind selects the row's own parity.
Grid BoundGrid(BoundKind kind, int deg_lo, int deg_hi, int diam_lo, int diam_hi);

// Record orders as reals; cells without a record are missing.
Grid RecordGrid(const RecordTable& table, int deg_lo, int deg_hi, int diam_lo, int diam_hi);

// Copy keeping only rows whose degree has the given parity (0 even, 1 odd).
Grid FilterParity(const Grid& grid, int parity);

}  // namespace circdd

#endif  // CIRCDD_ANALYSIS_HPP_
