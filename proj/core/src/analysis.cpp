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

#include "circdd/analysis.hpp"

#include <cmath>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "circdd/error.hpp"

namespace circdd {
namespace {

std::vector<std::pair<int, int>> Monomials(int max_total_degree) {
  std::vector<std::pair<int, int>> out;
  for (int total = 0; total <= max_total_degree; ++total) {
    for (int a = total; a >= 0; --a) out.emplace_back(a, total - a);
  }
  return out;
}

double Transform(FitTransform t, double v) {
  if (t == FitTransform::kIdentity) return v;
  if (!(v > 0)) throw Error(ErrorCode::kInvalidArgument, "log of a non-positive cell");
  return std::log(v);
}

double Choose(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

double PolyFit::Evaluate(double degree, double diameter) const {
  const double x = degree - deg_center;
  const double y = diameter - diam_center;
  double sum = 0;
  for (const auto& [ab, c] : centered) sum += c * std::pow(x, ab.first) * std::pow(y, ab.second);
  return sum;
}

std::string PolyFit::ToJson() const {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [ab, c] : coefficients) {
    coeffs.push_back({{"deg_power", ab.first}, {"diam_power", ab.second}, {"value", c}});
  }
  nlohmann::json doc = {{"max_total_degree", max_total_degree},
                        {"transform", transform == FitTransform::kLog ? "log" : "identity"},
                        {"r_squared", r_squared},
                        {"samples", samples},
                        {"coefficients", coeffs}};
  return doc.dump(2) + "\n";
}

PolyFit FitPoly(const Grid& grid, int max_total_degree, FitTransform transform) {
  if (max_total_degree != 3 && max_total_degree != 4) {
    throw Error(ErrorCode::kInvalidArgument, "fit degree must be 3 or 4");
  }
  const auto monomials = Monomials(max_total_degree);
  std::vector<double> xs, ys, zs;
  for (int deg = grid.deg_lo(); deg <= grid.deg_hi(); ++deg) {
    for (int d = grid.diam_lo(); d <= grid.diam_hi(); ++d) {
      if (const auto& v = grid.at(deg, d)) {
        xs.push_back(deg);
        ys.push_back(d);
        zs.push_back(Transform(transform, *v));
      }
    }
  }
  const std::size_t rows = zs.size();
  const std::size_t cols = monomials.size();
  if (rows < cols) {
    throw Error(ErrorCode::kSingularFit, std::to_string(rows) + " cells for " +
                                             std::to_string(cols) + " coefficients");
  }

  PolyFit fit;
  fit.max_total_degree = max_total_degree;
  fit.transform = transform;
  fit.samples = rows;
  for (std::size_t r = 0; r < rows; ++r) {
    fit.deg_center += xs[r];
    fit.diam_center += ys[r];
  }
  fit.deg_center /= static_cast<double>(rows);
  fit.diam_center /= static_cast<double>(rows);

  Eigen::MatrixXd design(rows, cols);
  Eigen::VectorXd response(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const double x = xs[r] - fit.deg_center;
    const double y = ys[r] - fit.diam_center;
    for (std::size_t c = 0; c < cols; ++c) {
      design(r, c) = std::pow(x, monomials[c].first) * std::pow(y, monomials[c].second);
    }
    response(r) = zs[r];
  }
  const Eigen::MatrixXd normal = design.transpose() * design;
  const Eigen::VectorXd rhs = design.transpose() * response;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(normal);
  qr.setThreshold(1e-12);
  if (qr.rank() < static_cast<Eigen::Index>(cols)) {
    throw Error(ErrorCode::kSingularFit, "design matrix has rank " + std::to_string(qr.rank()) +
                                             " < " + std::to_string(cols));
  }
  const Eigen::VectorXd beta = qr.solve(rhs);

  for (std::size_t c = 0; c < cols; ++c) fit.centered[monomials[c]] = beta(c);

  // Expand sum beta_ab (deg - cx)^a (D - cy)^b into the raw monomial basis.
  for (const auto& ab : monomials) fit.coefficients[ab] = 0.0;
  for (std::size_t c = 0; c < cols; ++c) {
    const auto [a, b] = monomials[c];
    for (int p = 0; p <= a; ++p) {
      for (int q = 0; q <= b; ++q) {
        fit.coefficients[{p, q}] += beta(c) * Choose(a, p) * std::pow(-fit.deg_center, a - p) *
                                    Choose(b, q) * std::pow(-fit.diam_center, b - q);
      }
    }
  }

  const Eigen::VectorXd residual = response - design * beta;
  const double mean = response.mean();
  const double ss_res = residual.squaredNorm();
  const double ss_tot = (response.array() - mean).square().sum();
  fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : (ss_res <= 1e-24 ? 1.0 : 0.0);
  return fit;
}

Grid DiffGrid(const PolyFit& fit, const Grid& actual, bool normalize) {
  Grid out(actual.deg_lo(), actual.deg_hi(), actual.diam_lo(), actual.diam_hi());
  for (int deg = actual.deg_lo(); deg <= actual.deg_hi(); ++deg) {
    for (int d = actual.diam_lo(); d <= actual.diam_hi(); ++d) {
      const auto& v = actual.at(deg, d);
      if (!v) continue;
      const double a = Transform(fit.transform, *v);
      double diff = fit.Evaluate(deg, d) - a;
      if (normalize) {
        if (a == 0.0) {
          throw Error(ErrorCode::kDivisionByZero, "actual cell (" + std::to_string(deg) + ", " +
                                                      std::to_string(d) + ") is zero");
        }
        diff /= a;
      }
      out.at(deg, d) = diff;
    }
  }
  return out;
}

PolyFit PercentageFit(const Grid& grid) { return FitPoly(grid, 4, FitTransform::kIdentity); }

Grid BoundGrid(BoundKind kind, int deg_lo, int deg_hi, int diam_lo, int diam_hi) {
  Grid grid(deg_lo, deg_hi, diam_lo, diam_hi);
  for (int deg = deg_lo; deg <= deg_hi; ++deg) {
    for (int d = diam_lo; d <= diam_hi; ++d) {
      const bool circulant = kind == BoundKind::kCirculantEven || kind == BoundKind::kCirculantOdd;
      grid.at(deg, d) = Bound(circulant ? CirculantKind(deg) : kind, deg, d).convert_to<double>();
    }
  }
  return grid;
}

Grid RecordGrid(const RecordTable& table, int deg_lo, int deg_hi, int diam_lo, int diam_hi) {
  Grid grid(deg_lo, deg_hi, diam_lo, diam_hi);
  for (const auto& [key, e] : table.entries()) {
    if (grid.contains(key.first, key.second)) {
      grid.at(key.first, key.second) = static_cast<double>(e.order);
    }
  }
  return grid;
}

Grid FilterParity(const Grid& grid, int parity) {
  Grid out = grid;
  for (int deg = grid.deg_lo(); deg <= grid.deg_hi(); ++deg) {
    if (deg % 2 == parity) continue;
    for (int d = grid.diam_lo(); d <= grid.diam_hi(); ++d) out.at(deg, d).reset();
  }
  return out;
}

}  // namespace circdd
