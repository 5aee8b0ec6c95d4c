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

#include "circdd/bounds.hpp"

#include <string>

#include "circdd/error.hpp"

namespace circdd {
namespace {

void Require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

void RequireTD(int t, int diameter, int min_diameter) {
  Require(t >= 0, "t must be >= 0, got " + std::to_string(t));
  Require(diameter >= min_diameter, "diameter must be >= " + std::to_string(min_diameter) +
                                        ", got " + std::to_string(diameter));
}

// C(n, k) read off a Pascal triangle, with out-of-range entries as 0.
class Binomials {
 public:
  explicit Binomials(int max_n) : rows_(PascalTriangle(max_n)) {}
  const BigNat& operator()(int n, int k) const {
    static const BigNat kZero = 0;
    if (n < 0 || k < 0 || k > n || n >= static_cast<int>(rows_.size())) return kZero;
    return rows_[n][k];
  }

 private:
  std::vector<std::vector<BigNat>> rows_;
};

}  // namespace

std::string_view BoundKindName(BoundKind kind) {
  switch (kind) {
    case BoundKind::kMoore: return "moore";
    case BoundKind::kCirculantEven: return "circulant-even";
    case BoundKind::kCirculantOdd: return "circulant-odd";
    case BoundKind::kTripleLoop: return "triple";
  }
  return "?";
}

std::vector<std::vector<BigNat>> PascalTriangle(int max_n) {
  std::vector<std::vector<BigNat>> rows;
  if (max_n < 0) return rows;
  rows.reserve(static_cast<std::size_t>(max_n) + 1);
  rows.push_back({BigNat(1)});
  for (int n = 1; n <= max_n; ++n) {
    const auto& prev = rows.back();
    std::vector<BigNat> row(static_cast<std::size_t>(n) + 1);
    row.front() = 1;
    row.back() = 1;
    for (int k = 1; k < n; ++k) row[k] = prev[k - 1] + prev[k];
    rows.push_back(std::move(row));
  }
  return rows;
}

BigNat Binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  // Single Pascal row, updated in place right to left.
  std::vector<BigNat> row(static_cast<std::size_t>(k) + 1, BigNat(0));
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) row[j] += row[j - 1];
  }
  return row[k];
}

BigNat MooreBound(int degree, int diameter) {
  Require(degree >= 2, "degree must be >= 2");
  Require(diameter >= 1, "diameter must be >= 1");
  if (degree == 2) return BigNat(2 * diameter + 1);
  const BigNat d = degree;
  BigNat power = boost::multiprecision::pow(BigNat(degree - 1), static_cast<unsigned>(diameter));
  return 1 + d * (power - 1) / (d - 2);
}

BigNat DelannoyF(int t, int diameter) {
  RequireTD(t, diameter, 0);
  const Binomials c(std::max(t, diameter));
  BigNat sum = 0;
  BigNat pow2 = 1;
  for (int i = 0; i <= t; ++i) {
    sum += pow2 * c(t, i) * c(diameter, i);
    pow2 *= 2;
  }
  return sum;
}

BigNat DelannoyFPrime(int t, int diameter) {
  RequireTD(t, diameter, 1);
  return DelannoyF(t, diameter) + DelannoyF(t, diameter - 1);
}

BigNat CirculantUpperBound(int degree, int diameter) {
  Require(degree >= 2, "degree must be >= 2");
  Require(diameter >= 1, "diameter must be >= 1");
  const int t = degree / 2;
  return degree % 2 == 0 ? DelannoyF(t, diameter) : DelannoyFPrime(t, diameter);
}

BigNat TripleLoopMax(int diameter) {
  Require(diameter >= 1, "diameter must be >= 1");
  const BigNat k = diameter / 3;
  switch (diameter % 3) {
    case 0:
      // 32/27 D^3 + 16/9 D^2 + 2D + 1 with D = 3k.
      return 32 * k * k * k + 16 * k * k + 6 * k + 1;
    case 1:
      return 32 * k * k * k + 48 * k * k + 30 * k + 7;
    default:
      return 32 * k * k * k + 80 * k * k + 70 * k + 21;
  }
}

double AsymptoticMainTerm(int t, int diameter) {
  Require(t >= 1 && diameter >= 1, "t and diameter must be >= 1");
  double value = 1.0;
  for (int i = 1; i <= diameter; ++i) value *= 2.0 * t / i;
  return value;
}

BoundKind CirculantKind(int degree) {
  return degree % 2 == 0 ? BoundKind::kCirculantEven : BoundKind::kCirculantOdd;
}

BigNat Bound(BoundKind kind, int degree, int diameter) {
  switch (kind) {
    case BoundKind::kMoore: return MooreBound(degree, diameter);
    case BoundKind::kCirculantEven:
    case BoundKind::kCirculantOdd:
      if (kind != CirculantKind(degree)) {
        throw Error(ErrorCode::kParityError, std::string(BoundKindName(kind)) + " bound at degree " +
                                                 std::to_string(degree));
      }
      return CirculantUpperBound(degree, diameter);
    case BoundKind::kTripleLoop: return TripleLoopMax(diameter);
  }
  return 0;
}

namespace forms {

BigNat DelannoyShiftedUpper(int t, int diameter) {
  RequireTD(t, diameter, 0);
  const Binomials c(diameter + t);
  BigNat sum = 0;
  for (int i = 0; i <= t; ++i) sum += c(t, i) * c(diameter + i, t);
  return sum;
}

BigNat DelannoyShiftedLower(int t, int diameter) {
  RequireTD(t, diameter, 0);
  const Binomials c(diameter + t);
  BigNat sum = 0;
  for (int i = 0; i <= t; ++i) sum += c(diameter + i, i) * c(diameter, t - i);
  return sum;
}

BigNat DelannoyConvolutionA(int t, int diameter) {
  RequireTD(t, diameter, 0);
  const Binomials c(diameter + t);
  BigNat sum = 0;
  for (int i = 0; i <= t; ++i) sum += c(diameter, i) * c(diameter + t - i, t - i);
  return sum;
}

BigNat DelannoyConvolutionB(int t, int diameter) {
  RequireTD(t, diameter, 0);
  const Binomials c(diameter + t);
  BigNat sum = 0;
  for (int i = 0; i <= t; ++i) sum += c(diameter, t - i) * c(diameter + i, i);
  return sum;
}

BigNat DelannoyRecurrence(int t, int diameter) {
  RequireTD(t, diameter, 0);
  // table[a][d] = F(a, d)
  std::vector<std::vector<BigNat>> table(static_cast<std::size_t>(t) + 1,
                                         std::vector<BigNat>(static_cast<std::size_t>(diameter) + 1));
  for (int a = 0; a <= t; ++a) {
    for (int d = 0; d <= diameter; ++d) {
      if (d == 0 || a == 0) {
        table[a][d] = 1;
      } else if (d == 1) {
        table[a][d] = 2 * a + 1;
      } else {
        table[a][d] = table[a - 1][d] + table[a][d - 1] + table[a - 1][d - 1];
      }
    }
  }
  return table[t][diameter];
}

BigNat OddBoundA(int t, int diameter) {
  RequireTD(t, diameter, 1);
  const Binomials c(diameter + t);
  BigNat sum = 0;
  for (int i = 0; i <= t; ++i) sum += c(diameter - 1, i) * c(diameter + t - i, t - i);
  return 2 * sum;
}

BigNat OddBoundB(int t, int diameter) {
  RequireTD(t, diameter, 1);
  const Binomials c(diameter + t);
  BigNat sum = 0;
  for (int i = 0; i <= t; ++i) sum += c(diameter - 1, i) * c(diameter + t - i, diameter);
  return 2 * sum;
}

BigNat OddBoundC(int t, int diameter) {
  RequireTD(t, diameter, 1);
  const Binomials c(diameter + t);
  BigNat sum = 0;
  for (int i = 0; i <= t; ++i) sum += c(diameter - 1, t - i) * c(diameter + i, i);
  return 2 * sum;
}

BigNat OddBoundRecurrence(int t, int diameter) {
  RequireTD(t, diameter, 1);
  std::vector<std::vector<BigNat>> table(static_cast<std::size_t>(t) + 1,
                                         std::vector<BigNat>(static_cast<std::size_t>(diameter) + 1));
  for (int a = 0; a <= t; ++a) {
    for (int d = 1; d <= diameter; ++d) {
      if (a == 0) {
        table[a][d] = 2;
      } else if (d == 1) {
        table[a][d] = 2 * a + 2;
      } else {
        table[a][d] = table[a - 1][d] + table[a][d - 1] + table[a - 1][d - 1];
      }
    }
  }
  return table[t][diameter];
}

BigNat MooreSum(int degree, int diameter) {
  Require(degree >= 2 && diameter >= 1, "degree >= 2 and diameter >= 1 required");
  BigNat sum = 1;
  BigNat term = degree;
  for (int i = 0; i < diameter; ++i) {
    sum += term;
    term *= degree - 1;
  }
  return sum;
}

}  // namespace forms

}  // namespace circdd
