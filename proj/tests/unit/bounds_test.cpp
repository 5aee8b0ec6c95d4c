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

#include <gtest/gtest.h>

#include <cmath>

#include "circdd/bounds.hpp"
#include "circdd/error.hpp"
#include "oracles.hpp"

namespace circdd {
namespace {

BigNat U(std::uint64_t v) { return BigNat(v); }

TEST(MooreBound, SmallCases) {
  EXPECT_EQ(MooreBound(2, 4), 9);
  EXPECT_EQ(MooreBound(3, 2), 10);
  EXPECT_EQ(MooreBound(7, 2), 50);
}

TEST(MooreBound, MatchesTreeCount) {
  for (int deg = 2; deg <= 16; ++deg) {
    for (int d = 1; d <= 10; ++d) {
      EXPECT_EQ(MooreBound(deg, d), U(oracle::MooreTree(deg, d))) << deg << "," << d;
      EXPECT_EQ(forms::MooreSum(deg, d), MooreBound(deg, d));
    }
  }
}

TEST(Delannoy, SmallCases) {
  for (int t = 0; t <= 10; ++t) EXPECT_EQ(DelannoyF(t, 1), 2 * t + 1);
  EXPECT_EQ(DelannoyF(2, 2), 13);
  EXPECT_EQ(DelannoyF(4, 3), 129);
  EXPECT_EQ(DelannoyF(3, 0), 1);
}

TEST(Delannoy, CountsLatticeBallPoints) {
  for (int t = 0; t <= 8; ++t) {
    for (int d = 0; d <= 8; ++d) {
      EXPECT_EQ(DelannoyF(t, d), U(oracle::L1Ball(t, d))) << t << "," << d;
    }
  }
}

TEST(DelannoyPrime, SmallCases) {
  for (int d = 1; d <= 12; ++d) EXPECT_EQ(DelannoyFPrime(0, d), 2);
  EXPECT_EQ(DelannoyFPrime(2, 2), 18);
  EXPECT_EQ(DelannoyFPrime(6, 4), 1666);
  for (int t = 0; t <= 10; ++t) EXPECT_EQ(DelannoyFPrime(t, 1), 2 * t + 2);
}

TEST(DelannoyPrime, CountsLatticeBallWithInvolution) {
  for (int t = 0; t <= 8; ++t) {
    for (int d = 1; d <= 8; ++d) {
      EXPECT_EQ(DelannoyFPrime(t, d), U(oracle::L1BallWithInvolution(t, d))) << t << "," << d;
    }
  }
}

TEST(Delannoy, AlternativeFormsAgree) {
  for (int t = 0; t <= 12; ++t) {
    for (int d = 1; d <= 12; ++d) {
      const BigNat f = DelannoyF(t, d);
      EXPECT_EQ(forms::DelannoyShiftedUpper(t, d), f) << t << "," << d;
      EXPECT_EQ(forms::DelannoyShiftedLower(t, d), f) << t << "," << d;
      EXPECT_EQ(forms::DelannoyConvolutionA(t, d), f) << t << "," << d;
      EXPECT_EQ(forms::DelannoyConvolutionB(t, d), f) << t << "," << d;
      EXPECT_EQ(forms::DelannoyRecurrence(t, d), f) << t << "," << d;
      const BigNat g = DelannoyFPrime(t, d);
      EXPECT_EQ(forms::OddBoundA(t, d), g) << t << "," << d;
      EXPECT_EQ(forms::OddBoundB(t, d), g) << t << "," << d;
      EXPECT_EQ(forms::OddBoundC(t, d), g) << t << "," << d;
      EXPECT_EQ(forms::OddBoundRecurrence(t, d), g) << t << "," << d;
    }
  }
}

TEST(Delannoy, IsSymmetric) {
  for (int t = 0; t <= 12; ++t) {
    for (int d = 0; d <= 12; ++d) EXPECT_EQ(DelannoyF(t, d), DelannoyF(d, t));
  }
}

TEST(Delannoy, OddBoundInterleavesEvenBounds) {
  for (int t = 0; t <= 12; ++t) {
    for (int d = 1; d <= 12; ++d) {
      EXPECT_LT(DelannoyF(t, d), DelannoyFPrime(t, d)) << t << "," << d;
      EXPECT_LT(DelannoyFPrime(t, d), DelannoyF(t + 1, d)) << t << "," << d;
    }
  }
}

TEST(CirculantUpperBound, DispatchesOnParity) {
  EXPECT_EQ(CirculantUpperBound(8, 5), 681);
  EXPECT_EQ(CirculantUpperBound(3, 7), 28);
  EXPECT_EQ(CirculantUpperBound(15, 3), 688);
  EXPECT_EQ(Bound(BoundKind::kCirculantEven, 8, 5), 681);
  EXPECT_EQ(Bound(BoundKind::kCirculantOdd, 15, 3), 688);
  EXPECT_EQ(CirculantKind(8), BoundKind::kCirculantEven);
  EXPECT_EQ(CirculantKind(9), BoundKind::kCirculantOdd);
  EXPECT_THROW(Bound(BoundKind::kCirculantEven, 9, 3), Error);
  EXPECT_THROW(Bound(BoundKind::kCirculantOdd, 8, 3), Error);
}

TEST(CirculantUpperBound, NeverExceedsMoore) {
  for (int deg = 2; deg <= 16; ++deg) {
    for (int d = 1; d <= 10; ++d) EXPECT_LE(CirculantUpperBound(deg, d), MooreBound(deg, d));
  }
}

TEST(TripleLoop, KnownValues) {
  EXPECT_EQ(TripleLoopMax(3), 55);
  EXPECT_EQ(TripleLoopMax(4), 117);
  EXPECT_EQ(TripleLoopMax(10), 1393);
  EXPECT_EQ(Bound(BoundKind::kTripleLoop, 6, 4), 117);
}

TEST(TripleLoop, StaysBelowTheDegreeSixBound) {
  for (int d = 1; d <= 30; ++d) EXPECT_LE(TripleLoopMax(d), DelannoyF(3, d)) << d;
}

TEST(Asymptotic, MainTerm) {
  EXPECT_DOUBLE_EQ(AsymptoticMainTerm(1, 1), 2.0);
  EXPECT_NEAR(AsymptoticMainTerm(10, 3), 8000.0 / 6.0, 1e-9);
  EXPECT_EQ(DelannoyF(10, 3), 1561);
  double previous = 0;
  for (int t : {5, 10, 20, 40}) {
    const double ratio = DelannoyF(t, 3).convert_to<double>() / AsymptoticMainTerm(t, 3);
    EXPECT_GT(ratio, 1.0);
    if (previous > 0) EXPECT_LT(ratio, previous);
    previous = ratio;
  }
}

TEST(Bounds, ExactBeyondSixtyFourBits) {
  const BigNat big = DelannoyF(60, 60);
  EXPECT_GT(big, BigNat(std::numeric_limits<std::uint64_t>::max()));
  EXPECT_EQ(big, forms::DelannoyRecurrence(60, 60));
}

TEST(Binomial, PascalRows) {
  const auto rows = PascalTriangle(10);
  EXPECT_EQ(rows[10][5], 252);
  EXPECT_EQ(Binomial(10, 5), 252);
  EXPECT_EQ(Binomial(4, 7), 0);
  EXPECT_EQ(Binomial(4, -1), 0);
}

}  // namespace
}  // namespace circdd
