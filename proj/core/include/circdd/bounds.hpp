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

// Upper bounds on the order of graphs with given degree and diameter.
//
// All bounds are exact (arbitrary precision). Each closed form is exposed
// separately under `forms` so that the equivalent expressions can be checked
// against each other; the top-level functions use the defining sum.

#ifndef CIRCDD_BOUNDS_HPP_
#define CIRCDD_BOUNDS_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace circdd {

using BigNat = boost::multiprecision::cpp_int;

enum class BoundKind { kMoore, kCirculantEven, kCirculantOdd, kTripleLoop };

// kCirculantEven for even degree, kCirculantOdd for odd.
BoundKind CirculantKind(int degree);

std::string_view BoundKindName(BoundKind kind);

// Binomial coefficient; 0 when k < 0 or k > n.
BigNat Binomial(int n, int k);

// Rows 0..max_n of Pascal's triangle.
std::vector<std::vector<BigNat>> PascalTriangle(int max_n);

// 1 + degree * ((degree-1)^D - 1) / (degree-2), or 2D + 1 for degree 2.
BigNat MooreBound(int degree, int diameter);

// Delannoy number sum_i 2^i C(t,i) C(D,i). Defined for t >= 0, D >= 0 with
// F(t, 0) = 1.
BigNat DelannoyF(int t, int diameter);

// Odd-degree analogue F(t, D) + F(t, D-1), D >= 1.
BigNat DelannoyFPrime(int t, int diameter);

// F(t, D) for even degree 2t, F'(t, D) for odd degree 2t + 1.
BigNat CirculantUpperBound(int degree, int diameter);

// Largest triple-loop network C(n; 1, s2, s3) of the given diameter; the
// three-branch polynomial selected by D mod 3.
BigNat TripleLoopMax(int diameter);

// (2t)^D / D!, the common leading term of F and F'.
double AsymptoticMainTerm(int t, int diameter);

// Dispatch used by grid output. The circulant kinds throw ParityError when
// the degree has the other parity.
BigNat Bound(BoundKind kind, int degree, int diameter);

namespace forms {

// sum_i C(t,i) C(D+i, t)
BigNat DelannoyShiftedUpper(int t, int diameter);
// sum_i C(D+i, i) C(D, t-i)
BigNat DelannoyShiftedLower(int t, int diameter);
// sum_i C(D, i) C(D+t-i, t-i)
BigNat DelannoyConvolutionA(int t, int diameter);
// sum_i C(D, t-i) C(D+i, i)
BigNat DelannoyConvolutionB(int t, int diameter);
// F(t,D) = F(t-1,D) + F(t,D-1) + F(t-1,D-1), F(t,1) = 2t+1, F(0,D) = 1.
BigNat DelannoyRecurrence(int t, int diameter);

// 2 sum_i C(D-1, i) C(D+t-i, t-i)
BigNat OddBoundA(int t, int diameter);
// 2 sum_i C(D-1, i) C(D+t-i, D). The lower index is D, not D-i; the latter
// overcounts already at t = 1, D = 2.
BigNat OddBoundB(int t, int diameter);
// 2 sum_i C(D-1, t-i) C(D+i, i)
BigNat OddBoundC(int t, int diameter);
// Same recurrence as F with F'(t,1) = 2t+2, F'(0,D) = 2.
BigNat OddBoundRecurrence(int t, int diameter);

// Expanded Moore sum 1 + sum_{i<D} degree (degree-1)^i.
BigNat MooreSum(int degree, int diameter);

}  // namespace forms

}  // namespace circdd

#endif  // CIRCDD_BOUNDS_HPP_
