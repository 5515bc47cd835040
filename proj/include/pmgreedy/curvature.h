// Copyright 2026 The Authors.
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

#ifndef PMGREEDY_CURVATURE_H_
#define PMGREEDY_CURVATURE_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "pmgreedy/element_set.h"
#include "pmgreedy/value_oracle.h"

namespace pmgreedy {

enum class CurvatureMethod {
  kExact,
  kSubmodularBound,
  kDegreeBound,
  kEigenvalueBound,
  kSumRule,
};

std::string_view ToString(CurvatureMethod method);
// Accepts the names produced by ToString(). Throws InputError otherwise.
CurvatureMethod ParseCurvatureMethod(std::string_view name);

// A triple (S, Omega, w) with w in S \ Omega, certifying the reported value.
struct CurvatureWitness {
  ElementSet s;
  ElementSet omega;
  Element element = -1;

  friend bool operator==(const CurvatureWitness&,
                         const CurvatureWitness&) = default;
};

struct CurvatureReport {
  double alpha = 0.0;
  CurvatureMethod method = CurvatureMethod::kExact;
  std::optional<CurvatureWitness> witness;
};

// Largest n accepted by ExactCurvature().
inline constexpr int kMaxExactCurvatureN = 14;
// Largest n accepted by SubmodularCurvatureBound().
inline constexpr int kMaxSubmodularBoundN = 20;

// Smallest alpha with
//   rho_w((S u Omega) \ {w}) >= (1 - alpha) * rho_w(S \ {w})
// over all S, Omega and w in S \ Omega whose base marginal rho_w(S \ {w}) is
// strictly positive, i.e. the supremum of 1 - rho_w(B) / rho_w(A) over
// A subset of B, w outside B, rho_w(A) > 0.
//
// Triples with a non-positive base marginal are left out: with Omega = {}
// a negative base marginal alone would force alpha <= 0, so keeping them
// leaves no admissible alpha for any non-monotone function.
//
// The witness is the first maximizer in the order (w, A, B) by ascending
// element id and subset bitmask. Uses 2^n oracle calls and O(2^n n^2) work.
// Throws InputError for n > kMaxExactCurvatureN and DegenerateError when no
// positive base marginal exists.
CurvatureReport ExactCurvature(const ValueOracle& f);

// 1 - min over S, w in S with f({w}) > 0 of (f(S) - f(S \ {w})) / f({w}).
// Upper-bounds ExactCurvature() for monotone submodular f. Throws
// DegenerateError when every singleton value is <= 0.
CurvatureReport SubmodularCurvatureBound(const ValueOracle& f);

// Curvature of a sum is at most the largest curvature of its terms.
// Throws InputError for an empty list or a negative entry.
double SumCurvatureBound(std::span<const double> alphas);

// Certificate check of a reported alpha: the worst slack
//   rho_w(B) - (1 - alpha) * rho_w(A)
// over the triples ExactCurvature() ranges over. Non-negative (up to
// rounding) iff alpha is a valid curvature bound.
double CurvatureSlack(const ValueOracle& f, double alpha);

}  // namespace pmgreedy

#endif  // PMGREEDY_CURVATURE_H_
