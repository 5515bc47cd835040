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

#ifndef PMGREEDY_EXACT_H_
#define PMGREEDY_EXACT_H_

#include <cstdint>
#include <optional>

#include "pmgreedy/element_set.h"
#include "pmgreedy/partition_matroid.h"
#include "pmgreedy/value_oracle.h"

namespace pmgreedy {

// Exhaustive optimum of f over the feasible sets of a partition matroid.
struct ExactResult {
  ElementSet best_set;
  double best_value = 0.0;
  std::int64_t feasible_count = 0;
  std::int64_t oracle_calls = 0;
};

inline constexpr double kMaxEnumeration = 1e7;

// prod_i sum_{j <= d_i} C(|B_i|, j), computed in floating point so that
// oversize instances report an estimate instead of overflowing.
double FeasibleSetCount(const PartitionMatroid& m);

// Enumerates every feasible set (per-block subsets by size, then
// lexicographically, combined block by block) and returns the maximizer.
// Ties go to the lexicographically smallest set. Throws BudgetError when
// FeasibleSetCount(m) > kMaxEnumeration.
ExactResult BruteForceOpt(const ValueOracle& f, const PartitionMatroid& m);

// Tolerance used by the structural property checks below.
inline constexpr double kPropertyTolerance = 1e-9;

struct PairViolation {
  ElementSet u;
  ElementSet w;
  double lhs = 0.0;  // side that should be larger
  double rhs = 0.0;
};

struct MonotoneViolation {
  ElementSet s;
  Element element = -1;
  double before = 0.0;  // f(S)
  double after = 0.0;   // f(S u {element})
};

template <typename Witness>
struct PropertyCheck {
  bool holds = true;
  std::optional<Witness> witness;  // first violation found
};

// f(U) + f(W) >= f(U u W) + f(U n W) for all pairs; n <= 12.
// Pairs are scanned with U, then W, in ascending bitmask order.
PropertyCheck<PairViolation> IsSubmodular(const ValueOracle& f);

// f(S) <= f(S u {w}) for all S and w outside S; n <= 14.
PropertyCheck<MonotoneViolation> IsMonotone(const ValueOracle& f);

// f(U) + f(W) >= f(U u W) for all pairs; n <= 12.
PropertyCheck<PairViolation> IsSubadditive(const ValueOracle& f);

}  // namespace pmgreedy

#endif  // PMGREEDY_EXACT_H_
