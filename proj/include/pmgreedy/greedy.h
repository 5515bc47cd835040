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

#ifndef PMGREEDY_GREEDY_H_
#define PMGREEDY_GREEDY_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "pmgreedy/element_set.h"
#include "pmgreedy/partition_matroid.h"
#include "pmgreedy/value_oracle.h"

namespace pmgreedy {

// Trajectory of one greedy run.
//
// values[0] = f(empty) and values[t] = f(S_t) for t = 1..T, where T is the
// number of accepted elements. marginals[t-1] = values[t] - values[t-1]
// exactly, and selections[t-1] is the element accepted at step t.
struct GreedyTrace {
  std::vector<Element> selections;
  std::vector<double> marginals;
  std::vector<double> values;
  ElementSet final_set;
  std::int64_t oracle_calls = 0;
  // The run ended because the best feasible marginal was negative while
  // capacity remained. The unused slots are taken by value-neutral padding,
  // so the final value equals values.back().
  bool stopped_early = false;
  // Accepted steps whose marginal was exactly zero.
  int zero_marginal_steps = 0;

  double final_value() const { return values.back(); }
  int steps() const { return static_cast<int>(selections.size()); }
};

// Deterministic greedy for max f(S) s.t. |S n B_i| <= d_i.
//
// Each step evaluates f(S u {w}) for every feasible w not in S and accepts
// the largest marginal, ties going to the smallest id. Zero marginals are
// accepted; a strictly negative best marginal ends the run. At most
// 1 + d * n oracle calls are made.
GreedyTrace Greedy(const ValueOracle& f, const PartitionMatroid& m);

// (S_t, f(S_t)) after the first t accepted steps. Throws InputError unless
// 0 <= t <= trace.steps().
std::pair<ElementSet, double> RunBudgetedPrefix(const GreedyTrace& trace,
                                                int t);

}  // namespace pmgreedy

#endif  // PMGREEDY_GREEDY_H_
