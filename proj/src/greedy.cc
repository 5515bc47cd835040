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

#include "pmgreedy/greedy.h"

#include <string>

#include "pmgreedy/errors.h"

namespace pmgreedy {

GreedyTrace Greedy(const ValueOracle& f, const PartitionMatroid& m) {
  if (f.ground_size() != m.ground_size()) {
    throw InputError("oracle has " + std::to_string(f.ground_size()) +
                     " elements but the matroid has " +
                     std::to_string(m.ground_size()));
  }
  const int n = f.ground_size();
  const std::int64_t calls_before = f.call_count();

  GreedyTrace trace;
  std::vector<int> used(m.num_blocks(), 0);
  std::vector<char> taken(n, 0);
  int open_blocks = m.num_blocks();
  double current = f.Evaluate(trace.final_set);
  trace.values.push_back(current);

  while (open_blocks > 0) {
    Element best = -1;
    double best_value = 0.0;
    double best_gain = 0.0;
    for (Element e = 0; e < n; ++e) {
      if (taken[e]) continue;
      const int b = m.block_of(e);
      if (used[b] >= m.capacity(b)) continue;
      const double value = f.Evaluate(trace.final_set.With(e));
      const double gain = value - current;
      if (best < 0 || gain > best_gain) {
        best = e;
        best_value = value;
        best_gain = gain;
      }
    }
    if (best < 0) break;
    if (best_gain < 0) {
      trace.stopped_early = true;
      break;
    }
    taken[best] = 1;
    const int b = m.block_of(best);
    if (++used[b] == m.capacity(b)) --open_blocks;
    trace.final_set.Insert(best);
    trace.selections.push_back(best);
    trace.marginals.push_back(best_gain);
    trace.values.push_back(best_value);
    if (best_gain == 0.0) ++trace.zero_marginal_steps;
    current = best_value;
  }
  trace.oracle_calls = f.call_count() - calls_before;
  return trace;
}

std::pair<ElementSet, double> RunBudgetedPrefix(const GreedyTrace& trace,
                                                int t) {
  if (t < 0 || t > trace.steps()) {
    throw InputError("prefix length " + std::to_string(t) + " outside [0, " +
                     std::to_string(trace.steps()) + "]");
  }
  std::vector<Element> prefix(trace.selections.begin(),
                              trace.selections.begin() + t);
  return {ElementSet(std::move(prefix)), trace.values[t]};
}

}  // namespace pmgreedy
