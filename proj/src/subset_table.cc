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

#include "pmgreedy/subset_table.h"

#include <string>

#include "pmgreedy/errors.h"

namespace pmgreedy {

std::vector<double> EvaluateAllSubsets(const ValueOracle& f, int max_n) {
  const int n = f.ground_size();
  if (n > max_n) {
    throw InputError("exhaustive evaluation supports n <= " +
                     std::to_string(max_n) + ", got n = " + std::to_string(n));
  }
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<double> table(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    table[mask] = f.Evaluate(ElementSet::FromMask(mask));
  }
  return table;
}

}  // namespace pmgreedy
