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

#ifndef PMGREEDY_SUBSET_TABLE_H_
#define PMGREEDY_SUBSET_TABLE_H_

#include <cstdint>
#include <vector>

#include "pmgreedy/value_oracle.h"

namespace pmgreedy {

// f evaluated on every subset of {0..n-1}: table[mask] = f(FromMask(mask)).
// Costs exactly 2^n oracle calls. Throws InputError for n > max_n.
std::vector<double> EvaluateAllSubsets(const ValueOracle& f, int max_n);

}  // namespace pmgreedy

#endif  // PMGREEDY_SUBSET_TABLE_H_
