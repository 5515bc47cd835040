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

#include "pmgreedy/exact.h"

#include <cmath>
#include <string>
#include <vector>

#include "pmgreedy/errors.h"
#include "pmgreedy/subset_table.h"

namespace pmgreedy {
namespace {

using Mask = std::uint64_t;

// All subsets of `block` with at most `cap` elements, by size and then
// lexicographically (the block is sorted).
std::vector<std::vector<Element>> BoundedSubsets(
    const std::vector<Element>& block, int cap) {
  std::vector<std::vector<Element>> out{{}};
  const int size = static_cast<int>(block.size());
  for (int k = 1; k <= cap; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::vector<Element> subset(k);
      for (int i = 0; i < k; ++i) subset[i] = block[idx[i]];
      out.push_back(std::move(subset));
      int i = k - 1;
      while (i >= 0 && idx[i] == size - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace

double FeasibleSetCount(const PartitionMatroid& m) {
  double total = 1.0;
  for (int i = 0; i < m.num_blocks(); ++i) {
    const int size = static_cast<int>(m.block(i).size());
    double per_block = 0.0;
    double binom = 1.0;
    for (int j = 0; j <= m.capacity(i); ++j) {
      per_block += binom;
      binom = binom * (size - j) / (j + 1);
    }
    total *= per_block;
  }
  return total;
}

ExactResult BruteForceOpt(const ValueOracle& f, const PartitionMatroid& m) {
  if (f.ground_size() != m.ground_size()) {
    throw InputError("oracle has " + std::to_string(f.ground_size()) +
                     " elements but the matroid has " +
                     std::to_string(m.ground_size()));
  }
  const double estimate = FeasibleSetCount(m);
  if (estimate > kMaxEnumeration) {
    throw BudgetError("brute force would enumerate about " +
                          std::to_string(estimate) +
                          " feasible sets (budget " +
                          std::to_string(kMaxEnumeration) + ")",
                      estimate);
  }
  const std::int64_t calls_before = f.call_count();
  const int k = m.num_blocks();
  std::vector<std::vector<std::vector<Element>>> choices(k);
  for (int i = 0; i < k; ++i) {
    choices[i] = BoundedSubsets(m.block(i), m.capacity(i));
  }

  ExactResult result;
  bool have_best = false;
  std::vector<std::size_t> odometer(k, 0);
  while (true) {
    std::vector<Element> ids;
    for (int i = 0; i < k; ++i) {
      const auto& part = choices[i][odometer[i]];
      ids.insert(ids.end(), part.begin(), part.end());
    }
    ElementSet s(std::move(ids));
    const double value = f.Evaluate(s);
    ++result.feasible_count;
    if (!have_best || value > result.best_value ||
        (value == result.best_value && s < result.best_set)) {
      have_best = true;
      result.best_value = value;
      result.best_set = std::move(s);
    }
    int i = k - 1;
    while (i >= 0 && odometer[i] + 1 == choices[i].size()) {
      odometer[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++odometer[i];
  }
  result.oracle_calls = f.call_count() - calls_before;
  return result;
}

PropertyCheck<PairViolation> IsSubmodular(const ValueOracle& f) {
  const std::vector<double> t = EvaluateAllSubsets(f, 12);
  const Mask count = Mask{1} << f.ground_size();
  for (Mask u = 0; u < count; ++u) {
    for (Mask w = 0; w < count; ++w) {
      const double lhs = t[u] + t[w];
      const double rhs = t[u | w] + t[u & w];
      if (lhs < rhs - kPropertyTolerance) {
        return {false, PairViolation{ElementSet::FromMask(u),
                                     ElementSet::FromMask(w), lhs, rhs}};
      }
    }
  }
  return {};
}

PropertyCheck<MonotoneViolation> IsMonotone(const ValueOracle& f) {
  const int n = f.ground_size();
  const std::vector<double> t = EvaluateAllSubsets(f, 14);
  const Mask count = Mask{1} << n;
  for (Mask s = 0; s < count; ++s) {
    for (Element e = 0; e < n; ++e) {
      const Mask be = Mask{1} << e;
      if (s & be) continue;
      if (t[s | be] < t[s] - kPropertyTolerance) {
        return {false, MonotoneViolation{ElementSet::FromMask(s), e, t[s],
                                         t[s | be]}};
      }
    }
  }
  return {};
}

PropertyCheck<PairViolation> IsSubadditive(const ValueOracle& f) {
  const std::vector<double> t = EvaluateAllSubsets(f, 12);
  const Mask count = Mask{1} << f.ground_size();
  for (Mask u = 0; u < count; ++u) {
    for (Mask w = 0; w < count; ++w) {
      const double lhs = t[u] + t[w];
      const double rhs = t[u | w];
      if (lhs < rhs - kPropertyTolerance) {
        return {false, PairViolation{ElementSet::FromMask(u),
                                     ElementSet::FromMask(w), lhs, rhs}};
      }
    }
  }
  return {};
}

}  // namespace pmgreedy
