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

#include "pmgreedy/curvature.h"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "pmgreedy/errors.h"
#include "pmgreedy/subset_table.h"

namespace pmgreedy {
namespace {

using Mask = std::uint64_t;

// For a fixed element w, the minimum of rho_w(B) over all supersets B of a
// given set A with w outside B, plus the smallest-mask minimizer.
struct SupersetMin {
  std::vector<double> value;
  std::vector<Mask> arg;
};

SupersetMin MinOverSupersets(const std::vector<double>& table, int n,
                             Element w) {
  const Mask full = (Mask{1} << n) - 1;
  const Mask bw = Mask{1} << w;
  SupersetMin out{std::vector<double>(full + 1, 0.0),
                  std::vector<Mask>(full + 1, 0)};
  for (Mask b = 0; b <= full; ++b) {
    if (b & bw) continue;
    out.value[b] = table[b | bw] - table[b];
    out.arg[b] = b;
  }
  for (int j = 0; j < n; ++j) {
    if (j == w) continue;
    const Mask bj = Mask{1} << j;
    for (Mask a = 0; a <= full; ++a) {
      if (a & (bw | bj)) continue;
      const double v = out.value[a | bj];
      const Mask m = out.arg[a | bj];
      if (v < out.value[a] || (v == out.value[a] && m < out.arg[a])) {
        out.value[a] = v;
        out.arg[a] = m;
      }
    }
  }
  return out;
}

}  // namespace

std::string_view ToString(CurvatureMethod method) {
  switch (method) {
    case CurvatureMethod::kExact:
      return "exact";
    case CurvatureMethod::kSubmodularBound:
      return "submodular_bound";
    case CurvatureMethod::kDegreeBound:
      return "degree_bound";
    case CurvatureMethod::kEigenvalueBound:
      return "eigenvalue_bound";
    case CurvatureMethod::kSumRule:
      return "sum_rule";
  }
  return "unknown";
}

CurvatureMethod ParseCurvatureMethod(std::string_view name) {
  for (auto m : {CurvatureMethod::kExact, CurvatureMethod::kSubmodularBound,
                 CurvatureMethod::kDegreeBound,
                 CurvatureMethod::kEigenvalueBound,
                 CurvatureMethod::kSumRule}) {
    if (ToString(m) == name) return m;
  }
  throw InputError("unknown curvature method '" + std::string(name) + "'");
}

CurvatureReport ExactCurvature(const ValueOracle& f) {
  const int n = f.ground_size();
  const std::vector<double> table = EvaluateAllSubsets(f, kMaxExactCurvatureN);
  const Mask full = (Mask{1} << n) - 1;

  bool found = false;
  double best = 0.0;
  CurvatureWitness witness;
  for (Element w = 0; w < n; ++w) {
    const Mask bw = Mask{1} << w;
    const SupersetMin mins = MinOverSupersets(table, n, w);
    for (Mask a = 0; a <= full; ++a) {
      if (a & bw) continue;
      const double base = table[a | bw] - table[a];
      if (!(base > 0.0)) continue;
      const double alpha = 1.0 - mins.value[a] / base;
      if (!found || alpha > best) {
        found = true;
        best = alpha;
        witness = {ElementSet::FromMask(a | bw),
                   ElementSet::FromMask(mins.arg[a] & ~a), w};
      }
    }
  }
  if (!found) {
    throw DegenerateError(
        "no element has a positive marginal; curvature is undefined for " +
        f.function().name());
  }
  return {best, CurvatureMethod::kExact, witness};
}

double CurvatureSlack(const ValueOracle& f, double alpha) {
  const int n = f.ground_size();
  const std::vector<double> table = EvaluateAllSubsets(f, kMaxExactCurvatureN);
  const Mask full = (Mask{1} << n) - 1;
  double worst = std::numeric_limits<double>::infinity();
  for (Element w = 0; w < n; ++w) {
    const Mask bw = Mask{1} << w;
    const SupersetMin mins = MinOverSupersets(table, n, w);
    for (Mask a = 0; a <= full; ++a) {
      if (a & bw) continue;
      const double base = table[a | bw] - table[a];
      if (!(base > 0.0)) continue;
      worst = std::min(worst, mins.value[a] - (1.0 - alpha) * base);
    }
  }
  return worst;
}

CurvatureReport SubmodularCurvatureBound(const ValueOracle& f) {
  const int n = f.ground_size();
  const std::vector<double> table =
      EvaluateAllSubsets(f, kMaxSubmodularBoundN);
  const Mask full = (Mask{1} << n) - 1;

  bool found = false;
  double min_ratio = 0.0;
  CurvatureWitness witness;
  for (Mask s = 1; s <= full; ++s) {
    for (Element w = 0; w < n; ++w) {
      const Mask bw = Mask{1} << w;
      if (!(s & bw)) continue;
      const double single = table[bw] - table[0];
      if (!(single > 0.0)) continue;
      const double ratio = (table[s] - table[s & ~bw]) / single;
      if (!found || ratio < min_ratio) {
        found = true;
        min_ratio = ratio;
        witness = {ElementSet::FromMask(s), ElementSet(), w};
      }
    }
  }
  if (!found) {
    throw DegenerateError("every singleton of " + f.function().name() +
                          " has non-positive value");
  }
  return {1.0 - min_ratio, CurvatureMethod::kSubmodularBound, witness};
}

double SumCurvatureBound(std::span<const double> alphas) {
  if (alphas.empty()) throw InputError("sum rule needs at least one term");
  double best = 0.0;
  for (double a : alphas) {
    if (!(a >= 0.0)) {
      throw InputError("curvature terms must be >= 0, got " +
                       std::to_string(a));
    }
    best = std::max(best, a);
  }
  return best;
}

}  // namespace pmgreedy
