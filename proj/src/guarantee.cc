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

#include "pmgreedy/guarantee.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "pmgreedy/errors.h"

namespace pmgreedy {
namespace {

void CheckCapacities(const GuaranteeParams& p) {
  if (p.d < 1 || p.d_bar < 1 || p.d_bar > p.d) {
    throw InputError("need 1 <= d_bar <= d, got d = " + std::to_string(p.d) +
                     ", d_bar = " + std::to_string(p.d_bar));
  }
}

}  // namespace

double GuaranteeSubmodular(const GuaranteeParams& p) {
  CheckCapacities(p);
  if (!(p.alpha >= 0.0)) {
    throw InputError("curvature must be >= 0, got " + std::to_string(p.alpha));
  }
  const double ratio = static_cast<double>(p.d_bar) / p.d;
  if (p.alpha == 0.0) return ratio;
  if (std::isinf(p.alpha)) return 0.0;
  return -std::expm1(-p.alpha * ratio) / p.alpha;
}

double GuaranteeSubadditive(const GuaranteeParams& p) {
  CheckCapacities(p);
  if (!(p.alpha >= 0.0 && p.alpha <= 1.0)) {
    throw InputError("subadditive guarantee needs curvature in [0, 1], got " +
                     std::to_string(p.alpha));
  }
  const double ratio = static_cast<double>(p.d_bar) / p.d;
  if (p.alpha == 0.0) return ratio;
  return -std::expm1((p.alpha * p.alpha - p.alpha) * ratio) / p.alpha;
}

std::vector<double> LpClosedForm(double alpha, int d, int d_bar) {
  CheckCapacities({alpha, d, d_bar});
  if (!(alpha >= 0.0)) {
    throw InputError("curvature must be >= 0, got " + std::to_string(alpha));
  }
  std::vector<double> x(d_bar);
  const double decay = 1.0 - alpha / d;
  double term = 1.0 / d;
  for (int t = 0; t < d_bar; ++t) {
    x[t] = term;
    term *= decay;
  }
  return x;
}

double VerifyLpIdentity(std::span<const double> x, double alpha, int d) {
  double prefix = 0.0;
  double worst = 0.0;
  for (double xt : x) {
    worst = std::max(worst, std::abs(d * xt + alpha * prefix - 1.0));
    prefix += xt;
  }
  return worst;
}

}  // namespace pmgreedy
