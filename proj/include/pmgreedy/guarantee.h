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

#ifndef PMGREEDY_GUARANTEE_H_
#define PMGREEDY_GUARANTEE_H_

#include <span>
#include <vector>

namespace pmgreedy {

// alpha = curvature, d = total capacity, d_bar = smallest block capacity.
struct GuaranteeParams {
  double alpha = 0.0;
  int d = 1;
  int d_bar = 1;
};

// (1/alpha) (1 - exp(-alpha d_bar / d)): the greedy approximation ratio for
// submodular f. Returns d_bar / d at alpha = 0 and 0 for alpha = +inf.
// Throws InputError for alpha < 0 or d_bar outside [1, d].
double GuaranteeSubmodular(const GuaranteeParams& p);

// (1/alpha) (1 - exp((alpha^2 - alpha) d_bar / d)): the greedy approximation
// ratio for monotone subadditive f. At alpha = 0 returns d_bar / d; at
// alpha = 1 the exponent vanishes and the guarantee degenerates to 0.
// Throws InputError for alpha outside [0, 1] or d_bar outside [1, d].
double GuaranteeSubadditive(const GuaranteeParams& p);

// x_t = (1/d) (1 - alpha/d)^(t-1) for t = 1..d_bar, the solution of the
// lower-triangular system
//   d x_t + alpha * sum_{j<t} x_j = 1,   t = 1..d_bar.
std::vector<double> LpClosedForm(double alpha, int d, int d_bar);

// max_t |d x_t + alpha * sum_{j<t} x_j - 1|.
double VerifyLpIdentity(std::span<const double> x, double alpha, int d);

}  // namespace pmgreedy

#endif  // PMGREEDY_GUARANTEE_H_
