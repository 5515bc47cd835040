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

#ifndef PMGREEDY_LOGDET_H_
#define PMGREEDY_LOGDET_H_

#include <string>

#include <Eigen/Dense>

#include "pmgreedy/curvature.h"
#include "pmgreedy/element_set.h"
#include "pmgreedy/value_oracle.h"

namespace pmgreedy {

// Symmetric real matrix. Symmetry is checked on construction (absolute
// tolerance 1e-12); definiteness is only checked where a claim depends on it.
class PsdMatrix {
 public:
  explicit PsdMatrix(Eigen::MatrixXd entries);

  static PsdMatrix Identity(int n);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXd& entries() const { return entries_; }
  double operator()(int i, int j) const { return entries_(i, j); }

  Eigen::MatrixXd Principal(const ElementSet& s) const;

 private:
  Eigen::MatrixXd entries_;
};

// [[delta, sqrt(delta-1)], [sqrt(delta-1), 1]] for delta > 1: log det is
// neither monotone nor approximately monotone.
PsdMatrix DeltaMatrix(double delta);

// I + sigma * Sigma. Throws InputError for sigma < 0.
PsdMatrix RegularizeCovariance(const PsdMatrix& sigma_matrix,
                               double sigma_scale);

// ln det of a symmetric positive definite matrix from its Cholesky pivots.
// Throws NotPositiveDefiniteError (mentioning `label`) on a pivot <= 0.
double LogDetCholesky(const Eigen::MatrixXd& a, const std::string& label);

// f(S) = ln det(P_S), with det of the empty matrix equal to 1.
class LogDetFunction : public SetFunction {
 public:
  explicit LogDetFunction(PsdMatrix p);

  int ground_size() const override { return p_.dim(); }
  double Value(const ElementSet& s) const override;
  std::string name() const override { return "logdet"; }
  const PsdMatrix& matrix() const { return p_; }

 private:
  PsdMatrix p_;
};

// (1 + ln 2 pi) / 2: entropy contributed by one unit-variance coordinate.
inline constexpr double kGaussianEntropyUnit =
    0.5 * (1.0 + 1.8378770664093454835606594728112);

// Gaussian entropy f(S) = kGaussianEntropyUnit |S| + ln det(Sigma_S) / 2.
class EntropyFunction : public SetFunction {
 public:
  explicit EntropyFunction(PsdMatrix sigma);

  int ground_size() const override { return logdet_.ground_size(); }
  double Value(const ElementSet& s) const override;
  std::string name() const override { return "entropy"; }
  const PsdMatrix& matrix() const { return logdet_.matrix(); }

 private:
  LogDetFunction logdet_;
};

// Largest eigenvalue by power iteration, stopped once the residual
// ||P v - lambda v|| drops below rel_tol * lambda.
double DominantEigenvalue(const PsdMatrix& p, double rel_tol = 1e-10);

// True iff every eigenvalue of P exceeds `bound` (Cholesky of P - bound I).
bool EigenvaluesAbove(const PsdMatrix& p, double bound);

// 1 - 1/lambda_max for log det of P with all eigenvalues >= 1. Throws
// InputError when an eigenvalue below 1 - 1e-9 is detected.
CurvatureReport EigenvalueCurvatureBound(const PsdMatrix& p);

// Entropy = modular term (curvature 0) + half log det, combined with the
// sum rule.
CurvatureReport EntropyCurvatureBound(const PsdMatrix& sigma);

}  // namespace pmgreedy

#endif  // PMGREEDY_LOGDET_H_
