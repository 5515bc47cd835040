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

#include "pmgreedy/logdet.h"

#include <cmath>
#include <utility>

#include "pmgreedy/errors.h"

namespace pmgreedy {

PsdMatrix::PsdMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
  if (entries_.rows() < 1 || entries_.rows() != entries_.cols()) {
    throw InputError("matrix must be square and non-empty, got " +
                     std::to_string(entries_.rows()) + "x" +
                     std::to_string(entries_.cols()));
  }
  const int n = dim();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (!(std::abs(entries_(i, j) - entries_(j, i)) <= 1e-12)) {
        throw InputError("matrix is not symmetric at (" + std::to_string(i) +
                         ", " + std::to_string(j) + ")");
      }
    }
  }
}

PsdMatrix PsdMatrix::Identity(int n) {
  return PsdMatrix(Eigen::MatrixXd::Identity(n, n));
}

Eigen::MatrixXd PsdMatrix::Principal(const ElementSet& s) const {
  const auto ids = s.ids();
  const int k = s.size();
  Eigen::MatrixXd out(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) out(i, j) = entries_(ids[i], ids[j]);
  }
  return out;
}

PsdMatrix DeltaMatrix(double delta) {
  if (!(delta > 1.0)) {
    throw InputError("delta must exceed 1, got " + std::to_string(delta));
  }
  const double off = std::sqrt(delta - 1.0);
  Eigen::MatrixXd a(2, 2);
  a << delta, off, off, 1.0;
  return PsdMatrix(std::move(a));
}

PsdMatrix RegularizeCovariance(const PsdMatrix& sigma_matrix,
                               double sigma_scale) {
  if (!(sigma_scale >= 0.0)) {
    throw InputError("regularization scale must be >= 0, got " +
                     std::to_string(sigma_scale));
  }
  const int n = sigma_matrix.dim();
  return PsdMatrix(Eigen::MatrixXd::Identity(n, n) +
                   sigma_scale * sigma_matrix.entries());
}

double LogDetCholesky(const Eigen::MatrixXd& a, const std::string& label) {
  const int k = static_cast<int>(a.rows());
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(k, k);
  double log_det = 0.0;
  for (int j = 0; j < k; ++j) {
    double pivot = a(j, j);
    for (int p = 0; p < j; ++p) pivot -= l(j, p) * l(j, p);
    if (!(pivot > 0.0)) {
      throw NotPositiveDefiniteError("submatrix " + label +
                                     " is not positive definite (pivot " +
                                     std::to_string(j) + " = " +
                                     std::to_string(pivot) + ")");
    }
    const double root = std::sqrt(pivot);
    l(j, j) = root;
    log_det += std::log(pivot);
    for (int i = j + 1; i < k; ++i) {
      double v = a(i, j);
      for (int p = 0; p < j; ++p) v -= l(i, p) * l(j, p);
      l(i, j) = v / root;
    }
  }
  return log_det;
}

LogDetFunction::LogDetFunction(PsdMatrix p) : p_(std::move(p)) {}

double LogDetFunction::Value(const ElementSet& s) const {
  if (s.empty()) return 0.0;
  return LogDetCholesky(p_.Principal(s), s.ToString());
}

EntropyFunction::EntropyFunction(PsdMatrix sigma) : logdet_(std::move(sigma)) {}

double EntropyFunction::Value(const ElementSet& s) const {
  return kGaussianEntropyUnit * s.size() + 0.5 * logdet_.Value(s);
}

double DominantEigenvalue(const PsdMatrix& p, double rel_tol) {
  const int n = p.dim();
  const Eigen::MatrixXd& a = p.entries();
  // Fixed, non-symmetric start so the iterate is not orthogonal to the
  // dominant eigenvector for structured inputs.
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = 1.0 + 0.1 * std::sin(1.0 + i);
  v.normalize();
  double lambda = v.dot(a * v);
  constexpr int kMaxIterations = 1000000;
  for (int it = 0; it < kMaxIterations; ++it) {
    Eigen::VectorXd w = a * v;
    const double norm = w.norm();
    if (norm == 0.0) return 0.0;
    v = w / norm;
    Eigen::VectorXd av = a * v;
    lambda = v.dot(av);
    if ((av - lambda * v).norm() <= rel_tol * std::abs(lambda)) break;
  }
  return lambda;
}

bool EigenvaluesAbove(const PsdMatrix& p, double bound) {
  const int n = p.dim();
  Eigen::LLT<Eigen::MatrixXd> llt(p.entries() -
                                  bound * Eigen::MatrixXd::Identity(n, n));
  return llt.info() == Eigen::Success;
}

CurvatureReport EigenvalueCurvatureBound(const PsdMatrix& p) {
  if (!EigenvaluesAbove(p, 1.0 - 1e-9)) {
    throw InputError(
        "eigenvalue bound needs every eigenvalue >= 1; found one below "
        "1 - 1e-9");
  }
  const double lambda = DominantEigenvalue(p);
  return {1.0 - 1.0 / lambda, CurvatureMethod::kEigenvalueBound, {}};
}

CurvatureReport EntropyCurvatureBound(const PsdMatrix& sigma) {
  const double terms[] = {0.0, EigenvalueCurvatureBound(sigma).alpha};
  return {SumCurvatureBound(terms), CurvatureMethod::kSumRule, {}};
}

}  // namespace pmgreedy
