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

#include "pmgreedy/generators.h"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "pmgreedy/errors.h"

namespace pmgreedy {

WeightedDigraph RandomDigraph(int n, double p, std::uint64_t seed,
                              bool undirected) {
  if (n < 1) throw InputError("graph needs at least one vertex");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InputError("edge probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = undirected ? u + 1 : 0; v < n; ++v) {
      if (u == v) continue;
      if (coin(rng)) arcs.push_back({u, v, 1.0});
    }
  }
  if (undirected) return WeightedDigraph::Undirected(n, arcs);
  return WeightedDigraph(n, std::move(arcs));
}

PsdMatrix RandomPsd(int n, double sigma, std::uint64_t seed) {
  if (n < 1) throw InputError("matrix needs n >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd x(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) x(i, j) = normal(rng);
  }
  Eigen::MatrixXd gram = x * x.transpose() / n;
  gram = 0.5 * (gram + gram.transpose()).eval();
  return RegularizeCovariance(PsdMatrix(std::move(gram)), sigma);
}

AuctionInstance RandomAuction(int players, int items, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::shared_ptr<const SetFunction>> utilities;
  for (int p = 0; p < players; ++p) {
    std::vector<double> values(items);
    double sum = 0.0;
    for (double& v : values) {
      v = unit(rng);
      sum += v;
    }
    utilities.push_back(BudgetAdditiveUtility(std::move(values), 0.6 * sum));
  }
  return AuctionInstance(players, items, std::move(utilities));
}

TimeSeriesPanel RandomPanel(int stations, int countries, int months,
                            std::uint64_t seed) {
  if (stations < 1 || countries < 1 || months < 3) {
    throw InputError("random panel needs stations >= 1, countries >= 1, "
                     "months >= 3");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<std::vector<double>> regional(countries,
                                            std::vector<double>(months));
  for (auto& series : regional) {
    for (double& v : series) v = 1.5 * normal(rng);
  }
  TimeSeriesPanel panel;
  for (int s = 0; s < stations; ++s) {
    const int c = s % countries;
    Station st{"S" + std::to_string(s), "C" + std::to_string(c), {}};
    const double base = 10.0 + 2.0 * normal(rng);
    for (int t = 0; t < months; ++t) {
      const double season = 8.0 * std::sin(2.0 * std::numbers::pi * t / 12.0);
      st.temperatures.push_back(base + season + regional[c][t] +
                                normal(rng));
    }
    panel.stations.push_back(std::move(st));
  }
  return panel;
}

}  // namespace pmgreedy
