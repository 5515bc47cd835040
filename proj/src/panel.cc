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

#include "pmgreedy/panel.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "pmgreedy/errors.h"

namespace pmgreedy {

void TimeSeriesPanel::Validate() const {
  if (stations.empty()) throw InputError("panel has no stations");
  const std::size_t len = stations.front().temperatures.size();
  if (len < 2) throw InputError("series must have at least 2 values");
  for (const Station& s : stations) {
    if (s.temperatures.size() != len) {
      throw InputError("station " + s.id + " has " +
                       std::to_string(s.temperatures.size()) +
                       " values, expected " + std::to_string(len));
    }
    for (double t : s.temperatures) {
      if (!std::isfinite(t)) {
        throw InputError("station " + s.id + " has a non-finite value");
      }
    }
  }
}

PsdMatrix CovarianceFromPanel(const TimeSeriesPanel& panel) {
  panel.Validate();
  const int n = panel.size();
  const int len = static_cast<int>(panel.stations.front().temperatures.size());
  const int m = len - 1;
  if (m < 2) {
    throw InputError("covariance needs series of length >= 3, got " +
                     std::to_string(len));
  }
  Eigen::MatrixXd centered(n, m);
  for (int i = 0; i < n; ++i) {
    const auto& x = panel.stations[i].temperatures;
    double mean = 0.0;
    for (int t = 0; t < m; ++t) mean += x[t + 1] - x[t];
    mean /= m;
    for (int t = 0; t < m; ++t) centered(i, t) = (x[t + 1] - x[t]) - mean;
  }
  Eigen::MatrixXd cov(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double c = centered.row(i).dot(centered.row(j)) / (m - 1);
      cov(i, j) = c;
      cov(j, i) = c;
    }
  }
  return PsdMatrix(std::move(cov));
}

PartitionMatroid CountryPartition(const TimeSeriesPanel& panel,
                                  double fraction) {
  if (panel.stations.empty()) throw InputError("panel has no stations");
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw InputError("country fraction must lie in (0, 1], got " +
                     std::to_string(fraction));
  }
  std::map<std::string, int> index;
  std::vector<std::vector<Element>> blocks;
  for (int i = 0; i < panel.size(); ++i) {
    const auto [it, inserted] =
        index.try_emplace(panel.stations[i].country, blocks.size());
    if (inserted) blocks.emplace_back();
    blocks[it->second].push_back(i);
  }
  std::vector<int> caps;
  for (const auto& b : blocks) {
    // Guard against products like 0.29 * 100 landing just under an integer.
    const int d = static_cast<int>(std::floor(fraction * b.size() + 1e-9));
    caps.push_back(std::max(1, d));
  }
  return PartitionMatroid(panel.size(), std::move(blocks), std::move(caps));
}

}  // namespace pmgreedy
