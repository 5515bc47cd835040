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

#ifndef PMGREEDY_PANEL_H_
#define PMGREEDY_PANEL_H_

#include <string>
#include <vector>

#include "pmgreedy/logdet.h"
#include "pmgreedy/partition_matroid.h"

namespace pmgreedy {

struct Station {
  std::string id;
  std::string country;
  std::vector<double> temperatures;  // monthly averages

  friend bool operator==(const Station&, const Station&) = default;
};

// Rectangular panel of monthly temperature series, one per station.
struct TimeSeriesPanel {
  std::vector<Station> stations;

  int size() const { return static_cast<int>(stations.size()); }
  // Throws InputError if the panel is empty, lengths differ or are < 2, or a
  // value is not finite.
  void Validate() const;

  friend bool operator==(const TimeSeriesPanel&,
                         const TimeSeriesPanel&) = default;
};

// Sample covariance of the month-to-month variation series
// X'_t = X_t - X_{t-1}, normalized by 1 / (m - 1) for m variations.
// Needs series of length >= 3.
PsdMatrix CovarianceFromPanel(const TimeSeriesPanel& panel);

// One block per country (in order of first appearance) with capacity
// max(1, floor(fraction * |B_i|)). Element ids are station indices.
PartitionMatroid CountryPartition(const TimeSeriesPanel& panel,
                                  double fraction);

}  // namespace pmgreedy

#endif  // PMGREEDY_PANEL_H_
