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

#ifndef PMGREEDY_GENERATORS_H_
#define PMGREEDY_GENERATORS_H_

#include <cstdint>

#include "pmgreedy/auction.h"
#include "pmgreedy/digraph.h"
#include "pmgreedy/logdet.h"
#include "pmgreedy/panel.h"

namespace pmgreedy {

// Seeded instance generators. A given seed always yields the same instance.

// G(n, p) with unit weights: every ordered pair (every unordered pair when
// undirected) is an arc with probability p.
WeightedDigraph RandomDigraph(int n, double p, std::uint64_t seed,
                              bool undirected = false);

// I + sigma * X X^T / n with X an n x n standard normal matrix.
PsdMatrix RandomPsd(int n, double sigma, std::uint64_t seed);

// Budget-additive players with item values U[0, 1] and cap 0.6 * sum.
AuctionInstance RandomAuction(int players, int items, std::uint64_t seed);

// Stations spread round-robin over `countries`, each series a seasonal
// cycle plus regional and station noise.
TimeSeriesPanel RandomPanel(int stations, int countries, int months,
                            std::uint64_t seed);

}  // namespace pmgreedy

#endif  // PMGREEDY_GENERATORS_H_
