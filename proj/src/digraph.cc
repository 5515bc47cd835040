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

#include "pmgreedy/digraph.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "pmgreedy/errors.h"

namespace pmgreedy {

WeightedDigraph::WeightedDigraph(int n, std::vector<Arc> arcs, bool undirected)
    : n_(n), arcs_(std::move(arcs)), undirected_(undirected) {
  if (n < 1) throw InputError("graph needs at least one vertex");
  for (const Arc& a : arcs_) {
    const std::string where =
        "arc " + std::to_string(a.source) + "->" + std::to_string(a.target);
    if (a.source < 0 || a.source >= n || a.target < 0 || a.target >= n) {
      throw InputError(where + " has an endpoint outside [0, " +
                       std::to_string(n) + ")");
    }
    if (a.source == a.target) throw InputError(where + " is a self-loop");
    if (!(a.weight >= 0.0) || !std::isfinite(a.weight)) {
      throw InputError(where + " has invalid weight " +
                       std::to_string(a.weight));
    }
  }
}

WeightedDigraph WeightedDigraph::Undirected(int n,
                                            const std::vector<Arc>& edges) {
  std::vector<Arc> arcs;
  arcs.reserve(2 * edges.size());
  for (const Arc& e : edges) {
    arcs.push_back(e);
    arcs.push_back({e.target, e.source, e.weight});
  }
  return WeightedDigraph(n, std::move(arcs), true);
}

CutFunction::CutFunction(WeightedDigraph g) : g_(std::move(g)) {}

double CutFunction::Value(const ElementSet& s) const {
  std::vector<char> in(g_.num_vertices(), 0);
  for (Element e : s) in[e] = 1;
  double total = 0.0;
  for (const Arc& a : g_.arcs()) {
    if (in[a.source] && !in[a.target]) total += a.weight;
  }
  return total;
}

CurvatureReport DegreeCurvatureBound(const WeightedDigraph& g) {
  std::vector<int> out(g.num_vertices(), 0);
  std::vector<int> in(g.num_vertices(), 0);
  for (const Arc& a : g.arcs()) {
    ++out[a.source];
    ++in[a.target];
  }
  const int max_out = *std::max_element(out.begin(), out.end());
  const int max_in = *std::max_element(in.begin(), in.end());
  if (max_out == 0) {
    throw DegenerateError("graph has no outgoing arcs; degree bound undefined");
  }
  return {1.0 + static_cast<double>(max_in) / max_out,
          CurvatureMethod::kDegreeBound,
          {}};
}

WeightedDigraph BadExampleGraph(int n) {
  if (n < 3) {
    throw InputError("bad-example graph needs n >= 3, got " +
                     std::to_string(n));
  }
  std::vector<Arc> arcs{{0, 1, 1.0}};
  for (int i = 1; i < n; ++i) arcs.push_back({i, 0, 1.0});
  return WeightedDigraph(n, std::move(arcs));
}

}  // namespace pmgreedy
