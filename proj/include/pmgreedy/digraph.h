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

#ifndef PMGREEDY_DIGRAPH_H_
#define PMGREEDY_DIGRAPH_H_

#include <string>
#include <vector>

#include "pmgreedy/curvature.h"
#include "pmgreedy/value_oracle.h"

namespace pmgreedy {

struct Arc {
  int source = 0;
  int target = 0;
  double weight = 1.0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Directed graph with non-negative arc weights and no self-loops. An
// undirected graph stores every edge as two opposite arcs.
class WeightedDigraph {
 public:
  // Throws InputError on a self-loop, negative or non-finite weight, or an
  // endpoint outside [0, n).
  WeightedDigraph(int n, std::vector<Arc> arcs, bool undirected = false);

  // Mirrors each edge {u, v} into the arcs u->v and v->u.
  static WeightedDigraph Undirected(int n, const std::vector<Arc>& edges);

  int num_vertices() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool undirected() const { return undirected_; }

  friend bool operator==(const WeightedDigraph&,
                         const WeightedDigraph&) = default;

 private:
  int n_;
  std::vector<Arc> arcs_;
  bool undirected_;
};

// f(U) = total weight of arcs u->v with u in U and v outside U.
class CutFunction : public SetFunction {
 public:
  explicit CutFunction(WeightedDigraph g);

  int ground_size() const override { return g_.num_vertices(); }
  double Value(const ElementSet& s) const override;
  std::string name() const override { return "cut"; }
  const WeightedDigraph& graph() const { return g_; }

 private:
  WeightedDigraph g_;
};

// 1 + max in-degree / max out-degree, degrees counted in arcs (weights are
// ignored). Throws DegenerateError when no vertex has an outgoing arc.
CurvatureReport DegreeCurvatureBound(const WeightedDigraph& g);

// One vertex A = 0 with the single arc 0->1, and arcs i->0 for i = 1..n-1,
// all of weight 1. Greedy with a uniform budget d may pick A and end with
// 1/d of the optimum. Throws InputError for n < 3.
WeightedDigraph BadExampleGraph(int n);

}  // namespace pmgreedy

#endif  // PMGREEDY_DIGRAPH_H_
