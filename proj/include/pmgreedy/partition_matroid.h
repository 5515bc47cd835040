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

#ifndef PMGREEDY_PARTITION_MATROID_H_
#define PMGREEDY_PARTITION_MATROID_H_

#include <vector>

#include "pmgreedy/element_set.h"

namespace pmgreedy {

// Feasible sets are {S : |S n B_i| <= d_i for every block i}.
//
// Elements not listed in any declared block are gathered into one extra
// block whose capacity equals its size, i.e. they are unconstrained. After
// construction every element of the ground set belongs to exactly one block.
class PartitionMatroid {
 public:
  // Throws InputError when blocks overlap, ids fall outside [0, n), a block
  // is empty, or a capacity is outside [1, |B_i|].
  PartitionMatroid(int n, std::vector<std::vector<Element>> blocks,
                   std::vector<int> capacities);

  // Single block B = V with capacity d.
  static PartitionMatroid Uniform(int n, int d);

  int ground_size() const { return n_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  // Number of blocks passed by the caller; the implicit block, if any, is
  // the last one.
  int num_declared_blocks() const { return declared_; }
  const std::vector<Element>& block(int i) const { return blocks_[i]; }
  int capacity(int i) const { return capacities_[i]; }
  const std::vector<int>& capacities() const { return capacities_; }
  int block_of(Element e) const { return block_of_[e]; }

  // d = sum_i d_i.
  int total_capacity() const { return total_; }
  // d_bar = min_i d_i.
  int min_capacity() const { return min_; }

  // Throws InputError for ids outside [0, n).
  bool IsFeasible(const ElementSet& s) const;

 private:
  int n_;
  int declared_;
  std::vector<std::vector<Element>> blocks_;
  std::vector<int> capacities_;
  std::vector<int> block_of_;
  int total_ = 0;
  int min_ = 0;
};

inline bool IsFeasible(const ElementSet& s, const PartitionMatroid& m) {
  return m.IsFeasible(s);
}

}  // namespace pmgreedy

#endif  // PMGREEDY_PARTITION_MATROID_H_
