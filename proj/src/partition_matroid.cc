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

#include "pmgreedy/partition_matroid.h"

#include <algorithm>
#include <string>
#include <utility>

#include "pmgreedy/errors.h"

namespace pmgreedy {

PartitionMatroid::PartitionMatroid(int n,
                                   std::vector<std::vector<Element>> blocks,
                                   std::vector<int> capacities)
    : n_(n),
      declared_(static_cast<int>(blocks.size())),
      blocks_(std::move(blocks)),
      capacities_(std::move(capacities)),
      block_of_(n > 0 ? n : 0, -1) {
  if (n < 1) throw InputError("ground set must have at least one element");
  if (blocks_.size() != capacities_.size()) {
    throw InputError("got " + std::to_string(blocks_.size()) +
                     " blocks but " + std::to_string(capacities_.size()) +
                     " capacities");
  }
  for (int i = 0; i < declared_; ++i) {
    auto& b = blocks_[i];
    std::sort(b.begin(), b.end());
    if (b.empty()) throw InputError("block " + std::to_string(i) + " is empty");
    for (Element e : b) {
      if (e < 0 || e >= n) {
        throw InputError("block " + std::to_string(i) + " holds element " +
                         std::to_string(e) + " outside [0, " +
                         std::to_string(n) + ")");
      }
      if (block_of_[e] != -1) {
        throw InputError("element " + std::to_string(e) +
                         " appears in blocks " + std::to_string(block_of_[e]) +
                         " and " + std::to_string(i));
      }
      block_of_[e] = i;
    }
    const int d = capacities_[i];
    if (d < 1 || d > static_cast<int>(b.size())) {
      throw InputError("capacity of block " + std::to_string(i) + " is " +
                       std::to_string(d) + ", expected 1.." +
                       std::to_string(b.size()));
    }
  }
  std::vector<Element> rest;
  for (Element e = 0; e < n; ++e) {
    if (block_of_[e] == -1) rest.push_back(e);
  }
  if (!rest.empty()) {
    for (Element e : rest) block_of_[e] = num_blocks();
    capacities_.push_back(static_cast<int>(rest.size()));
    blocks_.push_back(std::move(rest));
  }
  min_ = capacities_.front();
  for (int d : capacities_) {
    total_ += d;
    min_ = std::min(min_, d);
  }
}

PartitionMatroid PartitionMatroid::Uniform(int n, int d) {
  std::vector<Element> all(n > 0 ? n : 0);
  for (int i = 0; i < n; ++i) all[i] = i;
  return PartitionMatroid(n, {std::move(all)}, {d});
}

bool PartitionMatroid::IsFeasible(const ElementSet& s) const {
  std::vector<int> used(blocks_.size(), 0);
  for (Element e : s) {
    if (e < 0 || e >= n_) {
      throw InputError("element " + std::to_string(e) + " outside [0, " +
                       std::to_string(n_) + ")");
    }
    ++used[block_of_[e]];
  }
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (used[i] > capacities_[i]) return false;
  }
  return true;
}

}  // namespace pmgreedy
