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

#ifndef PMGREEDY_AUCTION_H_
#define PMGREEDY_AUCTION_H_

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pmgreedy/partition_matroid.h"
#include "pmgreedy/value_oracle.h"

namespace pmgreedy {

// u(T) = min(cap, sum_{j in T} values[j]). cap = +inf gives an additive
// utility. Monotone and subadditive for non-negative values.
class BudgetAdditiveFunction : public SetFunction {
 public:
  // Throws InputError on a negative or NaN value or cap.
  BudgetAdditiveFunction(std::vector<double> values, double cap);

  int ground_size() const override {
    return static_cast<int>(values_.size());
  }
  double Value(const ElementSet& s) const override;
  std::string name() const override {
    return additive() ? "additive" : "budget_additive";
  }

  const std::vector<double>& values() const { return values_; }
  double cap() const { return cap_; }
  bool additive() const;

 private:
  std::vector<double> values_;
  double cap_;
};

std::shared_ptr<const BudgetAdditiveFunction> BudgetAdditiveUtility(
    std::vector<double> values, double cap);
std::shared_ptr<const BudgetAdditiveFunction> AdditiveUtility(
    std::vector<double> values);

// Players bid on items through utilities u_p over item subsets. The ground
// set is players x items with element id = player * items + item, and each
// item forms a block {(p, item) : p} of capacity 1.
class AuctionInstance {
 public:
  // Each utility must be defined over exactly `items` elements.
  AuctionInstance(int players, int items,
                  std::vector<std::shared_ptr<const SetFunction>> utilities);

  int players() const { return players_; }
  int items() const { return items_; }
  int ground_size() const { return players_ * items_; }
  const SetFunction& utility(int p) const { return *utilities_[p]; }
  const std::vector<std::shared_ptr<const SetFunction>>& utilities() const {
    return utilities_;
  }

  Element ElementId(int player, int item) const {
    return player * items_ + item;
  }
  // (player, item) for an element id; throws InputError when out of range.
  std::pair<int, int> Decode(Element e) const;

  PartitionMatroid ItemPartition() const;

 private:
  int players_;
  int items_;
  std::vector<std::shared_ptr<const SetFunction>> utilities_;
};

// f(S) = sum_p u_p(items assigned to p in S).
class SocialWelfareFunction : public SetFunction {
 public:
  explicit SocialWelfareFunction(AuctionInstance a);

  int ground_size() const override { return auction_.ground_size(); }
  double Value(const ElementSet& s) const override;
  std::string name() const override { return "social_welfare"; }
  const AuctionInstance& auction() const { return auction_; }

 private:
  AuctionInstance auction_;
};

}  // namespace pmgreedy

#endif  // PMGREEDY_AUCTION_H_
