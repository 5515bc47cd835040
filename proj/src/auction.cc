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

#include "pmgreedy/auction.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pmgreedy/errors.h"

namespace pmgreedy {

BudgetAdditiveFunction::BudgetAdditiveFunction(std::vector<double> values,
                                               double cap)
    : values_(std::move(values)), cap_(cap) {
  if (values_.empty()) throw InputError("utility needs at least one item");
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (!(values_[j] >= 0.0) || std::isinf(values_[j])) {
      throw InputError("item value " + std::to_string(j) +
                       " must be finite and >= 0, got " +
                       std::to_string(values_[j]));
    }
  }
  if (!(cap_ >= 0.0)) {
    throw InputError("cap must be >= 0, got " + std::to_string(cap_));
  }
}

double BudgetAdditiveFunction::Value(const ElementSet& s) const {
  double total = 0.0;
  for (Element e : s) total += values_[e];
  return std::min(cap_, total);
}

bool BudgetAdditiveFunction::additive() const { return std::isinf(cap_); }

std::shared_ptr<const BudgetAdditiveFunction> BudgetAdditiveUtility(
    std::vector<double> values, double cap) {
  return std::make_shared<BudgetAdditiveFunction>(std::move(values), cap);
}

std::shared_ptr<const BudgetAdditiveFunction> AdditiveUtility(
    std::vector<double> values) {
  return std::make_shared<BudgetAdditiveFunction>(
      std::move(values), std::numeric_limits<double>::infinity());
}

AuctionInstance::AuctionInstance(
    int players, int items,
    std::vector<std::shared_ptr<const SetFunction>> utilities)
    : players_(players), items_(items), utilities_(std::move(utilities)) {
  if (players < 1 || items < 1) {
    throw InputError("auction needs at least one player and one item");
  }
  if (static_cast<int>(utilities_.size()) != players) {
    throw InputError("expected " + std::to_string(players) +
                     " utilities, got " + std::to_string(utilities_.size()));
  }
  for (int p = 0; p < players; ++p) {
    if (!utilities_[p] || utilities_[p]->ground_size() != items) {
      throw InputError("utility of player " + std::to_string(p) +
                       " is not defined over " + std::to_string(items) +
                       " items");
    }
  }
}

std::pair<int, int> AuctionInstance::Decode(Element e) const {
  if (e < 0 || e >= ground_size()) {
    throw InputError("element " + std::to_string(e) + " outside [0, " +
                     std::to_string(ground_size()) + ")");
  }
  return {e / items_, e % items_};
}

PartitionMatroid AuctionInstance::ItemPartition() const {
  std::vector<std::vector<Element>> blocks(items_);
  for (int item = 0; item < items_; ++item) {
    for (int p = 0; p < players_; ++p) {
      blocks[item].push_back(ElementId(p, item));
    }
  }
  return PartitionMatroid(ground_size(), std::move(blocks),
                          std::vector<int>(items_, 1));
}

SocialWelfareFunction::SocialWelfareFunction(AuctionInstance a)
    : auction_(std::move(a)) {}

double SocialWelfareFunction::Value(const ElementSet& s) const {
  std::vector<std::vector<Element>> bundles(auction_.players());
  for (Element e : s) {
    const auto [player, item] = auction_.Decode(e);
    bundles[player].push_back(item);
  }
  double total = 0.0;
  for (int p = 0; p < auction_.players(); ++p) {
    total += auction_.utility(p).Value(ElementSet(std::move(bundles[p])));
  }
  return total;
}

}  // namespace pmgreedy
