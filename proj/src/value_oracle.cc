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

#include "pmgreedy/value_oracle.h"

#include <utility>

#include "pmgreedy/errors.h"

namespace pmgreedy {

LambdaFunction::LambdaFunction(int n,
                               std::function<double(const ElementSet&)> fn,
                               std::string name)
    : n_(n), fn_(std::move(fn)), name_(std::move(name)) {
  if (n < 1) throw InputError("ground set must have at least one element");
}

ModularFunction::ModularFunction(std::vector<double> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) {
    throw InputError("ground set must have at least one element");
  }
}

double ModularFunction::Value(const ElementSet& s) const {
  double total = 0.0;
  for (Element e : s) total += weights_[e];
  return total;
}

SumFunction::SumFunction(std::shared_ptr<const SetFunction> f,
                         std::shared_ptr<const SetFunction> g)
    : f_(std::move(f)), g_(std::move(g)) {
  if (f_->ground_size() != g_->ground_size()) {
    throw InputError("summands have different ground sets");
  }
}

std::string SumFunction::name() const {
  return "(" + f_->name() + " + " + g_->name() + ")";
}

ScaledFunction::ScaledFunction(std::shared_ptr<const SetFunction> f,
                               double scale)
    : f_(std::move(f)), scale_(scale) {}

std::string ScaledFunction::name() const {
  return std::to_string(scale_) + " * " + f_->name();
}

ValueOracle::ValueOracle(std::shared_ptr<const SetFunction> f)
    : f_(std::move(f)) {
  if (!f_) throw InputError("null set function");
  if (f_->ground_size() < 1) {
    throw InputError("ground set must have at least one element");
  }
}

double ValueOracle::Evaluate(const ElementSet& s) const {
  if (!s.empty() && (s.ids().front() < 0 || s.max_element() >= ground_size())) {
    throw InputError("element id out of range in " + s.ToString() +
                     " (n = " + std::to_string(ground_size()) + ")");
  }
  calls_.fetch_add(1, std::memory_order_relaxed);
  return f_->Value(s);
}

double Marginal(const ValueOracle& f, const ElementSet& s,
                const ElementSet& omega) {
  if (omega.IsSubsetOf(s)) {
    f.Evaluate(s);
    return 0.0;
  }
  return f.Evaluate(s.Union(omega)) - f.Evaluate(s);
}

}  // namespace pmgreedy
