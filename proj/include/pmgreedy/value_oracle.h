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

#ifndef PMGREEDY_VALUE_ORACLE_H_
#define PMGREEDY_VALUE_ORACLE_H_

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "pmgreedy/element_set.h"

namespace pmgreedy {

// A set function f: 2^V -> R over the ground set V = {0, ..., n-1}.
// Implementations are immutable after construction, so Value() may be called
// concurrently.
class SetFunction {
 public:
  virtual ~SetFunction() = default;

  virtual int ground_size() const = 0;
  // `s` has already been range-checked against ground_size().
  virtual double Value(const ElementSet& s) const = 0;
  virtual std::string name() const = 0;
};

// Wraps a std::function; handy for tests and ad hoc functions.
class LambdaFunction : public SetFunction {
 public:
  LambdaFunction(int n, std::function<double(const ElementSet&)> fn,
                 std::string name = "lambda");

  int ground_size() const override { return n_; }
  double Value(const ElementSet& s) const override { return fn_(s); }
  std::string name() const override { return name_; }

 private:
  int n_;
  std::function<double(const ElementSet&)> fn_;
  std::string name_;
};

// f(S) = sum of weights over S.
class ModularFunction : public SetFunction {
 public:
  explicit ModularFunction(std::vector<double> weights);

  int ground_size() const override {
    return static_cast<int>(weights_.size());
  }
  double Value(const ElementSet& s) const override;
  std::string name() const override { return "modular"; }

 private:
  std::vector<double> weights_;
};

// Pointwise sum f + g of two functions over the same ground set.
class SumFunction : public SetFunction {
 public:
  SumFunction(std::shared_ptr<const SetFunction> f,
              std::shared_ptr<const SetFunction> g);

  int ground_size() const override { return f_->ground_size(); }
  double Value(const ElementSet& s) const override {
    return f_->Value(s) + g_->Value(s);
  }
  std::string name() const override;

 private:
  std::shared_ptr<const SetFunction> f_;
  std::shared_ptr<const SetFunction> g_;
};

// c * f for a scalar c.
class ScaledFunction : public SetFunction {
 public:
  ScaledFunction(std::shared_ptr<const SetFunction> f, double scale);

  int ground_size() const override { return f_->ground_size(); }
  double Value(const ElementSet& s) const override {
    return scale_ * f_->Value(s);
  }
  std::string name() const override;

 private:
  std::shared_ptr<const SetFunction> f_;
  double scale_;
};

// Counted value oracle. Every Evaluate() increments the call counter by
// exactly one; the counter is atomic so concurrent evaluation stays exact.
class ValueOracle {
 public:
  explicit ValueOracle(std::shared_ptr<const SetFunction> f);

  ValueOracle(const ValueOracle&) = delete;
  ValueOracle& operator=(const ValueOracle&) = delete;

  int ground_size() const { return f_->ground_size(); }
  const SetFunction& function() const { return *f_; }
  std::shared_ptr<const SetFunction> shared_function() const { return f_; }

  // Throws InputError for ids outside [0, n).
  double Evaluate(const ElementSet& s) const;

  std::int64_t call_count() const {
    return calls_.load(std::memory_order_relaxed);
  }
  void ResetCount() { calls_.store(0, std::memory_order_relaxed); }

 private:
  std::shared_ptr<const SetFunction> f_;
  mutable std::atomic<std::int64_t> calls_{0};
};

// rho_Omega(S) = f(S u Omega) - f(S). Costs two oracle calls, or a single
// call on f(S) when Omega is already contained in S (the result is then 0).
double Marginal(const ValueOracle& f, const ElementSet& s,
                const ElementSet& omega);

}  // namespace pmgreedy

#endif  // PMGREEDY_VALUE_ORACLE_H_
