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

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "pmgreedy/auction.h"
#include "pmgreedy/curvature.h"
#include "pmgreedy/digraph.h"
#include "pmgreedy/errors.h"
#include "pmgreedy/exact.h"
#include "pmgreedy/generators.h"
#include "pmgreedy/greedy.h"
#include "pmgreedy/guarantee.h"
#include "pmgreedy/logdet.h"
#include "test_util.h"

namespace pmgreedy {
namespace {

using Fn = std::shared_ptr<const SetFunction>;

Fn SquaredSize(int n) {
  return std::make_shared<LambdaFunction>(
      n, [](const ElementSet& s) { return 1.0 * s.size() * s.size(); });
}

double Binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TEST(BruteForceOptTest, Examples) {
  ValueOracle zero(std::make_shared<LambdaFunction>(
      4, [](const ElementSet&) { return 0.0; }));
  const ExactResult z = BruteForceOpt(zero, PartitionMatroid::Uniform(4, 2));
  EXPECT_TRUE(z.best_set.empty());
  EXPECT_EQ(z.best_value, 0.0);
  EXPECT_EQ(z.feasible_count, 11);

  ValueOracle cut(std::make_shared<CutFunction>(BadExampleGraph(5)));
  const ExactResult c = BruteForceOpt(cut, PartitionMatroid::Uniform(5, 2));
  EXPECT_EQ(c.best_value, 2.0);
  EXPECT_EQ(c.best_set, ElementSet({1, 2}));
  EXPECT_EQ(c.feasible_count, 16);
  EXPECT_EQ(c.oracle_calls, 16);

  ValueOracle mod(std::make_shared<ModularFunction>(std::vector{5.0, 3.0, 1.0}));
  const ExactResult m = BruteForceOpt(mod, PartitionMatroid(3, {{0, 1}, {2}}, {1, 1}));
  EXPECT_EQ(m.best_value, 6.0);
  EXPECT_EQ(m.best_set, ElementSet({0, 2}));
}

TEST(BruteForceOptTest, BudgetExceeded) {
  ValueOracle f(std::make_shared<ModularFunction>(std::vector<double>(40, 1.0)));
  try {
    BruteForceOpt(f, PartitionMatroid::Uniform(40, 20));
    FAIL() << "expected BudgetError";
  } catch (const BudgetError& e) {
    EXPECT_GT(e.estimate(), kMaxEnumeration);
  }
  EXPECT_EQ(f.call_count(), 0);
}

TEST(BruteForceOptTest, MatchesMaskFilterOnRandomInstances) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 1 + trial % 10;
    Fn f = trial % 2 ? Fn(std::make_shared<CutFunction>(RandomDigraph(n, 0.4, trial)))
                     : testing::RandomCoverage(n, 7, rng);
    const PartitionMatroid m = testing::RandomMatroid(n, trial % 3 == 0, rng);
    ValueOracle oracle(f);
    const ExactResult r = BruteForceOpt(oracle, m);
    const auto naive = testing::NaiveOpt(*f, m);
    SCOPED_TRACE(trial);
    EXPECT_EQ(r.best_value, naive.value);
    EXPECT_EQ(f->Value(r.best_set), r.best_value);
    EXPECT_TRUE(m.IsFeasible(r.best_set));
    EXPECT_EQ(r.feasible_count, naive.feasible);
    EXPECT_EQ(r.oracle_calls, naive.feasible);
    EXPECT_EQ(oracle.call_count(), naive.feasible);

    double product = 1.0;
    for (int i = 0; i < m.num_blocks(); ++i) {
      double sum = 0.0;
      const int size = static_cast<int>(m.block(i).size());
      for (int k = 0; k <= m.capacity(i); ++k) sum += Binomial(size, k);
      product *= sum;
    }
    EXPECT_EQ(FeasibleSetCount(m), product);
  }
}

TEST(IsSubmodularTest, Examples) {
  const auto sq = IsSubmodular(ValueOracle(SquaredSize(3)));
  EXPECT_FALSE(sq.holds);
  ASSERT_TRUE(sq.witness.has_value());
  EXPECT_EQ(sq.witness->u, ElementSet({0}));
  EXPECT_EQ(sq.witness->w, ElementSet({1}));
  EXPECT_EQ(sq.witness->lhs, 2.0);
  EXPECT_EQ(sq.witness->rhs, 4.0);

  EXPECT_TRUE(IsSubmodular(ValueOracle(std::make_shared<CutFunction>(
                               BadExampleGraph(6))))
                  .holds);
  EXPECT_TRUE(IsSubmodular(ValueOracle(std::make_shared<ModularFunction>(
                               std::vector{1.0, -2.0, 3.0})))
                  .holds);
  EXPECT_THROW(IsSubmodular(ValueOracle(SquaredSize(13))), InputError);
}

TEST(IsMonotoneTest, Examples) {
  EXPECT_TRUE(IsMonotone(ValueOracle(std::make_shared<EntropyFunction>(
                             PsdMatrix::Identity(4))))
                  .holds);
  const auto delta = IsMonotone(
      ValueOracle(std::make_shared<LogDetFunction>(DeltaMatrix(2.0))));
  EXPECT_FALSE(delta.holds);
  ASSERT_TRUE(delta.witness.has_value());
  EXPECT_EQ(delta.witness->s, ElementSet({0}));
  EXPECT_EQ(delta.witness->element, 1);
  EXPECT_NEAR(delta.witness->before, std::log(2.0), 1e-12);
  EXPECT_NEAR(delta.witness->after, 0.0, 1e-12);
}

TEST(IsSubadditiveTest, Examples) {
  EXPECT_TRUE(IsSubadditive(ValueOracle(BudgetAdditiveUtility({1.0, 2.0, 0.5}, 2.2)))
                  .holds);
  EXPECT_FALSE(IsSubadditive(ValueOracle(SquaredSize(3))).holds);
  // Submodular and normalized implies subadditive.
  EXPECT_TRUE(IsSubadditive(ValueOracle(std::make_shared<CutFunction>(
                                RandomDigraph(7, 0.5, 1))))
                  .holds);
}

TEST(PropertyCheckTest, AgreesWithDirectEnumeration) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 6;
    std::vector<double> t(std::size_t{1} << n);
    for (std::size_t m = 1; m < t.size(); ++m) t[m] = u(rng) + 0.3 * std::popcount(m);
    const Fn f = std::make_shared<LambdaFunction>(
        n, [t](const ElementSet& s) { return t[s.ToMask()]; });
    bool sub = true, mono = true, subadd = true;
    for (std::size_t a = 0; a < t.size(); ++a) {
      for (std::size_t b = 0; b < t.size(); ++b) {
        sub = sub && t[a] + t[b] >= t[a | b] + t[a & b] - 1e-9;
        subadd = subadd && t[a] + t[b] >= t[a | b] - 1e-9;
        if ((a & b) == a) mono = mono && t[b] >= t[a] - 1e-9;
      }
    }
    EXPECT_EQ(IsSubmodular(ValueOracle(f)).holds, sub);
    EXPECT_EQ(IsMonotone(ValueOracle(f)).holds, mono);
    EXPECT_EQ(IsSubadditive(ValueOracle(f)).holds, subadd);
  }
}

// The two approximation guarantees as inequalities on small instances; the
// acceptance binary repeats this at the full instance counts.
TEST(GuaranteeInequalityTest, SubmodularInstances) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 6;
    Fn f = trial % 2 ? Fn(std::make_shared<CutFunction>(RandomDigraph(n, 0.4, trial)))
                     : Fn(std::make_shared<LogDetFunction>(RandomPsd(n, 1.0, trial)));
    const PartitionMatroid m = testing::RandomMatroid(n, trial % 4 < 2, rng);
    ValueOracle oracle(f);
    double alpha;
    try {
      alpha = ExactCurvature(oracle).alpha;
    } catch (const DegenerateError&) {
      continue;  // edgeless graph
    }
    const double g = GuaranteeSubmodular(
        {std::max(alpha, 0.0), m.total_capacity(), m.min_capacity()});
    const double greedy = Greedy(oracle, m).final_value();
    const double opt = testing::NaiveOpt(*f, m).value;
    EXPECT_GE(greedy, g * opt - 1e-9) << "trial " << trial;
  }
}

TEST(GuaranteeInequalityTest, SubadditiveAuctions) {
  for (int trial = 0; trial < 40; ++trial) {
    const int players = 1 + trial % 3;
    const int items = std::max(1, (10 / players) - trial % 2);
    const Fn f = std::make_shared<SocialWelfareFunction>(
        RandomAuction(players, items, trial));
    const PartitionMatroid m =
        std::static_pointer_cast<const SocialWelfareFunction>(f)
            ->auction()
            .ItemPartition();
    ValueOracle oracle(f);
    const double alpha = ExactCurvature(oracle).alpha;
    ASSERT_LE(alpha, 1.0 + 1e-12);
    const double g = GuaranteeSubadditive(
        {std::clamp(alpha, 0.0, 1.0), m.total_capacity(), m.min_capacity()});
    const double greedy = Greedy(oracle, m).final_value();
    const double opt = testing::NaiveOpt(*f, m).value;
    EXPECT_GE(greedy, g * opt - 1e-9) << "trial " << trial;
  }
}

}  // namespace
}  // namespace pmgreedy
