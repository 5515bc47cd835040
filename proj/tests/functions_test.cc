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
#include <cmath>
#include <memory>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "gtest/gtest.h"
#include "pmgreedy/auction.h"
#include "pmgreedy/curvature.h"
#include "pmgreedy/digraph.h"
#include "pmgreedy/errors.h"
#include "pmgreedy/exact.h"
#include "pmgreedy/generators.h"
#include "pmgreedy/greedy.h"
#include "pmgreedy/logdet.h"
#include "pmgreedy/panel.h"
#include "test_util.h"

namespace pmgreedy {
namespace {

using Fn = std::shared_ptr<const SetFunction>;

Eigen::MatrixXd Diag(std::initializer_list<double> d) {
  Eigen::VectorXd v(d.size());
  int i = 0;
  for (double x : d) v(i++) = x;
  return v.asDiagonal();
}

TimeSeriesPanel OneStation(std::vector<double> series) {
  return {{{"S0", "C0", std::move(series)}}};
}

TEST(LogDetTest, Values) {
  const LogDetFunction delta(DeltaMatrix(2.0));
  EXPECT_NEAR(delta.Value({0}), std::numbers::ln2, 1e-12);
  EXPECT_NEAR(delta.Value({1}), 0.0, 1e-12);
  EXPECT_NEAR(delta.Value({0, 1}), 0.0, 1e-12);
  EXPECT_EQ(delta.Value({}), 0.0);

  const LogDetFunction diag(PsdMatrix(Diag({2.0, 3.0, 5.0})));
  EXPECT_NEAR(diag.Value({0, 2}), std::log(10.0), 1e-14);
}

TEST(LogDetTest, EntropyOfIdentity) {
  const EntropyFunction h(PsdMatrix::Identity(3));
  const double unit = 0.5 * (1.0 + std::log(2.0 * std::numbers::pi));
  EXPECT_NEAR(kGaussianEntropyUnit, unit, 1e-15);
  EXPECT_NEAR(h.Value({1}), 1.41894, 1e-5);
  EXPECT_NEAR(h.Value({0, 2}), 2.83788, 1e-5);
  EXPECT_EQ(h.Value({}), 0.0);
}

TEST(LogDetTest, CholeskyMatchesEigenDeterminant) {
  for (int seed = 0; seed < 30; ++seed) {
    const PsdMatrix p = RandomPsd(1 + seed % 8, 2.0, seed);
    EXPECT_NEAR(LogDetCholesky(p.entries(), "p"),
                std::log(p.entries().determinant()), 1e-10);
  }
}

TEST(LogDetTest, ReportsNonPositiveDefiniteSubmatrix) {
  Eigen::MatrixXd a(3, 3);
  a << 1, 0, 0, 0, 1, 2, 0, 2, 1;
  const LogDetFunction f{PsdMatrix(a)};
  EXPECT_NO_THROW(f.Value({0, 1}));
  try {
    f.Value({1, 2});
    FAIL() << "expected NotPositiveDefiniteError";
  } catch (const NotPositiveDefiniteError& e) {
    EXPECT_NE(std::string(e.what()).find("{1,2}"), std::string::npos);
  }
}

TEST(LogDetTest, MatrixValidation) {
  Eigen::MatrixXd asym(2, 2);
  asym << 1, 0.5, 0.4, 1;
  EXPECT_THROW(PsdMatrix{asym}, InputError);
  EXPECT_THROW(PsdMatrix{Eigen::MatrixXd(2, 3)}, InputError);
  EXPECT_THROW(DeltaMatrix(1.0), InputError);
  EXPECT_THROW(RegularizeCovariance(PsdMatrix::Identity(2), -1.0), InputError);
  const PsdMatrix r = RegularizeCovariance(PsdMatrix(Diag({1.0, 4.0})), 0.5);
  EXPECT_EQ(r.entries(), Diag({1.5, 3.0}));
}

TEST(LogDetTest, SubmodularAndEntropyDecomposes) {
  for (int seed = 0; seed < 20; ++seed) {
    const int n = 2 + seed % 7;
    const PsdMatrix p = RandomPsd(n, 1.0, seed);
    const Fn logdet = std::make_shared<LogDetFunction>(p);
    EXPECT_TRUE(IsSubmodular(ValueOracle(logdet)).holds);
    EXPECT_TRUE(IsMonotone(ValueOracle(logdet)).holds);
    const EntropyFunction h(p);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      const ElementSet s = ElementSet::FromMask(m);
      const double det = s.empty() ? 1.0 : p.Principal(s).determinant();
      EXPECT_NEAR(h.Value(s), kGaussianEntropyUnit * s.size() + 0.5 * std::log(det),
                  1e-12);
    }
  }
}

TEST(EigenvalueBoundTest, Examples) {
  EXPECT_EQ(EigenvalueCurvatureBound(PsdMatrix::Identity(4)).alpha, 0.0);
  EXPECT_NEAR(EigenvalueCurvatureBound(PsdMatrix(Diag({4.0, 1.0}))).alpha, 0.75,
              1e-12);
  EXPECT_THROW(EigenvalueCurvatureBound(PsdMatrix(Diag({0.5, 2.0}))), InputError);
  const CurvatureReport sum = EntropyCurvatureBound(PsdMatrix(Diag({4.0, 1.0})));
  EXPECT_EQ(sum.method, CurvatureMethod::kSumRule);
  EXPECT_NEAR(sum.alpha, 0.75, 1e-12);
}

TEST(EigenvalueBoundTest, PowerIterationMatchesEigenSolver) {
  for (int seed = 0; seed < 40; ++seed) {
    const PsdMatrix p = RandomPsd(1 + seed % 10, 0.5 + seed % 4, seed);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(p.entries());
    const double lmax = solver.eigenvalues().maxCoeff();
    EXPECT_NEAR(DominantEigenvalue(p), lmax, 1e-8 * lmax);
    EXPECT_NEAR(EigenvalueCurvatureBound(p).alpha, 1.0 - 1.0 / lmax, 1e-8);
    EXPECT_TRUE(EigenvaluesAbove(p, 1.0 - 1e-9));
  }
}

TEST(CutTest, Values) {
  const CutFunction f(WeightedDigraph(3, {{0, 1, 2.5}, {1, 2, 1.0}, {2, 0, 0.5}}));
  EXPECT_EQ(f.Value({}), 0.0);
  EXPECT_EQ(f.Value({0}), 2.5);
  EXPECT_EQ(f.Value({1}), 1.0);
  EXPECT_EQ(f.Value({0, 1}), 1.0);
  EXPECT_EQ(f.Value({0, 1, 2}), 0.0);
}

TEST(CutTest, GraphValidation) {
  EXPECT_THROW(WeightedDigraph(2, {{0, 0}}), InputError);
  EXPECT_THROW(WeightedDigraph(2, {{0, 2}}), InputError);
  EXPECT_THROW(WeightedDigraph(2, {{0, 1, -1.0}}), InputError);
  EXPECT_THROW(WeightedDigraph(2, {{0, 1, NAN}}), InputError);
  const WeightedDigraph u = WeightedDigraph::Undirected(2, {{0, 1, 3.0}});
  EXPECT_TRUE(u.undirected());
  EXPECT_EQ(u.arcs(), (std::vector<Arc>{{0, 1, 3.0}, {1, 0, 3.0}}));
}

TEST(CutTest, RandomCutsAreSubmodular) {
  for (int seed = 0; seed < 30; ++seed) {
    const Fn f = std::make_shared<CutFunction>(
        RandomDigraph(2 + seed % 9, 0.4, seed, seed % 2 == 1));
    EXPECT_TRUE(IsSubmodular(ValueOracle(f)).holds);
    EXPECT_TRUE(IsSubadditive(ValueOracle(f)).holds);
  }
}

TEST(DegreeBoundTest, Examples) {
  EXPECT_EQ(DegreeCurvatureBound(WeightedDigraph::Undirected(
                                     4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}))
                .alpha,
            2.0);
  EXPECT_EQ(DegreeCurvatureBound(BadExampleGraph(5)).alpha, 5.0);
  EXPECT_EQ(DegreeCurvatureBound(WeightedDigraph(2, {{0, 1, 7.0}})).alpha, 2.0);
  EXPECT_EQ(DegreeCurvatureBound(WeightedDigraph(2, {{0, 1, 7.0}})).method,
            CurvatureMethod::kDegreeBound);
  EXPECT_THROW(DegreeCurvatureBound(WeightedDigraph(3, {})), DegenerateError);
}

TEST(DegreeBoundTest, BelowExactOnStar) {
  // Known gap: the bound is not an upper bound once marginals turn negative.
  const WeightedDigraph star =
      WeightedDigraph::Undirected(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(DegreeCurvatureBound(star).alpha, 2.0);
  EXPECT_EQ(ExactCurvature(ValueOracle(std::make_shared<CutFunction>(star))).alpha,
            4.0);
}

TEST(BadExampleTest, Structure) {
  EXPECT_EQ(BadExampleGraph(3).arcs(),
            (std::vector<Arc>{{0, 1}, {1, 0}, {2, 0}}));
  EXPECT_EQ(static_cast<int>(BadExampleGraph(9).arcs().size()), 9);
  EXPECT_THROW(BadExampleGraph(2), InputError);
}

TEST(BadExampleTest, GreedyRatioIsOneOverD) {
  for (int d = 2; d <= 4; ++d) {
    const int n = d + 3;
    const Fn f = std::make_shared<CutFunction>(BadExampleGraph(n));
    const PartitionMatroid m = PartitionMatroid::Uniform(n, d);
    ValueOracle oracle(f);
    const GreedyTrace t = Greedy(oracle, m);
    const auto opt = testing::NaiveOpt(*f, m);
    EXPECT_EQ(t.final_value(), 1.0);
    EXPECT_EQ(opt.value, static_cast<double>(d));
    EXPECT_EQ(t.final_value() * d, opt.value);
  }
}

TEST(CurvatureOfBadExampleTest, AtLeastD) {
  for (int n = 4; n <= 7; ++n) {
    const double alpha = ExactCurvature(
        ValueOracle(std::make_shared<CutFunction>(BadExampleGraph(n)))).alpha;
    EXPECT_EQ(alpha, static_cast<double>(n));
  }
}

TEST(AuctionTest, BudgetAdditive) {
  const BudgetAdditiveFunction u({2.0, 2.0}, 3.0);
  EXPECT_EQ(u.Value({0}), 2.0);
  EXPECT_EQ(u.Value({0, 1}), 3.0);
  EXPECT_EQ(u.name(), "budget_additive");
  EXPECT_EQ(AdditiveUtility({1.0, 2.0})->Value({0, 1}), 3.0);
  EXPECT_TRUE(AdditiveUtility({1.0})->additive());
  EXPECT_THROW(BudgetAdditiveFunction({-1.0}, 1.0), InputError);
  EXPECT_THROW(BudgetAdditiveFunction({1.0}, -1.0), InputError);
  EXPECT_THROW(BudgetAdditiveFunction({NAN}, 1.0), InputError);
}

TEST(AuctionTest, TwoByTwoAdditive) {
  const AuctionInstance a(2, 2, {AdditiveUtility({3.0, 1.0}),
                                 AdditiveUtility({1.0, 3.0})});
  EXPECT_EQ(a.ElementId(1, 0), 2);
  EXPECT_EQ(a.Decode(3), std::make_pair(1, 1));
  EXPECT_THROW(a.Decode(4), InputError);
  const auto f = std::make_shared<SocialWelfareFunction>(a);
  EXPECT_EQ(f->Value({0, 3}), 6.0);
  EXPECT_EQ(f->Value({1, 2}), 2.0);
  const PartitionMatroid m = a.ItemPartition();
  EXPECT_EQ(m.num_blocks(), 2);
  EXPECT_EQ(m.block(0), (std::vector<Element>{0, 2}));
  EXPECT_FALSE(m.IsFeasible({0, 2}));
  ValueOracle oracle(f);
  const GreedyTrace t = Greedy(oracle, m);
  EXPECT_EQ(t.selections, (std::vector<Element>{0, 3}));
  EXPECT_EQ(t.final_value(), testing::NaiveOpt(*f, m).value);
}

TEST(AuctionTest, RejectsMismatchedUtilities) {
  EXPECT_THROW(AuctionInstance(2, 2, {AdditiveUtility({1.0, 1.0})}), InputError);
  EXPECT_THROW(AuctionInstance(1, 2, {AdditiveUtility({1.0})}), InputError);
}

TEST(AuctionTest, WelfareStructure) {
  for (int seed = 0; seed < 30; ++seed) {
    const int players = 1 + seed % 3;
    const int items = std::max(1, 9 / players - seed % 2);
    const AuctionInstance a = RandomAuction(players, items, seed);
    const auto f = std::make_shared<SocialWelfareFunction>(a);
    EXPECT_TRUE(IsMonotone(ValueOracle(f)).holds);
    EXPECT_TRUE(IsSubadditive(ValueOracle(f)).holds);
    double worst = 0.0;
    for (const auto& u : a.utilities()) {
      worst = std::max(worst, testing::NaiveCurvature(*u));
    }
    EXPECT_LE(ExactCurvature(ValueOracle(f)).alpha, worst + 1e-9);
  }
}

TEST(PanelTest, CovarianceOfAlternatingSeries) {
  // Variations 1, -1, 1, -1 have mean 0 and sum of squares 4 over 3 dof.
  const PsdMatrix c = CovarianceFromPanel(OneStation({0, 1, 0, 1, 0}));
  EXPECT_NEAR(c(0, 0), 4.0 / 3.0, 1e-15);
  EXPECT_EQ(CovarianceFromPanel(OneStation({2, 2, 2, 2}))(0, 0), 0.0);
  EXPECT_EQ(CovarianceFromPanel(OneStation({1, 2, 3, 4}))(0, 0), 0.0);
  EXPECT_THROW(CovarianceFromPanel(OneStation({1, 2})), InputError);
  EXPECT_THROW(CovarianceFromPanel(TimeSeriesPanel{}), InputError);
}

TEST(PanelTest, CovarianceMatchesDirectFormula) {
  const TimeSeriesPanel panel = RandomPanel(5, 2, 13, 4);
  const PsdMatrix c = CovarianceFromPanel(panel);
  const int m = 12;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const auto& x = panel.stations[i].temperatures;
      const auto& y = panel.stations[j].temperatures;
      double mx = 0, my = 0;
      for (int t = 0; t < m; ++t) {
        mx += (x[t + 1] - x[t]) / m;
        my += (y[t + 1] - y[t]) / m;
      }
      double s = 0;
      for (int t = 0; t < m; ++t) {
        s += (x[t + 1] - x[t] - mx) * (y[t + 1] - y[t] - my);
      }
      EXPECT_NEAR(c(i, j), s / (m - 1), 1e-10);
      EXPECT_EQ(c(i, j), c(j, i));
    }
  }
}

TEST(PanelTest, CountryPartition) {
  TimeSeriesPanel panel;
  for (int i = 0; i < 10; ++i) {
    panel.stations.push_back(
        {"S" + std::to_string(i), i < 3 ? "AA" : "BB", {0, 1, 2}});
  }
  const PartitionMatroid half = CountryPartition(panel, 0.5);
  ASSERT_EQ(half.num_blocks(), 2);
  EXPECT_EQ(half.capacities(), (std::vector<int>{1, 3}));
  EXPECT_EQ(CountryPartition(panel, 0.1).capacities(), (std::vector<int>{1, 1}));
  EXPECT_EQ(CountryPartition(panel, 1.0).capacities(), (std::vector<int>{3, 7}));
  EXPECT_THROW(CountryPartition(panel, 0.0), InputError);
  EXPECT_THROW(CountryPartition(panel, 1.5), InputError);
}

TEST(GeneratorTest, DeterministicPerSeed) {
  EXPECT_EQ(RandomDigraph(8, 0.4, 5), RandomDigraph(8, 0.4, 5));
  EXPECT_EQ(RandomPsd(6, 1.0, 5).entries(), RandomPsd(6, 1.0, 5).entries());
  EXPECT_EQ(RandomPanel(12, 2, 36, 5), RandomPanel(12, 2, 36, 5));
  EXPECT_NE(RandomPanel(12, 2, 36, 5), RandomPanel(12, 2, 36, 6));
  const TimeSeriesPanel p = RandomPanel(12, 2, 36, 1);
  EXPECT_EQ(p.size(), 12);
  EXPECT_EQ(p.stations[1].country, "C1");
  EXPECT_NO_THROW(p.Validate());
}

}  // namespace
}  // namespace pmgreedy
