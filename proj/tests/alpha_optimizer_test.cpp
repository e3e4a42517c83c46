// Copyright 2026 The amdriver Authors.
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

#include "amdriver/alpha_optimizer.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace amdriver {
namespace {

// Stationary payoff computed by path enumeration, not by the polynomial.
double EnumeratedPayoff(const DriveProblem& p, double alpha) {
  const auto dist =
      oracle::enumerate_paths(std::vector<double>(p.num_exits(), alpha));
  const auto v = p.destination_payoffs();
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += dist[i] * v[i];
  return s;
}

DriveProblem RandomProblem(std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_int_distribution<int> size(1, 4);
  std::uniform_real_distribution<double> payoff(0.0, 10.0);
  std::vector<double> exits(size(rng));
  for (auto& v : exits) v = scale * payoff(rng);
  return make_drive_problem(exits, scale * payoff(rng));
}

TEST(MaximizePolynomialTest, WorkedQuadratic) {
  const auto r = maximize_polynomial(PayoffPolynomial({1, 2, -3}));
  EXPECT_NEAR(r.alpha_star, 1.0 / 3, 1e-15);
  EXPECT_NEAR(r.payoff_star, 4.0 / 3, 1e-15);
  EXPECT_EQ(r.method, OptimizationMethod::kClosedForm);
}

TEST(MaximizePolynomialTest, ConstantTiesToZero) {
  const auto r = maximize_polynomial(PayoffPolynomial({2.5, 0}));
  EXPECT_EQ(r.alpha_star, 0.0);
  EXPECT_EQ(r.payoff_star, 2.5);
}

TEST(MaximizePolynomialTest, MonotoneEndpoint) {
  const auto r = maximize_polynomial(PayoffPolynomial({0, 1}));
  EXPECT_EQ(r.alpha_star, 1.0);
  EXPECT_EQ(r.payoff_star, 1.0);
}

TEST(MaximizePolynomialTest, ConvexPicksBoundary) {
  // (a - 0.4)^2 has an interior minimum; the maximum sits at alpha = 1.
  const auto r = maximize_polynomial(PayoffPolynomial({0.16, -0.8, 1}));
  EXPECT_EQ(r.alpha_star, 1.0);
  EXPECT_NEAR(r.payoff_star, 0.36, 1e-15);
}

TEST(MaximizePolynomialTest, QuarticUsesRootIsolation) {
  // -(a - 0.25)^2 (a - 0.8)^2 + 0.01 a: bimodal with a slight tilt to 0.8.
  const PayoffPolynomial p = PayoffPolynomial({0.25, -1}) * PayoffPolynomial({0.25, -1}) *
                                 PayoffPolynomial({0.8, -1}) * PayoffPolynomial({0.8, -1}) *
                                 -1.0 +
                             PayoffPolynomial({0, 0.01});
  const auto r = maximize_polynomial(p);
  EXPECT_EQ(r.method, OptimizationMethod::kNumeric);
  const auto grid = oracle::grid_maximum([&](double a) { return p(a); }, 100001);
  EXPECT_GE(r.payoff_star, grid.value - 1e-12);
  EXPECT_NEAR(r.alpha_star, grid.alpha, 1e-4);
}

TEST(OptimizeStationaryTest, WorkedExamples) {
  for (const auto& problem :
       {make_drive_problem({0, 4}, 1), make_drive_problem({0, 4, 1}, 1)}) {
    const auto r = optimize_stationary(problem);
    EXPECT_NEAR(r.alpha_star, 1.0 / 3, 1e-12);
    EXPECT_NEAR(r.payoff_star, 4.0 / 3, 1e-12);
  }
}

TEST(OptimizeStationaryTest, FourExitsAgainstGrid) {
  const auto problem = make_drive_problem({2, 5, 3, 1}, 0);
  const auto r = optimize_stationary(problem);
  const auto grid =
      oracle::grid_maximum([&](double a) { return EnumeratedPayoff(problem, a); }, 100001);
  EXPECT_NEAR(r.payoff_star, grid.value, 1e-6);
  EXPECT_GE(r.payoff_star, grid.value - 1e-12);
  EXPECT_NEAR(r.alpha_star, grid.alpha, 1e-4);
}

TEST(NumericMaximizeTest, QuadraticObjectives) {
  const auto r1 = numeric_maximize([](double a) { return 1 + 2 * a - 3 * a * a; }, 1e-10);
  EXPECT_NEAR(r1.alpha_star, 1.0 / 3, 1e-9);
  EXPECT_NEAR(r1.payoff_star, 4.0 / 3, 1e-12);
  EXPECT_EQ(r1.method, OptimizationMethod::kNumeric);

  const auto r2 = numeric_maximize(
      [](double a) { return (10 + 6 * a - 6 * a * a) / 4; }, 1e-10);
  EXPECT_NEAR(r2.alpha_star, 0.5, 1e-9);
  EXPECT_NEAR(r2.payoff_star, 23.0 / 8, 1e-12);
}

TEST(NumericMaximizeTest, ConstantTiesToZero) {
  EXPECT_EQ(numeric_maximize([](double) { return 7.0; }, 1e-8).alpha_star, 0.0);
}

TEST(NumericMaximizeTest, MultimodalFindsGlobalPeak) {
  auto f = [](double a) { return std::sin(9 * a) + 0.5 * a; };
  const auto r = numeric_maximize(f, 1e-10);
  const auto grid = oracle::grid_maximum(f, 1001);
  EXPECT_GE(r.payoff_star, grid.value - 1e-6);
  EXPECT_NEAR(r.alpha_star, grid.alpha, 2e-3);
}

TEST(NumericMaximizeTest, Errors) {
  try {
    numeric_maximize([](double a) { return a > 0.5 ? NAN : a; }, 1e-6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kObjectiveError);
  }
  EXPECT_THROW(numeric_maximize([](double a) { return a; }, 0.0), Error);
}

TEST(OptimizerPropertyTest, BeatsFineGrid) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const auto problem = RandomProblem(rng);
    const auto r = optimize_stationary(problem);
    const auto poly = stationary_payoff_polynomial(problem);
    EXPECT_GE(r.alpha_star, 0.0);
    EXPECT_LE(r.alpha_star, 1.0);
    EXPECT_NEAR(r.payoff_star, poly(r.alpha_star), 1e-9);
    for (int i = 0; i < 10000; ++i) {
      const double a = i / 9999.0;
      ASSERT_GE(r.payoff_star, poly(a) - 1e-9) << "trial " << trial << " alpha " << a;
    }
  }
}

TEST(OptimizerPropertyTest, ClosedFormAgreesWithNumeric) {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    const auto problem = RandomProblem(rng);
    const auto poly = stationary_payoff_polynomial(problem);
    const auto closed = maximize_polynomial(poly);
    const auto numeric = numeric_maximize([&](double a) { return poly(a); }, 1e-10);
    const bool same_point = std::abs(closed.alpha_star - numeric.alpha_star) <= 1e-6;
    const bool same_value = std::abs(closed.payoff_star - numeric.payoff_star) <= 1e-9;
    EXPECT_TRUE(same_point || same_value)
        << "trial " << trial << ": " << closed.alpha_star << " vs " << numeric.alpha_star;
  }
}

TEST(OptimizerPropertyTest, ScalingPayoffs) {
  std::mt19937_64 rng(321);
  for (int trial = 0; trial < 100; ++trial) {
    std::mt19937_64 copy = rng;
    const auto base = RandomProblem(rng);
    const auto scaled = RandomProblem(copy, 3.0);
    const auto r = optimize_stationary(base);
    const auto s = optimize_stationary(scaled);
    EXPECT_NEAR(s.alpha_star, r.alpha_star, 1e-9);
    EXPECT_NEAR(s.payoff_star, 3.0 * r.payoff_star, 1e-9);
  }
}

}  // namespace
}  // namespace amdriver
