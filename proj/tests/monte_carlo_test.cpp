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

#include "amdriver/monte_carlo.hpp"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"

namespace amdriver {
namespace {

constexpr std::uint64_t kTrials = 1'000'000;
constexpr std::uint64_t kSeed = 0x5eed;
const double kR = 1.0 / std::sqrt(2.0);

struct Case {
  const char* name;
  DriveProblem problem;
  Strategy strategy;
};

std::vector<Case> ReferenceCases() {
  const auto ex1 = make_drive_problem({0, 4}, 1);
  const auto ex2 = make_drive_problem({0, 4, 1}, 1);
  return {
      {"ex1 stationary 1/3", ex1, Stationary{1.0 / 3}},
      {"ex2 stationary 1/3", ex2, Stationary{1.0 / 3}},
      {"ex1 counting", ex1, Counting{}},
      {"ex2 counting", ex2, Counting{}},
      {"ex1 per-step", ex1, PerStep{{0.2, 0.9}}},
      {"ex1 bell", ex1, Quantum{build_state({{"01", kR}, {"10", kR}})}},
      {"ex2 001+110", ex2, Quantum{build_state({{"001", kR}, {"110", kR}})}},
      {"ex2 |110>", ex2, Quantum{build_state({{"110", 1.0}})}},
  };
}

TEST(SimulateDriveTest, DeterministicStrategies) {
  const auto ex1 = make_drive_problem({0, 4}, 1);
  const Strategy bell = Quantum{build_state({{"01", kR}, {"10", kR}})};
  Rng rng(1);
  bool seen[4] = {};
  for (int i = 0; i < 1000; ++i) {
    EXPECT_EQ(simulate_drive(ex1, Stationary{1.0}, rng), 1);
    EXPECT_EQ(simulate_drive(ex1, Stationary{0.0}, rng), 3);
    const int d = simulate_drive(ex1, bell, rng);
    ASSERT_TRUE(d == 1 || d == 2) << d;
    seen[d] = true;
  }
  EXPECT_TRUE(seen[1] && seen[2]);
}

TEST(SimulateDriveTest, MismatchRejected) {
  Rng rng(1);
  try {
    simulate_drive(make_drive_problem({0, 4}, 1), PerStep{{0.5}}, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kStrategyMismatch);
  }
}

TEST(EstimatePayoffTest, NoTrials) {
  try {
    estimate_payoff(make_drive_problem({0, 4}, 1), Counting{}, 0, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNoTrials);
  }
}

TEST(EstimatePayoffTest, AgreesWithAnalyticValues) {
  for (const auto& c : ReferenceCases()) {
    const auto report = estimate_payoff(c.problem, c.strategy, kTrials, kSeed);
    const auto exact = strategy_distribution(c.problem, c.strategy);
    const double analytic = exact.dot(c.problem.destination_payoffs());
    EXPECT_LE(std::abs(report.mean_payoff - analytic), 4 * report.std_error + 1e-15)
        << c.name;
    EXPECT_LE(total_variation(report.empirical_distribution, exact), 0.005) << c.name;
    EXPECT_NEAR(report.empirical_distribution.total(), 1.0, 1e-12) << c.name;
    EXPECT_GE(report.std_error, 0.0);
    EXPECT_EQ(report.trials, kTrials);
    EXPECT_EQ(report.seed, kSeed);
  }
}

TEST(EstimatePayoffTest, HeadlineValues) {
  const auto ex1 = make_drive_problem({0, 4}, 1);
  const auto ex2 = make_drive_problem({0, 4, 1}, 1);
  const auto r1 = estimate_payoff(ex1, Stationary{1.0 / 3}, kTrials, 11);
  EXPECT_LE(std::abs(r1.mean_payoff - 4.0 / 3), 4 * r1.std_error);
  const auto r2 = estimate_payoff(ex2, Counting{}, kTrials, 12);
  EXPECT_LE(std::abs(r2.mean_payoff - 1.5), 4 * r2.std_error);
  const auto r3 = estimate_payoff(
      ex1, Quantum{build_state({{"01", kR}, {"10", kR}})}, kTrials, 13);
  EXPECT_LE(std::abs(r3.mean_payoff - 2.0), 4 * r3.std_error);
}

TEST(EstimatePayoffTest, ReproducibleAcrossRunsAndThreads) {
  for (const auto& c : ReferenceCases()) {
    const auto serial = estimate_payoff(c.problem, c.strategy, 300'001, 77, 1);
    EXPECT_EQ(serial, estimate_payoff(c.problem, c.strategy, 300'001, 77, 1)) << c.name;
    EXPECT_EQ(serial, estimate_payoff(c.problem, c.strategy, 300'001, 77, 4)) << c.name;
    EXPECT_EQ(serial, estimate_payoff(c.problem, c.strategy, 300'001, 77, 0)) << c.name;
  }
}

TEST(EstimatePayoffTest, SeedChangesStream) {
  const auto ex1 = make_drive_problem({0, 4}, 1);
  const auto a = estimate_payoff(ex1, Stationary{0.5}, 10000, 1);
  const auto b = estimate_payoff(ex1, Stationary{0.5}, 10000, 2);
  EXPECT_NE(a.empirical_distribution, b.empirical_distribution);
}

TEST(EstimatePayoffTest, DeterministicOutcomeHasZeroError) {
  const auto report =
      estimate_payoff(make_drive_problem({0, 4}, 1), Stationary{1.0}, 1000, 3);
  EXPECT_EQ(report.mean_payoff, 0.0);
  EXPECT_EQ(report.std_error, 0.0);
  const auto single =
      estimate_payoff(make_drive_problem({0, 4}, 1), Stationary{0.5}, 1, 3);
  EXPECT_EQ(single.std_error, 0.0);
}

TEST(TotalVariationTest, Basics) {
  EXPECT_EQ(total_variation({{0.5, 0.5}}, {{0.5, 0.5}}), 0.0);
  EXPECT_DOUBLE_EQ(total_variation({{1, 0}}, {{0, 1}}), 1.0);
  EXPECT_THROW(total_variation({{1}}, {{0.5, 0.5}}), Error);
}

}  // namespace
}  // namespace amdriver
