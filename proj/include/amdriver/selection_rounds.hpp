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

#ifndef AMDRIVER_SELECTION_ROUNDS_HPP
#define AMDRIVER_SELECTION_ROUNDS_HPP

#include <string>
#include <vector>

#include "amdriver/alpha_optimizer.hpp"
#include "amdriver/classical_eval.hpp"
#include "amdriver/core_model.hpp"
#include "amdriver/error.hpp"
#include "amdriver/polynomial.hpp"

// Two-round selection: pick one destination, remove it, drive the highway
// again for the second pick. The first pick is averaged uniformly with weight
// 1/n whatever strategy drives the second round; this reproduces the worked
// 2-of-4 arithmetic rather than letting the first round follow alpha.

namespace amdriver {

/// What remains of `problem` once destination `removed` (1..k) is taken.
/// Remaining destinations keep their order and the last becomes the new
/// terminal.
inline DriveProblem residual_problem(const DriveProblem& problem,
                                     int removed) {
  const int k = problem.num_destinations();
  if (removed < 1 || removed > k) {
    throw Error(Errc::kBadDestination,
                std::to_string(removed) + " not in 1.." + std::to_string(k));
  }
  if (k == 1) {
    throw Error(Errc::kDegenerateProblem, "nothing left after removal");
  }
  std::vector<double> rest = problem.destination_payoffs();
  rest.erase(rest.begin() + (removed - 1));
  return DriveProblem::from_destinations(std::move(rest));
}

struct RoundBreakdown {
  int first_choice = 0;
  double first_payoff = 0.0;
  PayoffPolynomial second_round_polynomial;
  PayoffPolynomial total_polynomial;
};

/// One entry per first choice, in destination order.
inline std::vector<RoundBreakdown> two_round_breakdown(
    const SelectionProblem& sel) {
  const DriveProblem highway = sel.as_drive_problem();
  std::vector<RoundBreakdown> rows;
  for (int i = 1; i <= sel.num_destinations(); ++i) {
    RoundBreakdown row;
    row.first_choice = i;
    row.first_payoff = sel.payoff(i);
    row.second_round_polynomial =
        stationary_payoff_polynomial(residual_problem(highway, i));
    row.total_polynomial =
        PayoffPolynomial({row.first_payoff}) + row.second_round_polynomial;
    rows.push_back(std::move(row));
  }
  return rows;
}

/// (1/n) sum_i [v_i + P_residual(i)(alpha)].
inline PayoffPolynomial two_round_average_polynomial(
    const SelectionProblem& sel) {
  PayoffPolynomial avg;
  for (const auto& row : two_round_breakdown(sel)) avg += row.total_polynomial;
  avg *= 1.0 / static_cast<double>(sel.num_destinations());
  return avg;
}

inline OptimizationResult optimize_two_round(const SelectionProblem& sel) {
  return maximize_polynomial(two_round_average_polynomial(sel));
}

struct CountingRound {
  int first_choice = 0;
  double first_payoff = 0.0;
  double second_payoff = 0.0;  // counting strategy on the residual highway
};

inline std::vector<CountingRound> two_round_counting_breakdown(
    const SelectionProblem& sel) {
  const DriveProblem highway = sel.as_drive_problem();
  std::vector<CountingRound> rows;
  for (int i = 1; i <= sel.num_destinations(); ++i) {
    rows.push_back({i, sel.payoff(i),
                    expected_payoff(residual_problem(highway, i), Counting{})});
  }
  return rows;
}

/// Uniform first pick, counting strategy for the second pick.
inline double two_round_counting_total(const SelectionProblem& sel) {
  double sum = 0.0;
  for (const auto& row : two_round_counting_breakdown(sel)) {
    sum += row.first_payoff + row.second_payoff;
  }
  return sum / static_cast<double>(sel.num_destinations());
}

/// Counting total minus the optimized stationary total; positive when the
/// counter helps.
inline double selection_improvement(const SelectionProblem& sel) {
  return two_round_counting_total(sel) - optimize_two_round(sel).payoff_star;
}

}  // namespace amdriver

#endif  // AMDRIVER_SELECTION_ROUNDS_HPP
