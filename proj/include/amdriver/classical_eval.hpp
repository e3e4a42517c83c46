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

#ifndef AMDRIVER_CLASSICAL_EVAL_HPP
#define AMDRIVER_CLASSICAL_EVAL_HPP

#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "amdriver/core_model.hpp"
#include "amdriver/error.hpp"
#include "amdriver/polynomial.hpp"

namespace amdriver {

/// Probability of ending at each destination 1..k (stored 0-based).
struct DestinationDistribution {
  std::vector<double> probs;

  std::size_t size() const noexcept { return probs.size(); }
  double operator[](std::size_t i) const { return probs[i]; }
  double total() const noexcept {
    return std::accumulate(probs.begin(), probs.end(), 0.0);
  }

  /// Expected payoff against destination payoffs aligned with `probs`.
  double dot(std::span<const double> payoffs) const {
    if (payoffs.size() != probs.size()) {
      throw Error(Errc::kStrategyMismatch,
                  "distribution over " + std::to_string(probs.size()) +
                      " destinations, payoffs for " +
                      std::to_string(payoffs.size()));
    }
    double s = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) s += probs[i] * payoffs[i];
    return s;
  }

  friend bool operator==(const DestinationDistribution&,
                         const DestinationDistribution&) = default;
};

namespace detail {

inline constexpr double kClampSlack = 1e-15;

// Entries a hair outside [0, 1] are rounding; anything further is a bug.
inline double clamp_probability(double p) {
  if (p >= 0.0 && p <= 1.0) return p;
  if (p < 0.0 && p >= -kClampSlack) return 0.0;
  if (p > 1.0 && p <= 1.0 + kClampSlack) return 1.0;
  throw std::logic_error("probability out of range: " + std::to_string(p));
}

}  // namespace detail

/// Reach-and-exit probabilities of a classical strategy:
/// probs[i] = prod_{j<i} (1 - p_j) * p_i, terminal gets prod_j (1 - p_j).
inline DestinationDistribution destination_distribution(
    const DriveProblem& problem, const Strategy& strategy) {
  if (is_quantum(strategy)) {
    throw Error(Errc::kNoStepwiseMarginal,
                "use first_zero_distribution for quantum strategies");
  }
  const int m = problem.num_exits();
  const int k = problem.num_destinations();
  check_dimensions(strategy, m);

  DestinationDistribution dist;
  dist.probs.reserve(static_cast<std::size_t>(k));
  double reach = 1.0;
  for (int i = 1; i <= m; ++i) {
    const double p = exit_probability(strategy, i, k);
    dist.probs.push_back(detail::clamp_probability(reach * p));
    reach *= 1.0 - p;
  }
  dist.probs.push_back(detail::clamp_probability(reach));
  return dist;
}

inline double expected_payoff(const DriveProblem& problem,
                              const Strategy& strategy) {
  return destination_distribution(problem, strategy)
      .dot(problem.destination_payoffs());
}

/// Expected payoff of Stationary(alpha) as a polynomial in alpha:
/// sum_i v_i (1-alpha)^(i-1) alpha + v_terminal (1-alpha)^m, with m + 1
/// coefficients.
inline PayoffPolynomial stationary_payoff_polynomial(
    const DriveProblem& problem) {
  const int m = problem.num_exits();
  const PayoffPolynomial stay({1.0, -1.0});
  const PayoffPolynomial leave({0.0, 1.0});

  PayoffPolynomial total(std::vector<double>(static_cast<std::size_t>(m) + 1));
  PayoffPolynomial reach({1.0});
  for (double v : problem.exit_payoffs()) {
    total += v * (reach * leave);
    reach = reach * stay;
  }
  total += problem.terminal_payoff() * reach;
  return total;
}

}  // namespace amdriver

#endif  // AMDRIVER_CLASSICAL_EVAL_HPP
