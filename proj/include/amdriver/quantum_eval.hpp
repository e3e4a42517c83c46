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

#ifndef AMDRIVER_QUANTUM_EVAL_HPP
#define AMDRIVER_QUANTUM_EVAL_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>

#include "amdriver/classical_eval.hpp"
#include "amdriver/core_model.hpp"
#include "amdriver/error.hpp"
#include "amdriver/quantum_state.hpp"

namespace amdriver {

/// Destination reached from basis index `index` of an m-qubit register under
/// the first-zero rule: position of the first 0 reading from qubit 1, or
/// m + 1 when every qubit reads 1.
inline int first_zero_destination(std::size_t index, int num_qubits) noexcept {
  for (int q = 0; q < num_qubits; ++q) {
    if (((index >> (num_qubits - 1 - q)) & 1U) == 0) return q + 1;
  }
  return num_qubits + 1;
}

/// Distribution over the m + 1 destinations when qubit i is measured at
/// intersection i and the driver exits on the first 0.
inline DestinationDistribution first_zero_distribution(
    const StateVector& state) {
  const auto amps = state.amplitudes();
  const double norm2 = StateVector::squared_norm(amps);
  if (std::abs(norm2 - 1.0) > kStateNormTolerance) {
    throw Error(Errc::kNotNormalized,
                "squared norm is " + std::to_string(norm2));
  }
  const int m = state.num_qubits();
  DestinationDistribution dist;
  dist.probs.assign(static_cast<std::size_t>(m) + 1, 0.0);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    dist.probs[static_cast<std::size_t>(first_zero_destination(i, m) - 1)] +=
        std::norm(amps[i]);
  }
  return dist;
}

inline double quantum_expected_payoff(const DriveProblem& problem,
                                      const StateVector& state) {
  if (state.num_qubits() != problem.num_exits()) {
    throw Error(Errc::kStrategyMismatch,
                std::to_string(state.num_qubits()) + " qubits for " +
                    std::to_string(problem.num_exits()) + " intersections");
  }
  return first_zero_distribution(state).dot(problem.destination_payoffs());
}

/// Destination distribution for any strategy kind.
inline DestinationDistribution strategy_distribution(
    const DriveProblem& problem, const Strategy& strategy) {
  if (const auto* q = std::get_if<Quantum>(&strategy)) {
    check_dimensions(strategy, problem.num_exits());
    return first_zero_distribution(q->state);
  }
  return destination_distribution(problem, strategy);
}

/// Expected payoff for any strategy kind.
inline double strategy_payoff(const DriveProblem& problem,
                              const Strategy& strategy) {
  if (const auto* q = std::get_if<Quantum>(&strategy)) {
    return quantum_expected_payoff(problem, q->state);
  }
  return expected_payoff(problem, strategy);
}

}  // namespace amdriver

#endif  // AMDRIVER_QUANTUM_EVAL_HPP
