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

#ifndef AMDRIVER_CORE_MODEL_HPP
#define AMDRIVER_CORE_MODEL_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "amdriver/error.hpp"
#include "amdriver/quantum_state.hpp"

namespace amdriver {

namespace detail {

inline void check_finite_payoffs(std::span<const double> payoffs,
                                 const char* what) {
  for (std::size_t i = 0; i < payoffs.size(); ++i) {
    if (!std::isfinite(payoffs[i])) {
      throw Error(Errc::kInvalidPayoff,
                  std::string(what) + "[" + std::to_string(i) + "]");
    }
  }
}

inline void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(Errc::kInvalidProbability,
                std::string(what) + " = " + std::to_string(p) +
                    " is outside [0, 1]");
  }
}

}  // namespace detail

/// A linear highway with m exits followed by a terminal outcome.
///
/// Destinations are numbered 1..k with k = m + 1: destination i <= m means
/// "took exit i", destination k is the end of the highway.
class DriveProblem {
 public:
  /// Builds an instance with at least one exit.
  static DriveProblem create(std::vector<double> exit_payoffs,
                             double terminal_payoff) {
    if (exit_payoffs.empty()) {
      throw Error(Errc::kDegenerateProblem, "no exits");
    }
    return from_destinations_impl(std::move(exit_payoffs), terminal_payoff);
  }

  /// Builds an instance from the full destination payoff list; the last
  /// entry becomes the terminal. A single destination gives m = 0, the
  /// forced-outcome problem left over after a two-round selection on two
  /// destinations.
  static DriveProblem from_destinations(std::vector<double> payoffs) {
    if (payoffs.empty()) {
      throw Error(Errc::kDegenerateProblem, "no destinations");
    }
    const double terminal = payoffs.back();
    payoffs.pop_back();
    return from_destinations_impl(std::move(payoffs), terminal);
  }

  int num_exits() const noexcept { return static_cast<int>(exits_.size()); }
  int num_destinations() const noexcept { return num_exits() + 1; }
  std::span<const double> exit_payoffs() const noexcept { return exits_; }
  double terminal_payoff() const noexcept { return terminal_; }

  /// Payoff of destination i in 1..k.
  double destination_payoff(int i) const {
    if (i < 1 || i > num_destinations()) {
      throw Error(Errc::kBadDestination, std::to_string(i));
    }
    return i == num_destinations() ? terminal_ : exits_[i - 1];
  }

  /// Exit payoffs followed by the terminal payoff.
  std::vector<double> destination_payoffs() const {
    std::vector<double> out(exits_);
    out.push_back(terminal_);
    return out;
  }

  friend bool operator==(const DriveProblem&, const DriveProblem&) = default;

 private:
  static DriveProblem from_destinations_impl(std::vector<double> exits,
                                             double terminal) {
    detail::check_finite_payoffs(exits, "exit_payoffs");
    if (!std::isfinite(terminal)) {
      throw Error(Errc::kInvalidPayoff, "terminal_payoff");
    }
    return DriveProblem(std::move(exits), terminal);
  }

  DriveProblem(std::vector<double> exits, double terminal)
      : exits_(std::move(exits)), terminal_(terminal) {}

  std::vector<double> exits_;
  double terminal_;
};

inline DriveProblem make_drive_problem(std::vector<double> exit_payoffs,
                                       double terminal_payoff) {
  return DriveProblem::create(std::move(exit_payoffs), terminal_payoff);
}

/// Choose 2 of n destinations in two passes over the same highway; the first
/// pick is removed before the second pass.
class SelectionProblem {
 public:
  static constexpr int kRounds = 2;

  static SelectionProblem create(std::vector<double> destination_payoffs) {
    if (destination_payoffs.size() < 2) {
      throw Error(Errc::kDegenerateProblem,
                  "selection needs at least 2 destinations");
    }
    detail::check_finite_payoffs(destination_payoffs, "destination_payoffs");
    return SelectionProblem(std::move(destination_payoffs));
  }

  int num_destinations() const noexcept {
    return static_cast<int>(payoffs_.size());
  }
  std::span<const double> destination_payoffs() const noexcept {
    return payoffs_;
  }
  double payoff(int i) const {
    if (i < 1 || i > num_destinations()) {
      throw Error(Errc::kBadDestination, std::to_string(i));
    }
    return payoffs_[i - 1];
  }

  /// The same destinations laid out as a highway (last one is the terminal).
  DriveProblem as_drive_problem() const {
    return DriveProblem::from_destinations(payoffs_);
  }

  friend bool operator==(const SelectionProblem&,
                         const SelectionProblem&) = default;

 private:
  explicit SelectionProblem(std::vector<double> payoffs)
      : payoffs_(std::move(payoffs)) {}

  std::vector<double> payoffs_;
};

/// Exit with the same probability alpha at every intersection.
struct Stationary {
  double alpha;

  friend bool operator==(const Stationary&, const Stationary&) = default;
};

/// Exit with probability 1/(k-i+1) at intersection i. Needs the intersection
/// index, which the evaluator supplies.
struct Counting {
  friend bool operator==(const Counting&, const Counting&) = default;
};

/// Explicit exit probability for each intersection.
struct PerStep {
  std::vector<double> exit_probs;

  friend bool operator==(const PerStep&, const PerStep&) = default;
};

/// Measure qubit i at intersection i and exit on the first 0.
struct Quantum {
  StateVector state;

  friend bool operator==(const Quantum&, const Quantum&) = default;
};

using Strategy = std::variant<Stationary, Counting, PerStep, Quantum>;

inline Strategy make_stationary(double alpha) {
  detail::check_probability(alpha, "alpha");
  return Stationary{alpha};
}

inline Strategy make_per_step(std::vector<double> exit_probs) {
  for (double p : exit_probs) detail::check_probability(p, "exit_probs");
  return PerStep{std::move(exit_probs)};
}

inline bool is_quantum(const Strategy& s) noexcept {
  return std::holds_alternative<Quantum>(s);
}

inline const char* strategy_kind(const Strategy& s) noexcept {
  constexpr const char* kNames[] = {"stationary", "counting", "per_step",
                                    "quantum"};
  return kNames[s.index()];
}

/// Throws kStrategyMismatch unless `strategy` fits a problem with m exits.
inline void check_dimensions(const Strategy& strategy, int num_exits) {
  if (const auto* per_step = std::get_if<PerStep>(&strategy)) {
    if (static_cast<int>(per_step->exit_probs.size()) != num_exits) {
      throw Error(Errc::kStrategyMismatch,
                  std::to_string(per_step->exit_probs.size()) +
                      " step probabilities for " + std::to_string(num_exits) +
                      " intersections");
    }
  } else if (const auto* q = std::get_if<Quantum>(&strategy)) {
    if (q->state.num_qubits() != num_exits) {
      throw Error(Errc::kStrategyMismatch,
                  std::to_string(q->state.num_qubits()) + " qubits for " +
                      std::to_string(num_exits) + " intersections");
    }
  }
}

/// Probability of exiting at intersection i (1-based) given the driver is
/// there, for a problem with k destinations.
inline double exit_probability(const Strategy& strategy, int i, int k) {
  if (i < 1 || i > k - 1) {
    throw Error(Errc::kBadIndex, "intersection " + std::to_string(i) +
                                     " with " + std::to_string(k) +
                                     " destinations");
  }
  return std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Stationary>) {
          return s.alpha;
        } else if constexpr (std::is_same_v<T, Counting>) {
          return 1.0 / static_cast<double>(k - i + 1);
        } else if constexpr (std::is_same_v<T, PerStep>) {
          if (static_cast<int>(s.exit_probs.size()) != k - 1) {
            throw Error(Errc::kStrategyMismatch,
                        "step probability count differs from exit count");
          }
          return s.exit_probs[i - 1];
        } else {
          throw Error(Errc::kNoStepwiseMarginal,
                      "quantum exit decisions depend on earlier outcomes");
        }
      },
      strategy);
}

}  // namespace amdriver

#endif  // AMDRIVER_CORE_MODEL_HPP
