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

// Evaluates the classic two-exit highway with the library API.

#include <cmath>
#include <iostream>

#include "amdriver/amdriver.hpp"

int main() {
  using namespace amdriver;

  const DriveProblem highway = make_drive_problem({0, 4}, 1);

  const OptimizationResult best = optimize_stationary(highway);
  std::cout << "best stationary alpha " << format_value(best.alpha_star) << " earns "
            << format_value(best.payoff_star) << "\n";

  std::cout << "counting strategy earns "
            << format_value(expected_payoff(highway, Counting{})) << "\n";

  const double r = 1.0 / std::sqrt(2.0);
  const StateVector bell = build_state({{"01", r}, {"10", r}});
  std::cout << "entangled pair earns "
            << format_value(quantum_expected_payoff(highway, bell)) << "\n";

  const SimulationReport mc =
      estimate_payoff(highway, Quantum{bell}, 1'000'000, /*seed=*/7, /*threads=*/0);
  std::cout << "simulated: " << format_number(mc.mean_payoff) << " +/- "
            << format_number(mc.std_error) << "\n";
  return 0;
}
