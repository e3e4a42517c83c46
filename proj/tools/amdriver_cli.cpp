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

// Command-line front end. Exit codes: 0 success, 1 usage error, 2 scenario
// validation error, 3 runtime error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "amdriver/report.hpp"
#include "amdriver/scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitRuntime = 3;

struct RuntimeFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RuntimeFailure("cannot open scenario file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluate and optimize absent-minded driver strategies."};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string scenario_path;
  std::string preset;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double grid_step = 0.0;
  std::string csv_path;
  bool normalize_states = false;
  unsigned threads = 0;

  auto* scenario_opt =
      app.add_option("--scenario", scenario_path, "Scenario JSON file");
  auto* preset_opt = app.add_option("--preset", preset,
                                    "Built-in scenario: example1, example2, "
                                    "selection-example (default example1)");
  scenario_opt->excludes(preset_opt);
  auto* trials_opt = app.add_option("--trials", trials, "Monte Carlo trials")
                         ->check(CLI::PositiveNumber);
  auto* seed_opt = app.add_option("--seed", seed, "Monte Carlo seed");
  auto* step_opt = app.add_option("--grid-step", grid_step, "Alpha grid step for curve")
                       ->check(CLI::Range(1e-9, 1.0));
  app.add_option("--csv", csv_path, "Also write the result table as CSV");
  app.add_flag("--normalize-states", normalize_states,
               "Rescale quantum states in the scenario to unit norm");
  app.add_option("--threads", threads, "Simulation threads (0 = all cores)");

  app.add_subcommand("eval", "Destination distributions and expected payoffs");
  app.add_subcommand("optimize", "Best stationary exit probability");
  app.add_subcommand("select", "Two-round selection breakdown");
  app.add_subcommand("simulate", "Monte Carlo check of every strategy");
  app.add_subcommand("curve", "CSV of (alpha, payoff) over a grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string command_name = app.get_subcommands().front()->get_name();
  const auto command = amdriver::parse_command(command_name);

  std::optional<amdriver::Scenario> scenario;
  try {
    if (!scenario_path.empty()) {
      scenario = amdriver::parse_scenario(read_file(scenario_path),
                                          {.normalize_states = normalize_states});
    } else {
      const std::string name = preset.empty() ? "example1" : preset;
      auto found = amdriver::preset_scenario(name);
      if (!found) {
        std::cerr << "error: unknown preset '" << name << "'\n";
        return kExitUsage;
      }
      scenario = std::move(found);
    }
  } catch (const RuntimeFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const amdriver::ScenarioError& e) {
    std::cerr << "error: invalid scenario: " << e.what() << "\n";
    return kExitInvalid;
  }

  if (*trials_opt) scenario->options.trials = trials;
  if (*seed_opt) scenario->options.seed = seed;
  if (*step_opt) scenario->options.grid_step = grid_step;

  amdriver::CommandOutput out;
  try {
    out = amdriver::run_command(*command, *scenario, threads);
  } catch (const amdriver::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == amdriver::Errc::kCommandMismatch ? kExitInvalid : kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }

  std::cout << out.text << std::flush;
  if (!csv_path.empty() && out.csv) {
    std::ofstream csv(csv_path, std::ios::binary);
    csv << amdriver::emit_csv(*out.csv);
    if (!csv) {
      std::cerr << "error: cannot write '" << csv_path << "'\n";
      return kExitRuntime;
    }
  }
  return kExitOk;
}
