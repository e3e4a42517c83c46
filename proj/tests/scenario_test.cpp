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

#include "amdriver/scenario.hpp"

#include <random>
#include <string>

#include "gtest/gtest.h"

namespace amdriver {
namespace {

constexpr const char* kExample1 = R"({
  "problem": {"kind": "drive", "exit_payoffs": [0, 4], "terminal_payoff": 1},
  "strategies": [
    {"name": "pr", "kind": "stationary", "alpha": 0.3333333333333333},
    {"name": "count", "kind": "counting"},
    {"name": "bell", "kind": "quantum",
     "state": [{"bits": "01", "re": 0.7071067811865476},
               {"bits": "10", "re": 0.7071067811865476, "im": 0}]}
  ]
})";

ScenarioError ParseFailure(const std::string& text, ParseOptions opts = {}) {
  try {
    parse_scenario(text, opts);
  } catch (const ScenarioError& e) {
    return e;
  }
  ADD_FAILURE() << "parsed without error:\n" << text;
  return ScenarioError(Errc::kSchema, "", "");
}

TEST(ParseScenarioTest, Example1) {
  const auto sc = parse_scenario(kExample1);
  EXPECT_EQ(std::get<DriveProblem>(sc.problem), make_drive_problem({0, 4}, 1));
  ASSERT_EQ(sc.strategies.size(), 3u);
  EXPECT_EQ(sc.strategies[0].name, "pr");
  EXPECT_NEAR(std::get<Stationary>(sc.strategies[0].strategy).alpha, 1.0 / 3, 1e-16);
  EXPECT_TRUE(std::holds_alternative<Counting>(sc.strategies[1].strategy));
  EXPECT_EQ(std::get<Quantum>(sc.strategies[2].strategy).state.num_qubits(), 2);
  EXPECT_EQ(sc.options, ScenarioOptions{});
}

TEST(ParseScenarioTest, OptionsAndSelection) {
  const auto sc = parse_scenario(R"({
    "problem": {"kind": "selection", "destination_payoffs": [0, 4, 1, 1]},
    "strategies": [{"name": "c", "kind": "counting"}],
    "options": {"trials": 500, "seed": 18446744073709551615, "grid_step": 0.25}
  })");
  EXPECT_EQ(std::get<SelectionProblem>(sc.problem).num_destinations(), 4);
  EXPECT_EQ(sc.options.trials, 500u);
  EXPECT_EQ(sc.options.seed, 18446744073709551615ull);
  EXPECT_EQ(sc.options.grid_step, 0.25);
}

TEST(ParseScenarioTest, DegenerateProblem) {
  const auto e = ParseFailure(R"({
    "problem": {"kind": "drive", "exit_payoffs": [], "terminal_payoff": 1},
    "strategies": [{"name": "c", "kind": "counting"}]})");
  EXPECT_EQ(e.code(), Errc::kDegenerateProblem);
  EXPECT_EQ(e.field(), "problem.exit_payoffs");
  EXPECT_EQ(std::string(e.what()).rfind("degenerate problem", 0), 0u);
}

TEST(ParseScenarioTest, QubitCountMismatch) {
  const auto e = ParseFailure(R"({
    "problem": {"kind": "drive", "exit_payoffs": [0, 4], "terminal_payoff": 1},
    "strategies": [{"name": "q", "kind": "quantum",
                    "state": [{"bits": "110", "re": 1}]}]})");
  EXPECT_EQ(e.code(), Errc::kStrategyMismatch);
  EXPECT_EQ(e.field(), "strategies[0]");
}

TEST(ParseScenarioTest, UnnormalizedState) {
  const std::string doc = R"({
    "problem": {"kind": "drive", "exit_payoffs": [0], "terminal_payoff": 1},
    "strategies": [{"name": "q", "kind": "quantum",
                    "state": [{"bits": "0", "re": 1}, {"bits": "1", "re": 1}]}]})";
  const auto e = ParseFailure(doc);
  EXPECT_EQ(e.code(), Errc::kNotNormalized);
  EXPECT_EQ(e.field(), "strategies[0].state");

  const auto sc = parse_scenario(doc, {.normalize_states = true});
  EXPECT_NEAR(std::abs(std::get<Quantum>(sc.strategies[0].strategy).state.amplitude(0)),
              1.0 / std::sqrt(2.0), 1e-15);
}

TEST(ParseScenarioTest, SchemaDiagnostics) {
  struct Bad {
    const char* doc;
    Errc code;
    const char* field;
  };
  const Bad cases[] = {
      {R"({"problem": {"kind": "drive", "exit_payoffs": [0], "terminal_payoff": 1},
           "strategies": []})",
       Errc::kSchema, "strategies"},
      {R"({"problem": {"kind": "drive", "exit_payoffs": [0], "terminal_payoff": 1},
           "strategies": [{"name": "a", "kind": "counting"}, {"name": "a", "kind": "counting"}]})",
       Errc::kSchema, "strategies[1].name"},
      {R"({"problem": {"kind": "drive", "exit_payoffs": [0, "x"], "terminal_payoff": 1},
           "strategies": [{"name": "a", "kind": "counting"}]})",
       Errc::kSchema, "problem.exit_payoffs[1]"},
      {R"({"problem": {"kind": "maze"}, "strategies": []})", Errc::kSchema, "problem.kind"},
      {R"({"problem": {"kind": "drive", "exit_payoffs": [0], "terminal_payoff": 1},
           "strategies": [{"name": "a", "kind": "stationary", "alpha": 2}]})",
       Errc::kInvalidProbability, "strategies[0].alpha"},
      {R"({"problem": {"kind": "drive", "exit_payoffs": [0], "terminal_payoff": 1},
           "strategies": [{"name": "a", "kind": "per_step", "exit_probs": [0.5, 0.5]}]})",
       Errc::kStrategyMismatch, "strategies[0]"},
      {R"({"problem": {"kind": "drive", "exit_payoffs": [0], "terminal_payoff": 1},
           "strategies": [{"name": "a", "kind": "counting", "alpha": 0.5}]})",
       Errc::kSchema, "strategies[0]"},
      {R"({"problem": {"kind": "selection", "destination_payoffs": [1, 2, 3]},
           "strategies": [{"name": "a", "kind": "per_step", "exit_probs": [0.5]}]})",
       Errc::kStrategyMismatch, "strategies[0]"},
      {R"({"problem": {"kind": "drive", "exit_payoffs": [0], "terminal_payoff": 1},
           "strategies": [{"name": "a", "kind": "counting"}], "options": {"trials": -4}})",
       Errc::kSchema, "options.trials"},
      {R"({"problem": {"kind": "drive", "exit_payoffs": [0, 1], "terminal_payoff": 1},
           "strategies": [{"name": "q", "kind": "quantum",
             "state": [{"bits": "01", "re": 0.6}, {"bits": "01", "re": 0.8}]}]})",
       Errc::kDuplicateTerm, "strategies[0].state"},
      {R"({"problem": {"kind": "drive", "exit_payoffs": [0, 1], "terminal_payoff": 1},
           "strategies": [{"name": "q", "kind": "quantum",
             "state": [{"bits": "01", "re": 0.6}, {"bits": "1", "re": 0.8}]}]})",
       Errc::kRaggedTerms, "strategies[0].state"},
  };
  for (const auto& c : cases) {
    const auto e = ParseFailure(c.doc);
    EXPECT_EQ(e.code(), c.code) << e.what();
    EXPECT_EQ(e.field(), c.field) << e.what();
  }
}

TEST(ParseScenarioTest, SyntaxErrorReportsLine) {
  const auto e = ParseFailure("{\n  \"problem\": {\n    \"kind\": drive\n}");
  EXPECT_EQ(e.code(), Errc::kSchema);
  EXPECT_EQ(e.field().rfind("line 3,", 0), 0u) << e.field();
}

TEST(PresetTest, AllPresetsRoundTrip) {
  for (auto name : kPresetNames) {
    const auto sc = preset_scenario(name);
    ASSERT_TRUE(sc.has_value()) << name;
    EXPECT_EQ(parse_scenario(emit_scenario(*sc)), *sc) << name;
  }
  EXPECT_FALSE(preset_scenario("example3").has_value());
}

// Random scenarios survive emit -> parse unchanged.
TEST(RoundTripTest, RandomScenarios) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-100, 100);
  std::uniform_real_distribution<double> prob(0, 1);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + trial % 4;
    std::vector<double> exits(m);
    for (auto& v : exits) v = u(rng);
    Scenario sc{make_drive_problem(exits, u(rng)), {}, {}};
    sc.options = {1 + rng() % 100000, rng(), 0.001 + 0.999 * prob(rng)};
    sc.strategies.push_back({"s", make_stationary(prob(rng))});
    sc.strategies.push_back({"c", Counting{}});
    std::vector<double> steps(m);
    for (auto& p : steps) p = prob(rng);
    sc.strategies.push_back({"p, \"quoted\"", make_per_step(steps)});
    std::vector<BasisTerm> terms;
    for (std::size_t b = 0; b < (std::size_t{1} << m); ++b) {
      if (rng() % 3 == 0) continue;
      terms.push_back({StateVector::index_to_bits(b, m), {g(rng), g(rng)}});
    }
    if (terms.empty()) terms.push_back({std::string(m, '1'), {1.0, 0.0}});
    sc.strategies.push_back({"q", Quantum{build_state(terms, true)}});
    ASSERT_EQ(parse_scenario(emit_scenario(sc)), sc) << emit_scenario(sc);
  }
}

}  // namespace
}  // namespace amdriver
