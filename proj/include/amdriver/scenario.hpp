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

#ifndef AMDRIVER_SCENARIO_HPP
#define AMDRIVER_SCENARIO_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "amdriver/core_model.hpp"
#include "amdriver/error.hpp"
#include "amdriver/quantum_state.hpp"

// Scenario documents are JSON:
//
//   {
//     "problem": {"kind": "drive", "exit_payoffs": [0, 4], "terminal_payoff": 1},
//     "strategies": [
//       {"name": "pr", "kind": "stationary", "alpha": 0.3333333333333333},
//       {"name": "count", "kind": "counting"},
//       {"name": "steps", "kind": "per_step", "exit_probs": [0.5, 1]},
//       {"name": "bell", "kind": "quantum", "normalize": true,
//        "state": [{"bits": "01", "re": 1}, {"bits": "10", "re": 1}]}
//     ],
//     "options": {"trials": 1000000, "seed": 1, "grid_step": 0.01}
//   }
//
// A selection problem is {"kind": "selection", "destination_payoffs": [...]}
// and accepts only stationary and counting strategies. "im" and "normalize"
// default to 0 and false; "options" and each of its keys are optional.
// Unknown keys are rejected.

namespace amdriver {

struct NamedStrategy {
  std::string name;
  Strategy strategy;

  friend bool operator==(const NamedStrategy&, const NamedStrategy&) = default;
};

struct ScenarioOptions {
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 20170704;
  double grid_step = 0.01;

  friend bool operator==(const ScenarioOptions&,
                         const ScenarioOptions&) = default;
};

using ScenarioProblem = std::variant<DriveProblem, SelectionProblem>;

struct Scenario {
  ScenarioProblem problem;
  std::vector<NamedStrategy> strategies;
  ScenarioOptions options;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Scenario validation failure. `field()` is a JSON path such as
/// "strategies[2].state[0].bits"; syntax errors report "line L, column C".
class ScenarioError : public Error {
 public:
  ScenarioError(Errc code, std::string field, const std::string& detail)
      : Error(code, field + ": " + detail), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

struct ParseOptions {
  /// Treat every quantum state as if it carried "normalize": true.
  bool normalize_states = false;
};

namespace detail {

using nlohmann::json;

inline void check_keys(const json& obj, const std::string& path,
                       std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) {
    throw ScenarioError(Errc::kSchema, path, "expected an object");
  }
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) throw ScenarioError(Errc::kSchema, path, "unknown key '" + key + "'");
  }
}

inline const json& require(const json& obj, const std::string& path,
                           const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ScenarioError(Errc::kSchema, path, std::string("missing '") + key + "'");
  }
  return *it;
}

inline double number_at(const json& v, const std::string& path) {
  if (!v.is_number()) {
    throw ScenarioError(Errc::kSchema, path, "expected a number");
  }
  return v.get<double>();
}

inline std::uint64_t unsigned_at(const json& v, const std::string& path) {
  if (!v.is_number_unsigned()) {
    throw ScenarioError(Errc::kSchema, path, "expected a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

inline std::vector<double> numbers_at(const json& v, const std::string& path) {
  if (!v.is_array()) throw ScenarioError(Errc::kSchema, path, "expected a list");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(number_at(v[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

// Re-throws library validation errors with the offending field attached.
template <typename F>
auto at_field(const std::string& path, F&& build) {
  try {
    return build();
  } catch (const ScenarioError&) {
    throw;
  } catch (const Error& e) {
    std::string detail = e.what();
    const auto prefix = std::string(errc_name(e.code()));
    if (detail.rfind(prefix, 0) == 0) detail.erase(0, prefix.size());
    if (detail.rfind(": ", 0) == 0) detail.erase(0, 2);
    throw ScenarioError(e.code(), path, detail.empty() ? prefix : detail);
  }
}

inline ScenarioProblem parse_problem(const json& p) {
  const std::string path = "problem";
  if (!p.is_object()) throw ScenarioError(Errc::kSchema, path, "expected an object");
  const json& kind = require(p, path, "kind");
  if (kind == "drive") {
    check_keys(p, path, {"kind", "exit_payoffs", "terminal_payoff"});
    auto exits = numbers_at(require(p, path, "exit_payoffs"), path + ".exit_payoffs");
    const double terminal =
        number_at(require(p, path, "terminal_payoff"), path + ".terminal_payoff");
    return at_field(path + ".exit_payoffs", [&] {
      return ScenarioProblem(make_drive_problem(std::move(exits), terminal));
    });
  }
  if (kind == "selection") {
    check_keys(p, path, {"kind", "destination_payoffs"});
    auto payoffs = numbers_at(require(p, path, "destination_payoffs"),
                              path + ".destination_payoffs");
    return at_field(path + ".destination_payoffs", [&] {
      return ScenarioProblem(SelectionProblem::create(std::move(payoffs)));
    });
  }
  throw ScenarioError(Errc::kSchema, path + ".kind",
                      "expected \"drive\" or \"selection\"");
}

inline StateVector parse_state(const json& s, const std::string& path,
                               bool normalize) {
  const std::string state_path = path + ".state";
  const json& terms_json = require(s, path, "state");
  if (!terms_json.is_array()) {
    throw ScenarioError(Errc::kSchema, state_path, "expected a list of terms");
  }
  std::vector<BasisTerm> terms;
  for (std::size_t i = 0; i < terms_json.size(); ++i) {
    const std::string tp = state_path + "[" + std::to_string(i) + "]";
    const json& t = terms_json[i];
    check_keys(t, tp, {"bits", "re", "im"});
    const json& bits = require(t, tp, "bits");
    if (!bits.is_string()) {
      throw ScenarioError(Errc::kSchema, tp + ".bits", "expected a string");
    }
    const double re = number_at(require(t, tp, "re"), tp + ".re");
    const double im = t.contains("im") ? number_at(t["im"], tp + ".im") : 0.0;
    terms.push_back({bits.get<std::string>(), {re, im}});
  }
  return at_field(state_path, [&] { return build_state(terms, normalize); });
}

inline Strategy parse_strategy(const json& s, const std::string& path,
                               bool force_normalize) {
  const json& kind = require(s, path, "kind");
  if (kind == "stationary") {
    check_keys(s, path, {"name", "kind", "alpha"});
    const double alpha = number_at(require(s, path, "alpha"), path + ".alpha");
    return at_field(path + ".alpha", [&] { return make_stationary(alpha); });
  }
  if (kind == "counting") {
    check_keys(s, path, {"name", "kind"});
    return Counting{};
  }
  if (kind == "per_step") {
    check_keys(s, path, {"name", "kind", "exit_probs"});
    auto probs = numbers_at(require(s, path, "exit_probs"), path + ".exit_probs");
    return at_field(path + ".exit_probs",
                    [&] { return make_per_step(std::move(probs)); });
  }
  if (kind == "quantum") {
    check_keys(s, path, {"name", "kind", "state", "normalize"});
    bool normalize = force_normalize;
    if (s.contains("normalize")) {
      if (!s["normalize"].is_boolean()) {
        throw ScenarioError(Errc::kSchema, path + ".normalize", "expected a boolean");
      }
      normalize = normalize || s["normalize"].get<bool>();
    }
    return Quantum{parse_state(s, path, normalize)};
  }
  throw ScenarioError(Errc::kSchema, path + ".kind",
                      "expected stationary, counting, per_step or quantum");
}

inline ScenarioOptions parse_options(const json& o) {
  const std::string path = "options";
  check_keys(o, path, {"trials", "seed", "grid_step"});
  ScenarioOptions opts;
  if (o.contains("trials")) opts.trials = unsigned_at(o["trials"], path + ".trials");
  if (o.contains("seed")) opts.seed = unsigned_at(o["seed"], path + ".seed");
  if (o.contains("grid_step")) {
    opts.grid_step = number_at(o["grid_step"], path + ".grid_step");
  }
  if (opts.trials == 0) throw ScenarioError(Errc::kNoTrials, path + ".trials", "must be >= 1");
  if (!(opts.grid_step > 0.0 && opts.grid_step <= 1.0)) {
    throw ScenarioError(Errc::kSchema, path + ".grid_step", "must lie in (0, 1]");
  }
  return opts;
}

inline void check_strategy_fits(const ScenarioProblem& problem,
                                const Strategy& strategy,
                                const std::string& path) {
  if (const auto* drive = std::get_if<DriveProblem>(&problem)) {
    at_field(path, [&] {
      check_dimensions(strategy, drive->num_exits());
      return 0;
    });
  } else if (std::holds_alternative<PerStep>(strategy) || is_quantum(strategy)) {
    throw ScenarioError(Errc::kStrategyMismatch, path,
                        "selection problems take stationary or counting strategies");
  }
}

}  // namespace detail

/// Parses and fully validates a scenario document.
inline Scenario parse_scenario(std::string_view text,
                               const ParseOptions& parse_options = {}) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ScenarioError(Errc::kSchema,
                        "line " + std::to_string(line) + ", column " + std::to_string(column),
                        "malformed JSON");
  }

  detail::check_keys(doc, "(document)", {"problem", "strategies", "options"});
  Scenario sc{detail::parse_problem(detail::require(doc, "(document)", "problem")), {}, {}};

  const json& list = detail::require(doc, "(document)", "strategies");
  if (!list.is_array() || list.empty()) {
    throw ScenarioError(Errc::kSchema, "strategies", "expected a non-empty list");
  }
  std::set<std::string> names;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string path = "strategies[" + std::to_string(i) + "]";
    const json& s = list[i];
    if (!s.is_object()) throw ScenarioError(Errc::kSchema, path, "expected an object");
    const json& name = detail::require(s, path, "name");
    if (!name.is_string() || name.get<std::string>().empty()) {
      throw ScenarioError(Errc::kSchema, path + ".name", "expected a non-empty string");
    }
    if (!names.insert(name.get<std::string>()).second) {
      throw ScenarioError(Errc::kSchema, path + ".name",
                          "duplicate strategy name '" + name.get<std::string>() + "'");
    }
    Strategy strategy = detail::parse_strategy(s, path, parse_options.normalize_states);
    detail::check_strategy_fits(sc.problem, strategy, path);
    sc.strategies.push_back({name.get<std::string>(), std::move(strategy)});
  }

  if (doc.contains("options")) sc.options = detail::parse_options(doc["options"]);
  return sc;
}

/// Canonical JSON form of a scenario; parse_scenario(emit_scenario(s)) == s.
inline std::string emit_scenario(const Scenario& sc) {
  using nlohmann::json;
  json doc;
  if (const auto* drive = std::get_if<DriveProblem>(&sc.problem)) {
    const auto exits = drive->exit_payoffs();
    doc["problem"] = {{"kind", "drive"},
                      {"exit_payoffs", std::vector<double>(exits.begin(), exits.end())},
                      {"terminal_payoff", drive->terminal_payoff()}};
  } else {
    const auto& sel = std::get<SelectionProblem>(sc.problem);
    const auto payoffs = sel.destination_payoffs();
    doc["problem"] = {{"kind", "selection"},
                      {"destination_payoffs",
                       std::vector<double>(payoffs.begin(), payoffs.end())}};
  }
  json list = json::array();
  for (const auto& [name, strategy] : sc.strategies) {
    json s = {{"name", name}, {"kind", strategy_kind(strategy)}};
    if (const auto* st = std::get_if<Stationary>(&strategy)) {
      s["alpha"] = st->alpha;
    } else if (const auto* ps = std::get_if<PerStep>(&strategy)) {
      s["exit_probs"] = ps->exit_probs;
    } else if (const auto* q = std::get_if<Quantum>(&strategy)) {
      json terms = json::array();
      for (const auto& t : q->state.terms()) {
        terms.push_back({{"bits", t.bits},
                         {"re", t.amplitude.real()},
                         {"im", t.amplitude.imag()}});
      }
      s["state"] = std::move(terms);
    }
    list.push_back(std::move(s));
  }
  doc["strategies"] = std::move(list);
  doc["options"] = {{"trials", sc.options.trials},
                    {"seed", sc.options.seed},
                    {"grid_step", sc.options.grid_step}};
  return doc.dump(2) + "\n";
}

/// Built-in scenarios: "example1", "example2", "selection-example".
inline std::optional<Scenario> preset_scenario(std::string_view name) {
  const double r = 1.0 / std::sqrt(2.0);
  if (name == "example1") {
    return Scenario{make_drive_problem({0.0, 4.0}, 1.0),
                    {{"stationary-1/3", make_stationary(1.0 / 3.0)},
                     {"counting", Counting{}},
                     {"bell-01+10", Quantum{build_state({{"01", r}, {"10", r}})}}},
                    {}};
  }
  if (name == "example2") {
    return Scenario{make_drive_problem({0.0, 4.0, 1.0}, 1.0),
                    {{"stationary-1/3", make_stationary(1.0 / 3.0)},
                     {"counting", Counting{}},
                     {"entangled-001+110",
                      Quantum{build_state({{"001", r}, {"110", r}})}},
                     {"basis-110", Quantum{build_state({{"110", 1.0}})}}},
                    {}};
  }
  if (name == "selection-example") {
    return Scenario{SelectionProblem::create({0.0, 4.0, 1.0, 1.0}),
                    {{"stationary-1/2", make_stationary(0.5)},
                     {"counting", Counting{}}},
                    {}};
  }
  return std::nullopt;
}

inline constexpr std::string_view kPresetNames[] = {"example1", "example2",
                                                    "selection-example"};

}  // namespace amdriver

#endif  // AMDRIVER_SCENARIO_HPP
