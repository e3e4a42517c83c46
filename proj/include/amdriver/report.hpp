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

#ifndef AMDRIVER_REPORT_HPP
#define AMDRIVER_REPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "amdriver/alpha_optimizer.hpp"
#include "amdriver/classical_eval.hpp"
#include "amdriver/error.hpp"
#include "amdriver/monte_carlo.hpp"
#include "amdriver/polynomial.hpp"
#include "amdriver/quantum_eval.hpp"
#include "amdriver/scenario.hpp"
#include "amdriver/selection_rounds.hpp"

namespace amdriver {

// ---------------------------------------------------------------------------
// Number formatting

/// 12 significant digits, shortest form ("0.25", "1", "1.33333333333").
inline std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

struct Fraction {
  long long num;
  long long den;
};

/// Smallest-denominator p/q (q <= 64) within 1e-12 of x.
inline std::optional<Fraction> as_fraction(double x) {
  if (!std::isfinite(x) || std::abs(x) > 1e12) return std::nullopt;
  for (long long q = 1; q <= 64; ++q) {
    const double p = std::round(x * static_cast<double>(q));
    if (std::abs(x - p / static_cast<double>(q)) <= 1e-12) {
      return Fraction{static_cast<long long>(p), q};
    }
  }
  return std::nullopt;
}

/// "4/3" or "2" when x is a small rational, otherwise format_number(x).
inline std::string format_compact(double x) {
  if (auto f = as_fraction(x)) {
    return f->den == 1 ? std::to_string(f->num)
                       : std::to_string(f->num) + "/" + std::to_string(f->den);
  }
  return format_number(x);
}

/// "1.33333333333 (4/3)"; integers and irrationals get no suffix.
inline std::string format_value(double x) {
  std::string s = format_number(x);
  if (auto f = as_fraction(x); f && f->den != 1) {
    s += " (" + std::to_string(f->num) + "/" + std::to_string(f->den) + ")";
  }
  return s;
}

/// "5/2 + 3/2 a - 3/2 a^2" in increasing powers of alpha.
inline std::string format_polynomial(const PayoffPolynomial& p) {
  std::string out;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double c = p.coeff(j);
    if (c == 0.0) continue;
    const bool negative = c < 0.0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const double mag = std::abs(c);
    const bool unit = mag == 1.0 && j > 0;
    if (!unit) out += format_compact(mag);
    if (j > 0) {
      if (!unit) out += " ";
      out += "a";
      if (j > 1) out += "^" + std::to_string(j);
    }
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// CSV

using CsvCell = std::variant<std::string, double>;

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<CsvCell>> rows;
};

namespace detail {

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

/// Header line, then one line per row; numbers use format_number and every
/// line ends in '\n'.
inline std::string emit_csv(const CsvTable& table) {
  std::string out;
  auto line = [&out](const auto& cells, auto&& to_text) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += detail::csv_field(to_text(cells[i]));
    }
    out += '\n';
  };
  line(table.header, [](const std::string& s) { return s; });
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size()) {
      throw std::invalid_argument("CSV row width differs from header");
    }
    line(row, [](const CsvCell& c) {
      return std::holds_alternative<double>(c) ? format_number(std::get<double>(c))
                                               : std::get<std::string>(c);
    });
  }
  return out;
}

// ---------------------------------------------------------------------------
// Commands

enum class Command { kEval, kOptimize, kSelect, kSimulate, kCurve };

inline std::optional<Command> parse_command(std::string_view name) {
  if (name == "eval") return Command::kEval;
  if (name == "optimize") return Command::kOptimize;
  if (name == "select") return Command::kSelect;
  if (name == "simulate") return Command::kSimulate;
  if (name == "curve") return Command::kCurve;
  return std::nullopt;
}

struct CommandOutput {
  std::string text;
  std::optional<CsvTable> csv;
};

namespace detail {

// Left-aligned columns separated by two spaces.
inline std::string text_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

inline std::string format_list(std::span<const double> xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += format_compact(xs[i]);
  }
  return s + "]";
}

inline std::string describe(const ScenarioProblem& problem) {
  if (const auto* d = std::get_if<DriveProblem>(&problem)) {
    return "drive problem: exits " + format_list(d->exit_payoffs()) + ", terminal " +
           format_compact(d->terminal_payoff()) + ", k = " +
           std::to_string(d->num_destinations()) + "\n";
  }
  const auto& s = std::get<SelectionProblem>(problem);
  return "selection problem: 2 of " + std::to_string(s.num_destinations()) +
         ", payoffs " + format_list(s.destination_payoffs()) + "\n";
}

inline const DriveProblem& require_drive(const Scenario& sc, std::string_view cmd) {
  if (const auto* d = std::get_if<DriveProblem>(&sc.problem)) return *d;
  throw Error(Errc::kCommandMismatch,
              std::string(cmd) + " needs a drive problem; use select or curve");
}

inline CommandOutput run_eval(const Scenario& sc) {
  const DriveProblem& problem = require_drive(sc, "eval");
  const int k = problem.num_destinations();
  CsvTable csv{{"strategy", "kind", "payoff"}, {}};
  for (int i = 1; i <= k; ++i) csv.header.push_back("p" + std::to_string(i));

  std::vector<std::vector<std::string>> rows = {
      {"strategy", "kind", "payoff", "distribution"}};
  for (const auto& [name, strategy] : sc.strategies) {
    const auto dist = strategy_distribution(problem, strategy);
    const double payoff = dist.dot(problem.destination_payoffs());
    rows.push_back({name, strategy_kind(strategy), format_value(payoff),
                    format_list(dist.probs)});
    std::vector<CsvCell> row = {name, std::string(strategy_kind(strategy)), payoff};
    for (double p : dist.probs) row.emplace_back(p);
    csv.rows.push_back(std::move(row));
  }
  return {describe(sc.problem) + text_table(rows), std::move(csv)};
}

inline std::string describe_result(const OptimizationResult& r) {
  return "alpha* = " + format_value(r.alpha_star) +
         ", payoff* = " + format_value(r.payoff_star) + " [" +
         std::string(method_name(r.method)) + "]";
}

inline CommandOutput run_optimize(const Scenario& sc) {
  CsvTable csv{{"family", "alpha_star", "payoff_star", "method"}, {}};
  std::string text = describe(sc.problem);
  auto add = [&](const std::string& family, const OptimizationResult& r) {
    text += family + ": " + describe_result(r) + "\n";
    csv.rows.push_back({family, r.alpha_star, r.payoff_star,
                        std::string(method_name(r.method))});
  };

  if (const auto* sel = std::get_if<SelectionProblem>(&sc.problem)) {
    const auto poly = two_round_average_polynomial(*sel);
    text += "two-round average payoff: " + format_polynomial(poly) + "\n";
    add("two-round stationary", maximize_polynomial(poly));
    add("two-round stationary (numeric check)",
        numeric_maximize([&](double a) { return poly(a); }, 1e-10));
    const double counting = two_round_counting_total(*sel);
    text += "two-round counting (no free parameter): payoff = " +
            format_value(counting) + "\n";
    return {text, std::move(csv)};
  }

  const auto& problem = std::get<DriveProblem>(sc.problem);
  const auto poly = stationary_payoff_polynomial(problem);
  text += "stationary payoff: " + format_polynomial(poly) + "\n";
  add("stationary", maximize_polynomial(poly));
  add("stationary (numeric check)",
      numeric_maximize([&](double a) { return poly(a); }, 1e-10));
  for (const auto& [name, strategy] : sc.strategies) {
    if (std::holds_alternative<Stationary>(strategy)) continue;
    text += name + " (" + strategy_kind(strategy) +
            ", no free parameter): payoff = " +
            format_value(strategy_payoff(problem, strategy)) + "\n";
  }
  return {text, std::move(csv)};
}

inline CommandOutput run_select(const Scenario& sc) {
  const auto* sel = std::get_if<SelectionProblem>(&sc.problem);
  if (sel == nullptr) {
    throw Error(Errc::kCommandMismatch, "select needs a selection problem");
  }
  std::string text = describe(sc.problem);
  CsvTable csv{{"quantity", "value"}, {}};

  std::vector<std::vector<std::string>> rows = {
      {"first", "payoff", "second round (stationary)", "total",
       "counting second", "counting total"}};
  const auto stationary = two_round_breakdown(*sel);
  const auto counting = two_round_counting_breakdown(*sel);
  for (std::size_t i = 0; i < stationary.size(); ++i) {
    const auto& s = stationary[i];
    const auto& c = counting[i];
    rows.push_back({std::to_string(s.first_choice), format_compact(s.first_payoff),
                    format_polynomial(s.second_round_polynomial),
                    format_polynomial(s.total_polynomial),
                    format_compact(c.first_payoff) + " + " + format_compact(c.second_payoff),
                    format_compact(c.first_payoff + c.second_payoff)});
    csv.rows.push_back({"counting_total_choice_" + std::to_string(c.first_choice),
                        c.first_payoff + c.second_payoff});
  }
  text += text_table(rows);

  const auto avg = two_round_average_polynomial(*sel);
  const auto best = maximize_polynomial(avg);
  const double counting_total = two_round_counting_total(*sel);
  const double improvement = counting_total - best.payoff_star;
  text += "average stationary payoff: " + format_polynomial(avg) + "\n";
  text += "stationary optimum: " + describe_result(best) + "\n";
  text += "counting total: " + format_value(counting_total) + "\n";
  text += "improvement (counting - stationary): " + format_value(improvement) + "\n";

  for (std::size_t j = 0; j < avg.size(); ++j) {
    csv.rows.push_back({"average_coeff_" + std::to_string(j), avg.coeff(j)});
  }
  csv.rows.push_back({"alpha_star", best.alpha_star});
  csv.rows.push_back({"payoff_star", best.payoff_star});
  csv.rows.push_back({"counting_total", counting_total});
  csv.rows.push_back({"improvement", improvement});
  return {text, std::move(csv)};
}

inline CommandOutput run_simulate(const Scenario& sc, unsigned threads) {
  const DriveProblem& problem = require_drive(sc, "simulate");
  const int k = problem.num_destinations();
  CsvTable csv{{"strategy", "trials", "seed", "mean", "std_error", "analytic", "tv"}, {}};
  for (int i = 1; i <= k; ++i) csv.header.push_back("p" + std::to_string(i));

  std::vector<std::vector<std::string>> rows = {
      {"strategy", "mean", "std_error", "analytic", "z", "tv", "empirical distribution"}};
  for (const auto& [name, strategy] : sc.strategies) {
    const auto report =
        estimate_payoff(problem, strategy, sc.options.trials, sc.options.seed, threads);
    const auto exact = strategy_distribution(problem, strategy);
    const double analytic = exact.dot(problem.destination_payoffs());
    const double tv = total_variation(report.empirical_distribution, exact);
    const double diff = report.mean_payoff - analytic;
    const std::string z = report.std_error > 0.0 ? format_number(diff / report.std_error)
                                                 : (diff == 0.0 ? "0" : "inf");
    std::string dist = "[";
    for (std::size_t i = 0; i < report.empirical_distribution.size(); ++i) {
      if (i) dist += ", ";
      dist += format_number(report.empirical_distribution[i]);
    }
    rows.push_back({name, format_number(report.mean_payoff),
                    format_number(report.std_error), format_value(analytic), z,
                    format_number(tv), dist + "]"});
    std::vector<CsvCell> row = {name,
                                std::to_string(report.trials),
                                std::to_string(report.seed),
                                report.mean_payoff,
                                report.std_error,
                                analytic,
                                tv};
    for (double p : report.empirical_distribution.probs) row.emplace_back(p);
    csv.rows.push_back(std::move(row));
  }
  std::string text = describe(sc.problem) + "trials = " +
                     std::to_string(sc.options.trials) +
                     ", seed = " + std::to_string(sc.options.seed) + "\n";
  return {text + text_table(rows), std::move(csv)};
}

}  // namespace detail

/// Grid 0, h, 2h, ... up to 1; the last point is snapped to exactly 1 when
/// 1/h is (within rounding) an integer.
inline std::vector<double> alpha_grid(double step) {
  if (!(step > 0.0 && step <= 1.0)) {
    throw Error(Errc::kSchema, "grid step must lie in (0, 1]");
  }
  std::vector<double> grid;
  const double cells = 1.0 / step;
  const auto n = static_cast<long long>(std::floor(cells + 1e-9));
  for (long long i = 0; i <= n; ++i) {
    grid.push_back(std::min(1.0, static_cast<double>(i) * step));
  }
  if (std::abs(cells - std::round(cells)) <= 1e-9) grid.back() = 1.0;
  return grid;
}

/// (alpha, payoff) table for the stationary strategy, or for the averaged
/// two-round payoff on selection problems.
inline CsvTable payoff_curve(const ScenarioProblem& problem, double step) {
  const PayoffPolynomial poly =
      std::holds_alternative<DriveProblem>(problem)
          ? stationary_payoff_polynomial(std::get<DriveProblem>(problem))
          : two_round_average_polynomial(std::get<SelectionProblem>(problem));
  CsvTable table{{"alpha", "payoff"}, {}};
  for (double a : alpha_grid(step)) table.rows.push_back({a, poly(a)});
  return table;
}

/// Runs one command. Throws Error(kCommandMismatch) when the scenario's
/// problem kind does not suit the command.
inline CommandOutput run_command(Command command, const Scenario& sc,
                                 unsigned threads = 1) {
  switch (command) {
    case Command::kEval: return detail::run_eval(sc);
    case Command::kOptimize: return detail::run_optimize(sc);
    case Command::kSelect: return detail::run_select(sc);
    case Command::kSimulate: return detail::run_simulate(sc, threads);
    case Command::kCurve: {
      CsvTable table = payoff_curve(sc.problem, sc.options.grid_step);
      std::string text = emit_csv(table);
      return {std::move(text), std::move(table)};
    }
  }
  throw std::logic_error("unhandled command");
}

}  // namespace amdriver

#endif  // AMDRIVER_REPORT_HPP
