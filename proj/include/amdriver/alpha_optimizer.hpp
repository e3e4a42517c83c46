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

#ifndef AMDRIVER_ALPHA_OPTIMIZER_HPP
#define AMDRIVER_ALPHA_OPTIMIZER_HPP

#include <algorithm>
#include <cmath>
#include <concepts>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "amdriver/classical_eval.hpp"
#include "amdriver/core_model.hpp"
#include "amdriver/error.hpp"
#include "amdriver/polynomial.hpp"

namespace amdriver {

enum class OptimizationMethod { kClosedForm, kNumeric };

constexpr std::string_view method_name(OptimizationMethod m) noexcept {
  return m == OptimizationMethod::kClosedForm ? "closed_form" : "numeric";
}

struct OptimizationResult {
  double alpha_star = 0.0;
  double payoff_star = 0.0;
  OptimizationMethod method = OptimizationMethod::kClosedForm;
};

namespace detail {

inline constexpr int kRootPartition = 1001;
inline constexpr int kSeedGrid = 1001;
inline constexpr double kTieTolerance = 1e-12;

// Strictly better than `best`, beyond rounding noise. Keeps the earlier
// (smaller) alpha on ties.
inline bool improves(double value, double best) noexcept {
  return value > best + kTieTolerance * std::max(1.0, std::abs(best));
}

// Real roots of c0 + c1 x + c2 x^2 (any of the coefficients may be zero),
// using the cancellation-free form of the quadratic formula.
inline std::vector<double> real_roots_upto_quadratic(double c0, double c1,
                                                     double c2) {
  std::vector<double> roots;
  if (c2 == 0.0) {
    if (c1 != 0.0) roots.push_back(-c0 / c1);
    return roots;
  }
  const double disc = c1 * c1 - 4.0 * c2 * c0;
  if (disc < 0.0) return roots;
  const double q = -0.5 * (c1 + std::copysign(std::sqrt(disc), c1));
  if (q != 0.0) {
    roots.push_back(q / c2);
    roots.push_back(c0 / q);
  } else {
    roots.push_back(0.0);  // c1 == 0 and disc == 0 imply c0 == 0
  }
  return roots;
}

// Interior sign changes of p on (0, 1), located by bisection over a uniform
// partition. Nodes where p is exactly zero are reported as roots.
inline std::vector<double> isolate_roots(const PayoffPolynomial& p) {
  std::vector<double> roots;
  double x0 = 0.0;
  double y0 = p(x0);
  for (int s = 1; s <= kRootPartition; ++s) {
    const double x1 = static_cast<double>(s) / kRootPartition;
    const double y1 = p(x1);
    if (y1 == 0.0) {
      roots.push_back(x1);
    } else if (y0 != 0.0 && std::signbit(y0) != std::signbit(y1)) {
      double lo = x0;
      double hi = x1;
      const bool lo_negative = std::signbit(y0);
      for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double ym = p(mid);
        if (ym == 0.0) {
          lo = hi = mid;
          break;
        }
        (std::signbit(ym) == lo_negative ? lo : hi) = mid;
      }
      roots.push_back(0.5 * (lo + hi));
    }
    x0 = x1;
    y0 = y1;
  }
  return roots;
}

template <typename F>
double checked_eval(F& f, double alpha) {
  const double v = static_cast<double>(std::invoke(f, alpha));
  if (!std::isfinite(v)) {
    throw Error(Errc::kObjectiveError,
                "non-finite value at alpha = " + std::to_string(alpha));
  }
  return v;
}

}  // namespace detail

/// Global maximum of `poly` on [0, 1]. Candidates are both endpoints and the
/// real roots of the derivative inside (0, 1); ties go to the smallest alpha.
/// Derivatives of degree <= 2 are solved in closed form, higher degrees by
/// bisection on sign changes.
inline OptimizationResult maximize_polynomial(const PayoffPolynomial& poly) {
  const PayoffPolynomial slope = poly.derivative();
  const int slope_degree = slope.degree();

  std::vector<double> candidates = {0.0, 1.0};
  OptimizationMethod method = OptimizationMethod::kClosedForm;
  std::vector<double> roots;
  if (slope_degree <= 2) {
    roots = detail::real_roots_upto_quadratic(slope.coeff(0), slope.coeff(1),
                                              slope.coeff(2));
  } else {
    method = OptimizationMethod::kNumeric;
    roots = detail::isolate_roots(slope);
  }
  for (double r : roots) {
    if (r > 0.0 && r < 1.0) candidates.push_back(r);
  }
  std::sort(candidates.begin(), candidates.end());

  OptimizationResult best{candidates.front(), poly(candidates.front()), method};
  for (double a : candidates) {
    const double v = poly(a);
    if (detail::improves(v, best.payoff_star)) {
      best.alpha_star = a;
      best.payoff_star = v;
    }
  }
  return best;
}

inline OptimizationResult optimize_stationary(const DriveProblem& problem) {
  return maximize_polynomial(stationary_payoff_polynomial(problem));
}

/// Derivative-free maximization of `f` over [0, 1].
///
/// Seeds from the best point of a 1001-point grid, narrows the neighbouring
/// cells by golden-section search until the bracket is at most `tolerance`
/// wide, then polishes with successive parabolic steps (comparisons alone
/// cannot resolve a smooth maximum below about sqrt(machine epsilon)). The
/// refined point is kept only if it beats the grid maximum.
template <typename F>
  requires std::invocable<F&, double>
OptimizationResult numeric_maximize(F&& f, double tolerance) {
  if (!(tolerance > 0.0)) {
    throw Error(Errc::kObjectiveError, "tolerance must be positive");
  }
  constexpr int kCells = detail::kSeedGrid - 1;

  int best_index = 0;
  double best_value = detail::checked_eval(f, 0.0);
  for (int j = 1; j <= kCells; ++j) {
    const double v = detail::checked_eval(f, static_cast<double>(j) / kCells);
    if (detail::improves(v, best_value)) {
      best_index = j;
      best_value = v;
    }
  }
  const double grid_alpha = static_cast<double>(best_index) / kCells;

  double lo = static_cast<double>(std::max(best_index - 1, 0)) / kCells;
  double hi = static_cast<double>(std::min(best_index + 1, kCells)) / kCells;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = detail::checked_eval(f, c);
  double fd = detail::checked_eval(f, d);
  while (hi - lo > tolerance) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      if (c <= lo || c >= d) break;
      fc = detail::checked_eval(f, c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      if (d >= hi || d <= c) break;
      fd = detail::checked_eval(f, d);
    }
  }
  double x = 0.5 * (lo + hi);
  double fx = detail::checked_eval(f, x);

  for (double step : {1e-4, 1e-5, 1e-6}) {
    const double a = std::max(0.0, x - step);
    const double b = std::min(1.0, x + step);
    if (b - a < step) break;  // against a boundary; nothing to fit
    const double fa = detail::checked_eval(f, a);
    const double fb = detail::checked_eval(f, b);
    const double num = (x - a) * (x - a) * (fx - fb) - (x - b) * (x - b) * (fx - fa);
    const double den = (x - a) * (fx - fb) - (x - b) * (fx - fa);
    if (!(den != 0.0)) break;
    const double vertex = x - 0.5 * num / den;
    const double curvature = (fa - 2.0 * fx + fb);
    if (!(curvature < 0.0) || vertex < a || vertex > b) break;
    const double fv = detail::checked_eval(f, vertex);
    if (fv < fx - detail::kTieTolerance * std::max(1.0, std::abs(fx))) break;
    x = vertex;
    fx = fv;
  }

  if (detail::improves(fx, best_value)) {
    return {x, fx, OptimizationMethod::kNumeric};
  }
  return {grid_alpha, best_value, OptimizationMethod::kNumeric};
}

}  // namespace amdriver

#endif  // AMDRIVER_ALPHA_OPTIMIZER_HPP
