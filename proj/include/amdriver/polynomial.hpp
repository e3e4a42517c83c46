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

#ifndef AMDRIVER_POLYNOMIAL_HPP
#define AMDRIVER_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace amdriver {

/// Real polynomial in alpha, coefficients in increasing power order.
/// Trailing zero coefficients are kept so that the coefficient count reflects
/// how the polynomial was built (m + 1 for an m-exit highway).
class PayoffPolynomial {
 public:
  PayoffPolynomial() = default;
  explicit PayoffPolynomial(std::vector<double> coeffs)
      : coeffs_(std::move(coeffs)) {}

  std::span<const double> coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  double coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : 0.0;
  }

  /// Degree ignoring exactly-zero leading coefficients; -1 for the zero
  /// polynomial.
  int degree() const noexcept {
    int d = static_cast<int>(coeffs_.size()) - 1;
    while (d >= 0 && coeffs_[static_cast<std::size_t>(d)] == 0.0) --d;
    return d;
  }

  double operator()(double alpha) const noexcept {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * alpha + *it;
    }
    return acc;
  }

  PayoffPolynomial derivative() const {
    if (coeffs_.size() <= 1) return PayoffPolynomial({0.0});
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t j = 1; j < coeffs_.size(); ++j) {
      d[j - 1] = static_cast<double>(j) * coeffs_[j];
    }
    return PayoffPolynomial(std::move(d));
  }

  PayoffPolynomial& operator+=(const PayoffPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      coeffs_[j] += rhs.coeffs_[j];
    }
    return *this;
  }

  PayoffPolynomial& operator*=(double s) {
    for (double& c : coeffs_) c *= s;
    return *this;
  }

  friend PayoffPolynomial operator+(PayoffPolynomial lhs,
                                    const PayoffPolynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend PayoffPolynomial operator*(PayoffPolynomial p, double s) {
    p *= s;
    return p;
  }
  friend PayoffPolynomial operator*(double s, PayoffPolynomial p) {
    p *= s;
    return p;
  }

  /// Product of two polynomials (plain convolution).
  friend PayoffPolynomial operator*(const PayoffPolynomial& a,
                                    const PayoffPolynomial& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
    std::vector<double> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return PayoffPolynomial(std::move(out));
  }

  friend bool operator==(const PayoffPolynomial&,
                         const PayoffPolynomial&) = default;

 private:
  std::vector<double> coeffs_;
};

}  // namespace amdriver

#endif  // AMDRIVER_POLYNOMIAL_HPP
