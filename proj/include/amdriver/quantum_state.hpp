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

#ifndef AMDRIVER_QUANTUM_STATE_HPP
#define AMDRIVER_QUANTUM_STATE_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "amdriver/error.hpp"

namespace amdriver {

using Amplitude = std::complex<double>;

/// One ket in a state written as a sum, e.g. ("01", 1/sqrt(2)).
struct BasisTerm {
  std::string bits;
  Amplitude amplitude;

  friend bool operator==(const BasisTerm&, const BasisTerm&) = default;
};

inline constexpr int kMaxQubits = 20;
inline constexpr double kStateNormTolerance = 1e-9;
inline constexpr double kBuildNormTolerance = 1e-6;
inline constexpr double kRescaleThreshold = 1e-12;

/// Dense statevector over 2^m basis strings. Qubit 1 is the leftmost
/// character of a ket and the most significant bit of the amplitude index;
/// it is the qubit measured at the first intersection.
class StateVector {
 public:
  /// Takes ownership of `amplitudes`; the size must be 2^num_qubits and the
  /// squared norm must be 1 within kStateNormTolerance.
  static StateVector from_amplitudes(int num_qubits,
                                     std::vector<Amplitude> amplitudes) {
    check_qubit_count(num_qubits);
    if (amplitudes.size() != (std::size_t{1} << num_qubits)) {
      throw Error(Errc::kRaggedTerms,
                  "amplitude count does not match 2^" +
                      std::to_string(num_qubits));
    }
    for (const auto& a : amplitudes) {
      if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
        throw Error(Errc::kNotNormalized, "non-finite amplitude");
      }
    }
    const double norm2 = squared_norm(amplitudes);
    if (std::abs(norm2 - 1.0) > kStateNormTolerance) {
      throw Error(Errc::kNotNormalized,
                  "squared norm is " + std::to_string(norm2));
    }
    return StateVector(num_qubits, std::move(amplitudes));
  }

  int num_qubits() const noexcept { return num_qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }
  Amplitude amplitude(std::size_t index) const { return amplitudes_.at(index); }

  /// Nonzero amplitudes as kets, in increasing basis order.
  std::vector<BasisTerm> terms() const {
    std::vector<BasisTerm> out;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
      if (amplitudes_[i] != Amplitude{}) {
        out.push_back({index_to_bits(i, num_qubits_), amplitudes_[i]});
      }
    }
    return out;
  }

  static double squared_norm(std::span<const Amplitude> amps) {
    double s = 0.0;
    for (const auto& a : amps) s += std::norm(a);
    return s;
  }

  static std::string index_to_bits(std::size_t index, int num_qubits) {
    std::string bits(static_cast<std::size_t>(num_qubits), '0');
    for (int q = 0; q < num_qubits; ++q) {
      if ((index >> (num_qubits - 1 - q)) & 1U) bits[q] = '1';
    }
    return bits;
  }

  static void check_qubit_count(int num_qubits) {
    if (num_qubits < 1) {
      throw Error(Errc::kDegenerateProblem, "state needs at least one qubit");
    }
    if (num_qubits > kMaxQubits) {
      throw Error(Errc::kTooManyQubits,
                  std::to_string(num_qubits) + " > " +
                      std::to_string(kMaxQubits));
    }
  }

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  StateVector(int num_qubits, std::vector<Amplitude> amplitudes)
      : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

  int num_qubits_;
  std::vector<Amplitude> amplitudes_;
};

/// Builds a state from listed kets; unlisted basis strings get amplitude 0.
///
/// Without `normalize`, the squared norm must already be within
/// kBuildNormTolerance of 1. Accepted vectors whose squared norm is off by
/// more than kRescaleThreshold are rescaled to unit norm, so stored states
/// meet kStateNormTolerance and re-building from terms() is the identity.
inline StateVector build_state(std::span<const BasisTerm> terms,
                               bool normalize) {
  if (terms.empty()) {
    throw Error(Errc::kDegenerateProblem, "no basis terms");
  }
  const std::size_t width = terms.front().bits.size();
  if (width > static_cast<std::size_t>(kMaxQubits)) {
    throw Error(Errc::kTooManyQubits, std::to_string(width) + " qubits");
  }
  const int m = static_cast<int>(width);
  StateVector::check_qubit_count(m);

  std::vector<Amplitude> amps(std::size_t{1} << m);
  std::set<std::string> seen;
  for (const auto& term : terms) {
    if (term.bits.size() != width) {
      throw Error(Errc::kRaggedTerms, "'" + term.bits + "' has length " +
                                          std::to_string(term.bits.size()) +
                                          ", expected " + std::to_string(m));
    }
    std::size_t index = 0;
    for (char c : term.bits) {
      if (c != '0' && c != '1') {
        throw Error(Errc::kSchema, "basis string '" + term.bits +
                                       "' must contain only 0 and 1");
      }
      index = (index << 1) | static_cast<std::size_t>(c == '1');
    }
    if (!seen.insert(term.bits).second) {
      throw Error(Errc::kDuplicateTerm, "'" + term.bits + "'");
    }
    if (!std::isfinite(term.amplitude.real()) ||
        !std::isfinite(term.amplitude.imag())) {
      throw Error(Errc::kNotNormalized, "non-finite amplitude on '" +
                                            term.bits + "'");
    }
    amps[index] = term.amplitude;
  }

  const double norm2 = StateVector::squared_norm(amps);
  if (norm2 == 0.0) {
    throw Error(Errc::kNotNormalized, "zero vector");
  }
  if (!normalize && std::abs(norm2 - 1.0) > kBuildNormTolerance) {
    throw Error(Errc::kNotNormalized,
                "squared norm is " + std::to_string(norm2));
  }
  if (std::abs(norm2 - 1.0) > kRescaleThreshold) {
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto& a : amps) a *= scale;
  }
  return StateVector::from_amplitudes(m, std::move(amps));
}

inline StateVector build_state(std::initializer_list<BasisTerm> terms,
                               bool normalize = false) {
  return build_state(std::span<const BasisTerm>(terms.begin(), terms.size()),
                     normalize);
}

/// m-fold tensor power of sqrt(alpha)|0> + sqrt(1-alpha)|1>.
inline StateVector product_state(double alpha, int num_qubits) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(Errc::kInvalidProbability,
                "alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
  StateVector::check_qubit_count(num_qubits);
  const double zero = std::sqrt(alpha);
  const double one = std::sqrt(1.0 - alpha);
  std::vector<Amplitude> amps(std::size_t{1} << num_qubits);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    double a = 1.0;
    for (int q = 0; q < num_qubits; ++q) a *= ((i >> q) & 1U) ? one : zero;
    amps[i] = a;
  }
  // Rounding in the products can leave the norm a few ulps off 1.
  const double scale = 1.0 / std::sqrt(StateVector::squared_norm(amps));
  for (auto& a : amps) a *= scale;
  return StateVector::from_amplitudes(num_qubits, std::move(amps));
}

}  // namespace amdriver

#endif  // AMDRIVER_QUANTUM_STATE_HPP
