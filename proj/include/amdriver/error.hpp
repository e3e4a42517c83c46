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

#ifndef AMDRIVER_ERROR_HPP
#define AMDRIVER_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace amdriver {

enum class Errc {
  kDegenerateProblem,
  kInvalidPayoff,
  kInvalidProbability,
  kBadIndex,
  kNoStepwiseMarginal,
  kStrategyMismatch,
  kDuplicateTerm,
  kRaggedTerms,
  kNotNormalized,
  kTooManyQubits,
  kBadDestination,
  kObjectiveError,
  kNoTrials,
  kSchema,
  kCommandMismatch,
};

/// Short, stable description of each error category. Error messages always
/// start with this text so callers and tests can match on it.
constexpr std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kDegenerateProblem: return "degenerate problem";
    case Errc::kInvalidPayoff: return "invalid payoff";
    case Errc::kInvalidProbability: return "invalid probability";
    case Errc::kBadIndex: return "bad index";
    case Errc::kNoStepwiseMarginal: return "no stepwise marginal";
    case Errc::kStrategyMismatch: return "strategy/problem mismatch";
    case Errc::kDuplicateTerm: return "duplicate term";
    case Errc::kRaggedTerms: return "ragged terms";
    case Errc::kNotNormalized: return "not normalized";
    case Errc::kTooManyQubits: return "too many qubits";
    case Errc::kBadDestination: return "bad destination";
    case Errc::kObjectiveError: return "objective error";
    case Errc::kNoTrials: return "no trials";
    case Errc::kSchema: return "schema violation";
    case Errc::kCommandMismatch: return "command/problem mismatch";
  }
  return "unknown error";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(compose(code, detail)), code_(code) {}
  explicit Error(Errc code) : Error(code, {}) {}

  Errc code() const noexcept { return code_; }

 private:
  static std::string compose(Errc code, const std::string& detail) {
    std::string msg(errc_name(code));
    if (!detail.empty()) {
      msg += ": ";
      msg += detail;
    }
    return msg;
  }

  Errc code_;
};

}  // namespace amdriver

#endif  // AMDRIVER_ERROR_HPP
