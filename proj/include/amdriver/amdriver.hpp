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

#ifndef AMDRIVER_AMDRIVER_HPP
#define AMDRIVER_AMDRIVER_HPP

#include "amdriver/alpha_optimizer.hpp"
#include "amdriver/classical_eval.hpp"
#include "amdriver/core_model.hpp"
#include "amdriver/error.hpp"
#include "amdriver/monte_carlo.hpp"
#include "amdriver/polynomial.hpp"
#include "amdriver/quantum_eval.hpp"
#include "amdriver/quantum_state.hpp"
#include "amdriver/report.hpp"
#include "amdriver/scenario.hpp"
#include "amdriver/selection_rounds.hpp"

#endif  // AMDRIVER_AMDRIVER_HPP
