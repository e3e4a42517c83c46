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

#ifndef AMDRIVER_MONTE_CARLO_HPP
#define AMDRIVER_MONTE_CARLO_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <thread>
#include <variant>
#include <vector>

#include "amdriver/classical_eval.hpp"
#include "amdriver/core_model.hpp"
#include "amdriver/error.hpp"
#include "amdriver/quantum_eval.hpp"

// Random streams: every block of kBlockTrials trials draws from its own
// std::mt19937_64, seeded through std::seed_seq with the 32-bit halves of
// (seed, block index). Unit uniforms take the top 53 bits of one 64-bit
// draw. Results therefore depend only on (seed, trials), never on the thread
// count.

namespace amdriver {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kBlockTrials = std::uint64_t{1} << 16;

inline double unit_uniform(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline Rng block_stream(std::uint64_t seed, std::uint64_t block) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block),
                    static_cast<std::uint32_t>(block >> 32)};
  return Rng(seq);
}

/// Draws destinations for one (problem, strategy) pair. Quantum strategies
/// sample a basis string by inverse CDF over |amplitude|^2.
class DriveSampler {
 public:
  DriveSampler(const DriveProblem& problem, const Strategy& strategy)
      : num_exits_(problem.num_exits()) {
    check_dimensions(strategy, num_exits_);
    if (const auto* q = std::get_if<Quantum>(&strategy)) {
      const auto amps = q->state.amplitudes();
      cdf_.reserve(amps.size());
      double acc = 0.0;
      for (const auto& a : amps) {
        acc += std::norm(a);
        cdf_.push_back(acc);
      }
      for (double& c : cdf_) c /= acc;
    } else {
      const int k = problem.num_destinations();
      for (int i = 1; i <= num_exits_; ++i) {
        step_probs_.push_back(exit_probability(strategy, i, k));
      }
    }
  }

  /// Destination index in 1..m+1.
  int sample(Rng& rng) const {
    if (!cdf_.empty()) {
      const double u = unit_uniform(rng);
      auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
      // u < 1 == cdf_.back(), and upper_bound never stops on a zero-weight
      // string because its cumulative value equals its predecessor's.
      const auto index = static_cast<std::size_t>(it - cdf_.begin());
      return first_zero_destination(index, num_exits_);
    }
    for (int i = 0; i < num_exits_; ++i) {
      if (unit_uniform(rng) < step_probs_[static_cast<std::size_t>(i)]) {
        return i + 1;
      }
    }
    return num_exits_ + 1;
  }

 private:
  int num_exits_;
  std::vector<double> step_probs_;
  std::vector<double> cdf_;
};

/// One trip down the highway.
inline int simulate_drive(const DriveProblem& problem, const Strategy& strategy,
                          Rng& rng) {
  return DriveSampler(problem, strategy).sample(rng);
}

struct SimulationReport {
  std::uint64_t trials = 0;
  double mean_payoff = 0.0;
  double std_error = 0.0;
  DestinationDistribution empirical_distribution;
  std::uint64_t seed = 0;

  friend bool operator==(const SimulationReport&,
                         const SimulationReport&) = default;
};

/// Monte Carlo estimate of the expected payoff. `threads` = 0 picks the
/// hardware concurrency; the report is identical for any thread count.
inline SimulationReport estimate_payoff(const DriveProblem& problem,
                                        const Strategy& strategy,
                                        std::uint64_t trials,
                                        std::uint64_t seed,
                                        unsigned threads = 1) {
  if (trials == 0) throw Error(Errc::kNoTrials);
  const DriveSampler sampler(problem, strategy);
  const auto k = static_cast<std::size_t>(problem.num_destinations());
  const std::uint64_t blocks = (trials + kBlockTrials - 1) / kBlockTrials;

  // Per-block destination counts; integer sums merge exactly in any order.
  std::vector<std::vector<std::uint64_t>> counts(
      blocks, std::vector<std::uint64_t>(k, 0));
  auto run_block = [&](std::uint64_t b) {
    Rng rng = block_stream(seed, b);
    const std::uint64_t n = std::min(kBlockTrials, trials - b * kBlockTrials);
    auto& c = counts[b];
    for (std::uint64_t t = 0; t < n; ++t) {
      ++c[static_cast<std::size_t>(sampler.sample(rng) - 1)];
    }
  };

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  const auto workers =
      static_cast<unsigned>(std::min<std::uint64_t>(threads, blocks));
  if (workers <= 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) run_block(b);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t b = w; b < blocks; b += workers) run_block(b);
      });
    }
  }

  std::vector<std::uint64_t> total(k, 0);
  for (const auto& c : counts) {
    for (std::size_t d = 0; d < k; ++d) total[d] += c[d];
  }

  const std::vector<double> payoffs = problem.destination_payoffs();
  const auto n = static_cast<double>(trials);
  SimulationReport report;
  report.trials = trials;
  report.seed = seed;
  report.empirical_distribution.probs.resize(k);
  double sum = 0.0;
  for (std::size_t d = 0; d < k; ++d) {
    report.empirical_distribution.probs[d] = static_cast<double>(total[d]) / n;
    sum += static_cast<double>(total[d]) * payoffs[d];
  }
  report.mean_payoff = sum / n;
  if (trials > 1) {
    double ss = 0.0;
    for (std::size_t d = 0; d < k; ++d) {
      const double dev = payoffs[d] - report.mean_payoff;
      ss += static_cast<double>(total[d]) * dev * dev;
    }
    report.std_error = std::sqrt(ss / (n - 1.0) / n);
  }
  return report;
}

/// Half the L1 distance between two distributions of equal length.
inline double total_variation(const DestinationDistribution& a,
                              const DestinationDistribution& b) {
  if (a.size() != b.size()) {
    throw Error(Errc::kStrategyMismatch, "distribution lengths differ");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return 0.5 * s;
}

}  // namespace amdriver

#endif  // AMDRIVER_MONTE_CARLO_HPP
