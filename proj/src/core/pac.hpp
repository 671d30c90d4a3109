// Copyright 2026 The noisyhg Authors
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

#ifndef NHG_CORE_PAC_HPP
#define NHG_CORE_PAC_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "partition.hpp"
#include "sampling.hpp"
#include "stability.hpp"

namespace nhg {

struct PacParams {
  double eps_tilde = 0.1;
  double delta = 0.05;
  double zeta = 1.0;
  int n = 1;

  void validate() const;
  /// epsilon implied by the satisfaction value: 1 - (1 - eps_tilde) * zeta.
  double derived_eps() const { return 1.0 - (1.0 - eps_tilde) * zeta; }
};

struct Observation {
  Coalition coalition;
  std::vector<std::pair<int, double>> values;  // (member, noisy value)
};

struct Sample {
  std::vector<Observation> observations;
  std::uint64_t seed = 0;  // provenance only
};

/// Game induced by a sample: union of its observations. Coverage is full
/// exactly when every legal pair is present. Conflicting duplicates are
/// rejected; consistent duplicates collapse.
HedonicGame game_from_sample(const Sample& sample, int n);

/// Full-information sample listing every stored entry of the game.
Sample full_sample(const HedonicGame& game);

enum class LearnBackend { exact, top_cover };

/// Learns a partition from noisy observations.
///
/// exact: induces the game and solves for a core partition outright (needs a
/// complete sample, n <= 12); nullopt when the core is empty.
///
/// top_cover: iterative rounds. Each agent's estimated choice set is its
/// highest-valued observed coalition; the smallest agent-closure under those
/// choice sets is fixed as a block, its agents are removed from the remaining
/// observations, and the process repeats. Agents never observed end up as
/// singletons. Ties break toward the lowest agent index.
std::optional<Partition> learn_partition(const Sample& sample, int n, LearnBackend backend);

/// Fraction of m_eval spec-driven draws that core-block pi; deterministic in
/// the spec's seed.
double empirical_blocking_rate(const Partition& pi, const SamplingSpec& spec,
                               const HedonicGame& game, std::size_t m_eval);

/// ceil((2n^3 + 2n^4) * (1/eps) * ln(2n^3 / delta)); natural log throughout.
std::uint64_t sample_complexity_top_responsive(int n, double eps, double delta);

/// Bounds relating noisy-sample counts to noise-free ones:
/// (m * zeta, m + (2n^3 + 2n^4) * ((1-et) + et*z) / (et * (1 + et*z)) * ln(2n^3/delta)).
std::pair<double, double> sample_bounds(std::uint64_t m, const PacParams& params);

/// eps_new = 1 - (1 - (eps_tilde - eps_tilde_prime)) * agreement; never
/// exceeds the epsilon implied by eps_tilde alone.
double epsilon_after_more_samples(double eps_tilde, double eps_tilde_prime, double agreement);

}  // namespace nhg

#endif  // NHG_CORE_PAC_HPP
