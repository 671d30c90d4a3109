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

#include "noise.hpp"

#include <cmath>

#include "sampling.hpp"

namespace nhg {

NoiseSpec::NoiseSpec(std::vector<double> support, std::vector<double> probs)
    : support_(std::move(support)), probs_(std::move(probs)) {
  require(!support_.empty(), ErrorCode::invalid_argument, "noise support must be non-empty");
  require(support_.size() == probs_.size(), ErrorCode::invalid_argument,
          "support and probabilities differ in length");
  double total = 0.0;
  for (std::size_t j = 0; j < support_.size(); ++j) {
    require(support_[j] > 0.0, ErrorCode::invalid_argument, "noise factors must be positive");
    if (j > 0) {
      require(support_[j] > support_[j - 1], ErrorCode::invalid_argument,
              "noise support must be strictly increasing");
    }
    require(probs_[j] >= 0.0, ErrorCode::invalid_argument, "probabilities must be non-negative");
    total += probs_[j];
  }
  require(std::abs(total - 1.0) <= 1e-12, ErrorCode::invalid_argument,
          "probabilities must sum to 1 within 1e-12");
}

NoiseSpec NoiseSpec::two_support(double alpha, double p) {
  require(alpha > 1.0, ErrorCode::invalid_argument, "two-support model needs alpha > 1");
  require(p >= 0.0 && p <= 1.0, ErrorCode::invalid_argument, "p must lie in [0,1]");
  return NoiseSpec({1.0, alpha}, {1.0 - p, p});
}

NoiseSpec NoiseSpec::three_support(double alpha1, double alpha2, double p1, double p2) {
  require(alpha1 > 1.0, ErrorCode::invalid_argument, "three-support model needs alpha1 > 1");
  require(alpha2 > 0.0 && alpha2 < 1.0, ErrorCode::invalid_argument,
          "three-support model needs 0 < alpha2 < 1");
  require(p1 >= 0.0 && p2 >= 0.0 && p1 + p2 <= 1.0, ErrorCode::invalid_argument,
          "probabilities must be non-negative with p1 + p2 <= 1");
  return NoiseSpec({alpha2, 1.0, alpha1}, {p2, 1.0 - p1 - p2, p1});
}

HedonicGame apply_noise(const HedonicGame& game, const NoiseAssignment& assignment) {
  HedonicGame out(game.agent_count(), game.coverage());
  for (const auto& [agent, coal, v] : game.entries()) {
    out.set_value(agent, coal, assignment.factor(coal) * v);
  }
  return out;
}

NoiseAssignment draw_noise(const NoiseSpec& spec, const std::vector<Coalition>& coalitions,
                           std::uint64_t seed) {
  NoiseAssignment out;
  const auto& probs = spec.probs();
  const auto& support = spec.support();
  for (Coalition c : coalitions) {
    if (out.alpha.count(c.mask())) continue;  // one factor per coalition
    Rng rng(mix_seed(seed, c.mask()));
    double u = rng.unit();
    double acc = 0.0;
    std::size_t pick = probs.size() - 1;
    for (std::size_t j = 0; j < probs.size(); ++j) {
      acc += probs[j];
      if (u < acc) {
        pick = j;
        break;
      }
    }
    out.alpha.emplace(c.mask(), support[pick]);
  }
  return out;
}

HedonicGame additive_to_multiplicative(const HedonicGame& game) {
  return additive_to_multiplicative(game.agent_count(), game.coverage(), game.entries());
}

HedonicGame additive_to_multiplicative(
    int n, Coverage coverage,
    const std::vector<std::tuple<int, Coalition, double>>& additive_entries) {
  HedonicGame out(n, coverage);
  for (const auto& [agent, coal, v] : additive_entries) {
    require(std::isfinite(v), ErrorCode::invalid_argument, "additive values must be finite");
    double e = std::exp(v);
    require(std::isfinite(e), ErrorCode::overflow,
            "exp(v) overflows for agent " + std::to_string(agent) + " in " + coal.str() +
                "; pre-scale the values");
    out.set_value(agent, coal, e);
  }
  return out;
}

}  // namespace nhg
