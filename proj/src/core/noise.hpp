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

#ifndef NHG_CORE_NOISE_HPP
#define NHG_CORE_NOISE_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "game.hpp"

namespace nhg {

/// Finite-support multiplicative noise distribution: factors alpha_1 < ... <
/// alpha_l, all positive, with probabilities summing to one.
class NoiseSpec {
 public:
  NoiseSpec(std::vector<double> support, std::vector<double> probs);

  /// Canonical two-point model {1, alpha} with P[alpha] = p, alpha > 1.
  static NoiseSpec two_support(double alpha, double p);
  /// Canonical three-point model {1, alpha1, alpha2}, alpha1 > 1 > alpha2 > 0,
  /// with P[alpha1] = p1, P[alpha2] = p2.
  static NoiseSpec three_support(double alpha1, double alpha2, double p1, double p2);

  int size() const { return static_cast<int>(support_.size()); }
  const std::vector<double>& support() const { return support_; }
  const std::vector<double>& probs() const { return probs_; }

 private:
  std::vector<double> support_;
  std::vector<double> probs_;
};

/// One drawn factor per coalition, shared by all of its members.
struct NoiseAssignment {
  std::unordered_map<std::uint32_t, double> alpha;  // coalition mask -> factor

  double factor(Coalition c) const {
    auto it = alpha.find(c.mask());
    require(it != alpha.end(), ErrorCode::missing_assignment,
            "no noise factor assigned to coalition " + c.str());
    return it->second;
  }
};

/// Scales every stored value by its coalition's factor; coverage unchanged.
HedonicGame apply_noise(const HedonicGame& game, const NoiseAssignment& assignment);

/// Independent draw per coalition. Seeds are split per coalition mask, so the
/// assignment is a pure function of (spec, seed, coalition) and parallel
/// generation matches serial.
NoiseAssignment draw_noise(const NoiseSpec& spec, const std::vector<Coalition>& coalitions,
                           std::uint64_t seed);

/// Additive-model reduction: V = exp(v), turning an additive perturbation
/// into a multiplicative factor exp(alpha). Throws on non-representable exp.
HedonicGame additive_to_multiplicative(const HedonicGame& game);

/// Same reduction for raw additive-scale entries, which unlike stored game
/// values may be zero or negative; only finiteness is required.
HedonicGame additive_to_multiplicative(int n, Coverage coverage,
                                       const std::vector<std::tuple<int, Coalition, double>>& additive_entries);

}  // namespace nhg

#endif  // NHG_CORE_NOISE_HPP
