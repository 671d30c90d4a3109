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

#include "two_agent.hpp"

namespace nhg {

TwoAgentGame::TwoAgentGame(double v1_own, double v2_own, double v1_both, double v2_both)
    : v1_own_(v1_own), v2_own_(v2_own), v1_both_(v1_both), v2_both_(v2_both) {
  require(v1_own > 0 && v2_own > 0 && v1_both > 0 && v2_both > 0, ErrorCode::invalid_argument,
          "two-agent values must be positive");
  require(v1_both != v1_own && v2_both != v2_own, ErrorCode::tie_encountered,
          "two-agent game needs strict preferences");
  bool one_pair = v1_both > v1_own;
  bool two_pair = v2_both > v2_own;
  if (one_pair && two_pair) {
    id_ = 1;
  } else if (!one_pair && !two_pair) {
    id_ = 2;
  } else if (!one_pair) {
    id_ = 3;
  } else {
    id_ = 4;
  }
}

TwoAgentGame TwoAgentGame::from_game(const HedonicGame& game) {
  require(game.agent_count() == 2, ErrorCode::unsupported_game,
          "full-information analysis covers two-agent games");
  Coalition a0 = Coalition::of({0});
  Coalition a1 = Coalition::of({1});
  Coalition both = Coalition::of({0, 1});
  return TwoAgentGame(game.value(0, a0), game.value(1, a1), game.value(0, both),
                      game.value(1, both));
}

double predict_prob_2support(const TwoAgentGame& game, double p, double alpha) {
  require(p >= 0.0 && p <= 1.0, ErrorCode::invalid_argument, "p must lie in [0,1]");
  require(alpha > 1.0, ErrorCode::invalid_argument, "two-support analysis needs alpha > 1");
  switch (game.id()) {
    case 1:
      if (alpha >= game.r_max()) return 1.0 - p * (1.0 - p * p);
      if (alpha >= game.r_min()) return 1.0 - p * (1.0 - p);
      return 1.0;
    case 2:
      return (1.0 / alpha >= game.r_min()) ? 1.0 : 1.0 - p * p * (1.0 - p);
    case 3:
      return (1.0 / alpha >= game.ratio1()) ? 1.0 : 1.0 - p * (1.0 - p);
    default:
      return (1.0 / alpha >= game.ratio2()) ? 1.0 : 1.0 - p * (1.0 - p);
  }
}

void ThreeSupportSpec::validate() const {
  require(alpha1 > 1.0, ErrorCode::invalid_argument, "alpha1 must exceed 1");
  require(alpha2 > 0.0 && alpha2 < 1.0, ErrorCode::invalid_argument,
          "alpha2 must lie in (0,1)");
  require(p1 >= 0.0 && p2 >= 0.0 && p1 + p2 <= 1.0, ErrorCode::invalid_argument,
          "(p1,p2) must lie in the probability simplex");
}

double g_three_support(double p1, double p2) {
  double q = 1.0 - p1 - p2;
  return p1 * p1 * p1 + p2 * p2 * p2 +
         2.0 * (p1 * q * q + p2 * p2 * q + p1 * p2 * q + p1 * p2 * p2) + p1 * p1 * p2 +
         p1 * p1 * q + p2 * q * q + q * q * q;
}

double predict_prob_3support(const TwoAgentGame& game, const ThreeSupportSpec& spec) {
  spec.validate();
  require(game.id() == 1, ErrorCode::unsupported_game,
          "the three-support closed forms cover game 1 only");
  double rmax = game.r_max();
  double rmin = game.r_min();
  double inv2 = 1.0 / spec.alpha2;
  double cross = spec.alpha1 / spec.alpha2;
  if (spec.alpha1 >= rmax && inv2 >= rmax && cross >= rmax) {
    return g_three_support(spec.p1, spec.p2);
  }
  if (spec.alpha1 < rmin && inv2 < rmin && cross < rmin) {
    return 1.0;
  }
  // The intermediate branches have no closed form; defer to the enumeration.
  return aggregate_agreement(enumerate_cases(game, spec.noise_spec()));
}

std::vector<std::array<int, 3>> case_level_order(int l) {
  require(l >= 1, ErrorCode::invalid_argument, "support size must be positive");
  if (l == 2) {
    return {{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0},
             {1, 1, 1}}};
  }
  if (l == 3) {
    return {{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0},
             {1, 1, 1}, {0, 0, 2}, {0, 2, 0}, {2, 0, 0}, {0, 2, 2}, {2, 0, 2}, {2, 2, 0},
             {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {2, 0, 1}, {1, 2, 0}, {2, 1, 0}, {1, 1, 2},
             {1, 2, 1}, {1, 2, 2}, {2, 1, 1}, {2, 1, 2}, {2, 2, 1}, {2, 2, 2}}};
  }
  std::vector<std::array<int, 3>> order;
  order.reserve(static_cast<std::size_t>(l) * l * l);
  for (int a = 0; a < l; ++a) {
    for (int b = 0; b < l; ++b) {
      for (int c = 0; c < l; ++c) order.push_back({a, b, c});
    }
  }
  return order;
}

namespace {

template <class S>
std::vector<CaseRowT<S>> enumerate_impl(const std::array<S, 4>& v, const std::vector<S>& support,
                                        const std::vector<S>& probs) {
  const int l = static_cast<int>(support.size());
  require(static_cast<double>(l) * l * l <= 1e6, ErrorCode::enumeration_too_large,
          "case table would exceed the enumeration cap");
  require(support.size() == probs.size(), ErrorCode::invalid_argument,
          "support and probabilities differ in length");
  require(v[2] != v[0] && v[3] != v[1], ErrorCode::tie_encountered,
          "two-agent game needs strict preferences");
  const bool noisy_pair = v[2] > v[0] && v[3] > v[1];

  std::vector<int> perm = display_permutation(support);
  std::vector<CaseRowT<S>> rows;
  for (const auto& levels : case_level_order(l)) {
    int i1 = perm[levels[0]], i2 = perm[levels[1]], i12 = perm[levels[2]];
    const S& a1 = support[i1];
    const S& a2 = support[i2];
    const S& a12 = support[i12];
    S u1_own = v[0] / a1;
    S u2_own = v[1] / a2;
    S u1_both = v[2] / a12;
    S u2_both = v[3] / a12;
    require(u1_own != u1_both && u2_own != u2_both, ErrorCode::tie_encountered,
            "de-noised values tie for the assignment (" + std::to_string(i1) + "," +
                std::to_string(i2) + "," + std::to_string(i12) + ")");
    CaseRowT<S> row;
    row.alpha = {a1, a2, a12};
    row.probability = probs[i1] * probs[i2] * probs[i12];
    row.pair_forms = u1_both > u1_own && u2_both > u2_own;
    row.agrees = row.pair_forms == noisy_pair;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::vector<CaseRow> enumerate_cases(const TwoAgentGame& game, const NoiseSpec& spec) {
  std::array<double, 4> v = {game.v1_own(), game.v2_own(), game.v1_both(), game.v2_both()};
  return enumerate_impl<double>(v, spec.support(), spec.probs());
}

std::vector<CaseRowQ> enumerate_cases_exact(const std::array<Rat, 4>& values,
                                            const std::vector<Rat>& support,
                                            const std::vector<Rat>& probs) {
  return enumerate_impl<Rat>(values, support, probs);
}

Region1D regime_1d_two_agent(const TwoAgentGame& game, double alpha, double zeta,
                             int resolution) {
  return superlevel_region_1d([&](double p) { return predict_prob_2support(game, p, alpha); },
                              zeta, resolution);
}

SafetyValue safety_two_agent(const TwoAgentGame& game, double alpha, int resolution) {
  return safety_value_1d([&](double p) { return predict_prob_2support(game, p, alpha); },
                         resolution);
}

std::vector<BranchCurve> branch_curves(const TwoAgentGame& game) {
  auto mid = [](double p) { return 1.0 - p * (1.0 - p); };
  auto one = [](double) { return 1.0; };
  switch (game.id()) {
    case 1:
      return {{"alpha_ge_rmax", [](double p) { return 1.0 - p * (1.0 - p * p); }},
              {"rmin_le_alpha_lt_rmax", mid},
              {"alpha_lt_rmin", one}};
    case 2:
      return {{"inv_alpha_lt_rmin", [](double p) { return 1.0 - p * p * (1.0 - p); }},
              {"inv_alpha_ge_rmin", one}};
    case 3:
      return {{"inv_alpha_lt_r1", mid}, {"inv_alpha_ge_r1", one}};
    default:
      return {{"inv_alpha_lt_r2", mid}, {"inv_alpha_ge_r2", one}};
  }
}

}  // namespace nhg
