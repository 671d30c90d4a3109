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

#include "agreement.hpp"

#include <algorithm>

namespace nhg {

AgreementContext build_context(const HedonicGame& noisy_game, const Partition& pi_tilde,
                               Coalition t) {
  require(pi_tilde.agent_count() == noisy_game.agent_count(), ErrorCode::invalid_argument,
          "partition and game disagree on agent count");
  require(!t.empty() && t.subset_of(Coalition::full(noisy_game.agent_count())),
          ErrorCode::invalid_argument, "coalition " + t.str() + " not valid for this game");

  AgreementContext ctx;
  ctx.t = t;

  std::vector<int> block_indices;
  for (int i : t.members()) {
    int b = pi_tilde.block_index_of(i);
    if (std::find(block_indices.begin(), block_indices.end(), b) == block_indices.end()) {
      block_indices.push_back(b);
    }
  }
  std::sort(block_indices.begin(), block_indices.end());

  // If T equals one member's block it equals every member's block.
  ctx.degenerate = block_indices.size() == 1 && pi_tilde.blocks()[block_indices[0]] == t;
  for (int b : block_indices) {
    Coalition block = pi_tilde.blocks()[b];
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (int i : t.members()) {
      if (pi_tilde.block_index_of(i) != b) continue;
      double rho = noisy_game.value(i, block) / noisy_game.value(i, t);
      if (first) {
        lo = hi = rho;
        first = false;
      } else {
        lo = std::min(lo, rho);
        hi = std::max(hi, rho);
      }
    }
    ctx.blocks.push_back(block);
    ctx.min_ratio.push_back(lo);
    ctx.max_ratio.push_back(hi);
  }
  return ctx;
}

AgreementInputs<double> make_inputs(AgreementKind kind, const NoiseSpec& spec,
                                    const AgreementContext& ctx) {
  AgreementInputs<double> in;
  in.support = spec.support();
  in.probs = spec.probs();
  in.ratios = (kind == AgreementKind::stable) ? ctx.min_ratio : ctx.max_ratio;
  in.degenerate = ctx.degenerate;
  return in;
}

double f_T_closed(const NoiseSpec& spec, const AgreementContext& ctx) {
  return agreement_closed(AgreementKind::stable, make_inputs(AgreementKind::stable, spec, ctx));
}

double h_T_closed(const NoiseSpec& spec, const AgreementContext& ctx) {
  return agreement_closed(AgreementKind::non_stable,
                          make_inputs(AgreementKind::non_stable, spec, ctx));
}

double f_T_oracle(const HedonicGame& noisy_game, const Partition& pi_tilde, Coalition t,
                  const NoiseSpec& spec) {
  AgreementContext ctx = build_context(noisy_game, pi_tilde, t);
  return agreement_oracle(AgreementKind::stable, make_inputs(AgreementKind::stable, spec, ctx));
}

double h_T_oracle(const HedonicGame& noisy_game, const Partition& pi_tilde, Coalition t,
                  const NoiseSpec& spec) {
  AgreementContext ctx = build_context(noisy_game, pi_tilde, t);
  return agreement_oracle(AgreementKind::non_stable,
                          make_inputs(AgreementKind::non_stable, spec, ctx));
}

double prediction_epsilon(double eps_tilde, double agreement) {
  require(eps_tilde >= 0.0 && eps_tilde <= 1.0, ErrorCode::invalid_argument,
          "eps_tilde must lie in [0,1]");
  require(agreement >= 0.0 && agreement <= 1.0, ErrorCode::invalid_argument,
          "agreement must lie in [0,1]");
  return 1.0 - (1.0 - eps_tilde) * agreement;
}

PredictionReport robustness_verdict(double eps_tilde, double agreement, double threshold,
                                    AgreementKind mode) {
  require(threshold >= 0.0 && threshold <= 1.0, ErrorCode::invalid_argument,
          "threshold must lie in [0,1]");
  PredictionReport rep;
  rep.mode = mode;
  rep.eps_tilde = eps_tilde;
  rep.agreement = agreement;
  rep.threshold = threshold;
  rep.epsilon = prediction_epsilon(eps_tilde, threshold);
  rep.robust = agreement >= threshold;
  return rep;
}

namespace {

std::map<std::string, int> size_map(const std::vector<std::vector<int>>& sizes) {
  std::map<std::string, int> out;
  const int l = static_cast<int>(sizes.size());
  for (int r = 0; r < l; ++r) {
    for (int s = 0; s < r; ++s) {
      out[std::to_string(r + 1) + "," + std::to_string(s + 1)] = sizes[r][s];
    }
  }
  return out;
}

}  // namespace

CoalitionReport analyze_coalition(const HedonicGame& noisy_game, const Partition& pi_tilde,
                                  Coalition t, const NoiseSpec& spec, double eps_tilde,
                                  double threshold, AgreementKind mode) {
  AgreementContext ctx = build_context(noisy_game, pi_tilde, t);
  auto stable_in = make_inputs(AgreementKind::stable, spec, ctx);
  auto non_stable_in = make_inputs(AgreementKind::non_stable, spec, ctx);

  CoalitionReport rep;
  rep.t = t;
  rep.degenerate = ctx.degenerate;
  rep.r_size = ctx.r_size();
  rep.i_sizes = size_map(index_sizes(AgreementKind::stable, stable_in));
  rep.j_sizes = size_map(index_sizes(AgreementKind::non_stable, non_stable_in));
  rep.f_closed = agreement_closed(AgreementKind::stable, stable_in);
  rep.f_oracle = agreement_oracle(AgreementKind::stable, stable_in);
  rep.h_closed = agreement_closed(AgreementKind::non_stable, non_stable_in);
  rep.h_oracle = agreement_oracle(AgreementKind::non_stable, non_stable_in);

  // The event definition, not the closed form, is authoritative, so the
  // verdict and epsilon are tied to the enumerated value.
  double agreement = (mode == AgreementKind::stable) ? rep.f_oracle : rep.h_oracle;
  PredictionReport verdict = robustness_verdict(eps_tilde, agreement, threshold, mode);
  rep.epsilon = prediction_epsilon(eps_tilde, agreement);
  rep.verdict = verdict.robust;
  return rep;
}

}  // namespace nhg
