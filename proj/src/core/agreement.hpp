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

#ifndef NHG_CORE_AGREEMENT_HPP
#define NHG_CORE_AGREEMENT_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "game.hpp"
#include "noise.hpp"
#include "partition.hpp"
#include "rational.hpp"

namespace nhg {

// Two agreement events are analyzed. In the stable one every member of T
// weakly prefers its own block to T under both the observed and the de-noised
// values; in the non-stable one T is weakly preferred on both sides. Each
// event constrains, per block B of the partition touched by T, the ratio
// v_i(B)/v_i(T) of the observed values. The stable event needs the ratio test
// to pass for every member (the block minimum decides); the non-stable one is
// the mirror (the block maximum decides).
enum class AgreementKind { stable, non_stable };

struct AgreementContext {
  Coalition t;
  bool degenerate = false;            // T itself is a block of the partition
  std::vector<Coalition> blocks;      // distinct blocks of T's members
  std::vector<double> min_ratio;      // per block: min over members of v_i(B)/v_i(T)
  std::vector<double> max_ratio;      // per block: max of the same ratios

  int r_size() const { return static_cast<int>(blocks.size()); }
};

AgreementContext build_context(const HedonicGame& noisy_game, const Partition& pi_tilde,
                               Coalition t);

// ---------------------------------------------------------------------------
// Scalar-generic kernels. S is double or Rat; rational inputs make the
// enumeration oracle and the closed forms exactly comparable.
// ---------------------------------------------------------------------------

template <class S>
struct AgreementInputs {
  std::vector<S> support;  // ascending, positive
  std::vector<S> probs;    // sum to one
  std::vector<S> ratios;   // per-block aggregate: min for stable, max for non-stable
  bool degenerate = false;
};

/// Pair index sizes, entry [r][s] valid for r > s (ascending support).
/// stable:      count of blocks with ratio >= support[r] / support[s]
/// non-stable:  count of blocks with ratio <= support[s] / support[r]
template <class S>
std::vector<std::vector<int>> index_sizes(AgreementKind kind, const AgreementInputs<S>& in) {
  const int l = static_cast<int>(in.support.size());
  std::vector<std::vector<int>> sizes(l, std::vector<int>(l, 0));
  for (int r = 0; r < l; ++r) {
    for (int s = 0; s < r; ++s) {
      int count = 0;
      for (const S& rho : in.ratios) {
        // Cross-multiplied so the rational path stays exact.
        bool member = (kind == AgreementKind::stable) ? !(rho * in.support[s] < in.support[r])
                                                      : !(in.support[s] < rho * in.support[r]);
        if (member) ++count;
      }
      sizes[r][s] = count;
    }
  }
  return sizes;
}

/// Closed-form agreement probability (the l-support pairwise sum plus the
/// aligned-scaling tail). Degenerate contexts score one.
template <class S>
S agreement_closed(AgreementKind kind, const AgreementInputs<S>& in) {
  if (in.degenerate) return S(1);
  const int l = static_cast<int>(in.support.size());
  const int r_size = static_cast<int>(in.ratios.size());
  const auto sizes = index_sizes(kind, in);
  S acc = S(0);
  for (int r = 0; r < l; ++r) {
    for (int s = 0; s < r; ++s) {
      const int k = sizes[r][s];
      const S& p_hi = in.probs[r];
      const S& p_lo = in.probs[s];
      if (kind == AgreementKind::stable) {
        acc += pow_n(p_lo, r_size - k + 1) * (pow_n(p_hi + p_lo, k) - pow_n(p_lo, k));
      } else {
        acc += pow_n(p_hi, r_size - k + 1) * (pow_n(p_lo + p_hi, k) - pow_n(p_hi, k));
      }
    }
  }
  if (kind == AgreementKind::stable) {
    S prefix = S(0);
    for (int a = 0; a < l; ++a) {
      prefix += in.probs[a];
      acc += in.probs[a] * pow_n(prefix, r_size);
    }
  } else {
    S suffix = S(0);
    for (int a = l - 1; a >= 0; --a) {
      suffix += in.probs[a];
      acc += in.probs[a] * pow_n(suffix, r_size);
    }
  }
  return acc;
}

inline constexpr std::size_t kMaxOracleAssignments = 10'000'000;

/// Literal event probability: enumerate every joint assignment of support
/// values to the blocks and to T, test the event, and add up the qualifying
/// product probabilities. This is the ground truth the closed forms are
/// checked against.
template <class S>
S agreement_oracle(AgreementKind kind, const AgreementInputs<S>& in,
                   std::size_t max_assignments = kMaxOracleAssignments) {
  if (in.degenerate) return S(1);
  const std::size_t l = in.support.size();
  const std::size_t r_size = in.ratios.size();
  double budget = 1.0;
  for (std::size_t i = 0; i < r_size + 1; ++i) budget *= static_cast<double>(l);
  require(budget <= static_cast<double>(max_assignments), ErrorCode::enumeration_too_large,
          "oracle enumeration would exceed the assignment cap");

  // The observed-preference half of the event does not depend on the
  // assignment; when it fails the event is empty.
  for (const S& rho : in.ratios) {
    if (kind == AgreementKind::stable && rho < S(1)) return S(0);
    if (kind == AgreementKind::non_stable && S(1) < rho) return S(0);
  }

  std::vector<std::size_t> digit(r_size + 1, 0);  // [0..r_size) blocks, last = T
  S total = S(0);
  while (true) {
    const S& alpha_t = in.support[digit[r_size]];
    bool ok = true;
    for (std::size_t b = 0; b < r_size && ok; ++b) {
      const S& alpha_b = in.support[digit[b]];
      if (kind == AgreementKind::stable) {
        ok = !(in.ratios[b] * alpha_t < alpha_b);  // rho >= alpha(B)/alpha(T)
      } else {
        ok = !(alpha_b < in.ratios[b] * alpha_t);  // rho <= alpha(B)/alpha(T)
      }
    }
    if (ok) {
      S p = S(1);
      for (std::size_t i = 0; i < digit.size(); ++i) p = p * in.probs[digit[i]];
      total += p;
    }
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == l) digit[i++] = 0;
    if (i == digit.size()) break;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Double front-ends over games.
// ---------------------------------------------------------------------------

AgreementInputs<double> make_inputs(AgreementKind kind, const NoiseSpec& spec,
                                    const AgreementContext& ctx);

double f_T_closed(const NoiseSpec& spec, const AgreementContext& ctx);
double h_T_closed(const NoiseSpec& spec, const AgreementContext& ctx);
double f_T_oracle(const HedonicGame& noisy_game, const Partition& pi_tilde, Coalition t,
                  const NoiseSpec& spec);
double h_T_oracle(const HedonicGame& noisy_game, const Partition& pi_tilde, Coalition t,
                  const NoiseSpec& spec);

/// epsilon = 1 - (1 - eps_tilde) * agreement.
double prediction_epsilon(double eps_tilde, double agreement);

struct PredictionReport {
  AgreementKind mode = AgreementKind::stable;
  double eps_tilde = 0.0;
  double agreement = 0.0;
  double threshold = 0.0;  // zeta in stable mode, eta in non-stable mode
  double epsilon = 0.0;    // derived from the threshold
  bool robust = false;
};

PredictionReport robustness_verdict(double eps_tilde, double agreement, double threshold,
                                    AgreementKind mode);

/// Full per-coalition bundle as emitted by the analyze command.
struct CoalitionReport {
  Coalition t;
  bool degenerate = false;
  int r_size = 0;
  std::map<std::string, int> i_sizes;  // keyed "r,s", 1-based ascending support indices
  std::map<std::string, int> j_sizes;
  double f_closed = 0.0;
  double f_oracle = 0.0;
  double h_closed = 0.0;
  double h_oracle = 0.0;
  double epsilon = 0.0;
  bool verdict = false;
};

CoalitionReport analyze_coalition(const HedonicGame& noisy_game, const Partition& pi_tilde,
                                  Coalition t, const NoiseSpec& spec, double eps_tilde,
                                  double threshold, AgreementKind mode);

}  // namespace nhg

#endif  // NHG_CORE_AGREEMENT_HPP
