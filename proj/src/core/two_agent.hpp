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

#ifndef NHG_CORE_TWO_AGENT_HPP
#define NHG_CORE_TWO_AGENT_HPP

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "game.hpp"
#include "noise.hpp"
#include "rational.hpp"
#include "regimes.hpp"

namespace nhg {

/// Full-information two-agent noisy game. The two ordinal comparisons fix the
/// game id: 1 both prefer the pair, 2 both prefer staying alone, 3 only agent
/// 1 prefers staying alone, 4 only agent 2 does. Value ties are refused.
class TwoAgentGame {
 public:
  TwoAgentGame(double v1_own, double v2_own, double v1_both, double v2_both);
  static TwoAgentGame from_game(const HedonicGame& game);

  int id() const { return id_; }
  double v1_own() const { return v1_own_; }
  double v2_own() const { return v2_own_; }
  double v1_both() const { return v1_both_; }
  double v2_both() const { return v2_both_; }

  double ratio1() const { return v1_both_ / v1_own_; }
  double ratio2() const { return v2_both_ / v2_own_; }
  double r_max() const { return ratio1() > ratio2() ? ratio1() : ratio2(); }
  double r_min() const { return ratio1() < ratio2() ? ratio1() : ratio2(); }

  /// Core partition of the noisy game: the pair for game 1, singletons else.
  bool noisy_core_is_pair() const { return id_ == 1; }

 private:
  double v1_own_, v2_own_, v1_both_, v2_both_;
  int id_;
};

/// Piecewise prediction probability for the {1, alpha} model, alpha > 1.
double predict_prob_2support(const TwoAgentGame& game, double p, double alpha);

/// Three-point model in the parametrization used for the two-agent analysis.
struct ThreeSupportSpec {
  double alpha1 = 2.0;  // > 1
  double alpha2 = 0.5;  // in (0,1)
  double p1 = 0.0;
  double p2 = 0.0;      // P[1] = 1 - p1 - p2

  void validate() const;
  NoiseSpec noise_spec() const { return NoiseSpec::three_support(alpha1, alpha2, p1, p2); }
};

/// Cubic surface giving the game-1 prediction probability on the fully
/// strict branch of the three-point model.
double g_three_support(double p1, double p2);

/// Game-1 prediction probability under the three-point model: the closed
/// forms on the two extreme branches, the case enumeration in between.
double predict_prob_3support(const TwoAgentGame& game, const ThreeSupportSpec& spec);

/// One row of the case table: the factors assigned to {0}, {1} and {0,1},
/// the row probability, the de-noised core partition (pair or singletons),
/// and whether it matches the noisy core partition.
template <class S>
struct CaseRowT {
  std::array<S, 3> alpha;
  S probability;
  bool pair_forms;
  bool agrees;
};
using CaseRow = CaseRowT<double>;
using CaseRowQ = CaseRowT<Rat>;

/// Enumerates all l^3 joint assignments in the canonical case order (see
/// case_level_order) and classifies each case. Exact ties after de-noising
/// are refused.
std::vector<CaseRow> enumerate_cases(const TwoAgentGame& game, const NoiseSpec& spec);

/// Rational-arithmetic variant; values = {v1_own, v2_own, v1_both, v2_both}.
std::vector<CaseRowQ> enumerate_cases_exact(const std::array<Rat, 4>& values,
                                            const std::vector<Rat>& support,
                                            const std::vector<Rat>& probs);

template <class S>
S aggregate_agreement(const std::vector<CaseRowT<S>>& rows) {
  S total = S(0);
  for (const auto& row : rows) {
    if (row.agrees) total += row.probability;
  }
  return total;
}

/// Display order of the support for case tables: the baseline factor 1 first
/// (when present), inflating factors ascending, deflating factors
/// descending. Returns display index -> support index.
template <class S>
std::vector<int> display_permutation(const std::vector<S>& support) {
  std::vector<int> ones, ups, downs;
  for (int i = 0; i < static_cast<int>(support.size()); ++i) {
    if (support[i] == S(1)) {
      ones.push_back(i);
    } else if (support[i] > S(1)) {
      ups.push_back(i);
    } else {
      downs.push_back(i);
    }
  }
  std::vector<int> perm = ones;
  perm.insert(perm.end(), ups.begin(), ups.end());
  perm.insert(perm.end(), downs.rbegin(), downs.rend());
  return perm;
}

/// Canonical ordering of case triples (display levels for {0}, {1}, {0,1}).
/// The two- and three-level tables follow the standard enumeration order of
/// this model family; other sizes fall back to lexicographic order.
std::vector<std::array<int, 3>> case_level_order(int l);

/// Superlevel set over p of the active two-support branch curve.
Region1D regime_1d_two_agent(const TwoAgentGame& game, double alpha, double zeta,
                             int resolution = kDefaultResolution1D);

/// Safety value (global minimum over p) of the active branch curve.
SafetyValue safety_two_agent(const TwoAgentGame& game, double alpha,
                             int resolution = kDefaultResolution1D);

struct BranchCurve {
  std::string name;
  std::function<double(double)> fn;
};

/// The closed-form branch curves of the game's two-support analysis.
std::vector<BranchCurve> branch_curves(const TwoAgentGame& game);

}  // namespace nhg

#endif  // NHG_CORE_TWO_AGENT_HPP
