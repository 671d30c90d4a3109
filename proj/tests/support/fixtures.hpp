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

#ifndef NHG_TESTS_SUPPORT_FIXTURES_HPP
#define NHG_TESTS_SUPPORT_FIXTURES_HPP

#include <vector>

#include "agreement.hpp"
#include "game.hpp"
#include "partition.hpp"
#include "rational.hpp"

namespace nhg::fixtures {

// Three-manufacturer example, cardinalized 4 > 3 > 2 > 1 down each ranking.
// Noisy variant: both 0 and 1 put the pair {0,1} first; 2 wants everyone.
inline HedonicGame motivating_noisy() {
  HedonicGame g(3, Coverage::full);
  Coalition c0 = Coalition::of({0}), c1 = Coalition::of({1}), c2 = Coalition::of({2});
  Coalition c01 = Coalition::of({0, 1}), c02 = Coalition::of({0, 2}),
            c12 = Coalition::of({1, 2}), all3 = Coalition::of({0, 1, 2});
  g.set_value(0, c01, 4);
  g.set_value(0, c0, 3);
  g.set_value(0, all3, 2);
  g.set_value(0, c02, 1);
  g.set_value(1, c01, 4);
  g.set_value(1, c1, 3);
  g.set_value(1, all3, 2);
  g.set_value(1, c12, 1);
  g.set_value(2, all3, 4);
  g.set_value(2, c12, 3);
  g.set_value(2, c02, 2);
  g.set_value(2, c2, 1);
  return g;
}

// Noise-free variant: agent 0 would rather stay alone than pair up.
inline HedonicGame motivating_noise_free() {
  HedonicGame g(3, Coverage::full);
  Coalition c0 = Coalition::of({0}), c1 = Coalition::of({1}), c2 = Coalition::of({2});
  Coalition c01 = Coalition::of({0, 1}), c02 = Coalition::of({0, 2}),
            c12 = Coalition::of({1, 2}), all3 = Coalition::of({0, 1, 2});
  g.set_value(0, c0, 4);
  g.set_value(0, c01, 3);
  g.set_value(0, all3, 2);
  g.set_value(0, c02, 1);
  g.set_value(1, c01, 4);
  g.set_value(1, c1, 3);
  g.set_value(1, all3, 2);
  g.set_value(1, c12, 1);
  g.set_value(2, all3, 4);
  g.set_value(2, c12, 3);
  g.set_value(2, c02, 2);
  g.set_value(2, c2, 1);
  return g;
}

inline Partition pair_and_loner() {
  return Partition(3, {Coalition::of({0, 1}), Coalition::of({2})});
}

// Agreement fixture: r blocks {t_i, filler} with chosen block ratios; T is
// the set of the t-agents, so it straddles every block without equaling one.
// ratio[i] = v(t_i, block_i) / v(t_i, T).
struct RatioFixture {
  HedonicGame game;
  Partition pi;
  Coalition t;
};

inline RatioFixture ratio_fixture(const std::vector<double>& ratios) {
  int r = static_cast<int>(ratios.size());
  int n = 2 * r;
  HedonicGame game(n, Coverage::partial);
  std::vector<Coalition> blocks;
  Coalition t;
  for (int i = 0; i < r; ++i) t = t.with(i);
  const double base = 16.0;  // power of two keeps ratio arithmetic exact
  for (int i = 0; i < r; ++i) {
    Coalition block = Coalition::of({i, r + i});
    blocks.push_back(block);
    game.set_value(i, t, base);
    game.set_value(i, block, base * ratios[i]);
  }
  return RatioFixture{std::move(game), Partition(n, std::move(blocks)), t};
}

inline AgreementInputs<Rat> exact_inputs(const std::vector<Rat>& ratios,
                                         const std::vector<Rat>& support,
                                         const std::vector<Rat>& probs) {
  AgreementInputs<Rat> in;
  in.support = support;
  in.probs = probs;
  in.ratios = ratios;
  in.degenerate = false;
  return in;
}

}  // namespace nhg::fixtures

#endif  // NHG_TESTS_SUPPORT_FIXTURES_HPP
