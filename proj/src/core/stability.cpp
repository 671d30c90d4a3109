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

#include "stability.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

namespace nhg {

Preference prefers(const HedonicGame& game, int agent, Coalition s, Coalition t) {
  double vs = game.value(agent, s);
  double vt = game.value(agent, t);
  if (vs > vt) return Preference::first_better;
  if (vt > vs) return Preference::second_better;
  return Preference::indifferent;
}

bool core_blocks(const HedonicGame& game, const Partition& pi, Coalition t) {
  require(pi.agent_count() == game.agent_count(), ErrorCode::invalid_argument,
          "partition and game disagree on agent count");
  require(!t.empty(), ErrorCode::invalid_argument, "empty coalition cannot block");
  for (int i : t.members()) {
    // Strict improvement required for every member; exact comparison, no fuzz.
    if (!(game.value(i, t) > game.value(i, pi.block_of(i)))) return false;
  }
  return true;
}

bool is_core_stable(const HedonicGame& game, const Partition& pi) {
  int n = game.agent_count();
  require(pi.agent_count() == n, ErrorCode::invalid_argument,
          "partition and game disagree on agent count");
  require(game.coverage() == Coverage::full, ErrorCode::coverage_insufficient,
          "core stability scan needs a full-coverage game");
  require(n <= Coalition::kMaxExhaustiveAgents, ErrorCode::instance_too_large,
          "coalition scan capped at " + std::to_string(Coalition::kMaxExhaustiveAgents) +
              " agents");
  std::vector<double> own(n);
  for (int i = 0; i < n; ++i) own[i] = game.value(i, pi.block_of(i));
  const std::uint32_t all = Coalition::full(n).mask();
  for (std::uint32_t m = 1; m <= all; ++m) {
    bool blocks = true;
    for (std::uint32_t r = m; r != 0; r &= r - 1) {
      int i = std::countr_zero(r);
      if (!(game.value(i, Coalition(m)) > own[i])) {
        blocks = false;
        break;
      }
    }
    if (blocks) return false;
  }
  return true;
}

namespace {

constexpr int kMaxPartitionAgents = 12;

// Dense value table indexed by [agent][mask]; missing entries are NaN.
std::vector<std::vector<double>> dense_values(const HedonicGame& game) {
  int n = game.agent_count();
  std::vector<std::vector<double>> tab(
      n, std::vector<double>(std::size_t{1} << n, std::numeric_limits<double>::quiet_NaN()));
  for (const auto& [agent, coal, v] : game.entries()) tab[agent][coal.mask()] = v;
  return tab;
}

bool stable_under_table(const std::vector<std::vector<double>>& tab, int n,
                        const std::vector<int>& block_of_agent,
                        const std::vector<std::uint32_t>& block_masks) {
  std::vector<double> own(n);
  for (int i = 0; i < n; ++i) {
    double v = tab[i][block_masks[block_of_agent[i]]];
    require(!std::isnan(v), ErrorCode::missing_value, "value table is incomplete");
    own[i] = v;
  }
  const std::uint32_t all = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t m = 1; m <= all; ++m) {
    bool blocks = true;
    for (std::uint32_t r = m; r != 0; r &= r - 1) {
      int i = std::countr_zero(r);
      double v = tab[i][m];
      require(!std::isnan(v), ErrorCode::missing_value, "value table is incomplete");
      if (!(v > own[i])) {
        blocks = false;
        break;
      }
    }
    if (blocks) return false;
  }
  return true;
}

}  // namespace

std::optional<Partition> find_core_partition(const HedonicGame& game) {
  int n = game.agent_count();
  require(game.coverage() == Coverage::full, ErrorCode::coverage_insufficient,
          "partition enumeration needs a full-coverage game");
  require(n <= kMaxPartitionAgents, ErrorCode::instance_too_large,
          "partition enumeration capped at " + std::to_string(kMaxPartitionAgents) + " agents");
  auto tab = dense_values(game);

  // Lexicographic walk over restricted-growth strings; first stable partition
  // is the canonical (smallest-encoding) winner.
  std::vector<int> rgs(n, 0);
  while (true) {
    int nblocks = 0;
    for (int i = 0; i < n; ++i) nblocks = std::max(nblocks, rgs[i] + 1);
    std::vector<std::uint32_t> block_masks(nblocks, 0);
    for (int i = 0; i < n; ++i) block_masks[rgs[i]] |= std::uint32_t{1} << i;
    if (stable_under_table(tab, n, rgs, block_masks)) {
      std::vector<Coalition> blocks;
      blocks.reserve(block_masks.size());
      for (std::uint32_t m : block_masks) blocks.push_back(Coalition(m));
      return Partition(n, std::move(blocks));
    }
    // Advance to the next restricted-growth string.
    int i = n - 1;
    for (; i >= 1; --i) {
      int cap = 0;
      for (int j = 0; j < i; ++j) cap = std::max(cap, rgs[j] + 1);
      if (rgs[i] < cap) {
        ++rgs[i];
        for (int j = i + 1; j < n; ++j) rgs[j] = 0;
        break;
      }
    }
    if (i == 0) break;
  }
  return std::nullopt;
}

}  // namespace nhg
