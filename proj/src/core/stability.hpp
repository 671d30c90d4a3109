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

#ifndef NHG_CORE_STABILITY_HPP
#define NHG_CORE_STABILITY_HPP

#include <optional>

#include "game.hpp"
#include "partition.hpp"

namespace nhg {

enum class Preference { first_better, second_better, indifferent };

/// Compares v_agent(s) against v_agent(t); indifferent only on exact equality.
Preference prefers(const HedonicGame& game, int agent, Coalition s, Coalition t);

/// True iff every member of t strictly prefers t to its current block.
bool core_blocks(const HedonicGame& game, const Partition& pi, Coalition t);

/// Exhaustive scan of all non-empty coalitions; full coverage, n <= 24.
bool is_core_stable(const HedonicGame& game, const Partition& pi);

/// Enumerates partitions in restricted-growth order and returns the first
/// core-stable one; nullopt when the core is empty. Full coverage, n <= 12.
std::optional<Partition> find_core_partition(const HedonicGame& game);

}  // namespace nhg

#endif  // NHG_CORE_STABILITY_HPP
