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

#ifndef NHG_CORE_GAME_HPP
#define NHG_CORE_GAME_HPP

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "coalition.hpp"
#include "errors.hpp"

namespace nhg {

enum class Coverage { full, partial };

/// Cardinal hedonic game: a positive value v_i(S) for each stored pair of an
/// agent i and a coalition S containing it. Full-coverage games promise an
/// entry for every legal (i, S); partial games report absence explicitly via
/// missing_value instead of defaulting.
class HedonicGame {
 public:
  HedonicGame(int n, Coverage coverage) : n_(n), coverage_(coverage) {
    require(n >= 1 && n <= 31, ErrorCode::invalid_argument, "agent count out of range");
  }

  int agent_count() const { return n_; }
  Coverage coverage() const { return coverage_; }
  std::size_t entry_count() const { return values_.size(); }

  void set_value(int agent, Coalition s, double v) {
    check_pair(agent, s);
    require(v > 0.0, ErrorCode::invalid_argument,
            "value must be positive for agent " + std::to_string(agent) + " in " + s.str());
    values_[key(agent, s)] = v;
  }

  bool has_value(int agent, Coalition s) const {
    check_pair(agent, s);
    return values_.count(key(agent, s)) != 0;
  }

  double value(int agent, Coalition s) const {
    check_pair(agent, s);
    auto it = values_.find(key(agent, s));
    require(it != values_.end(), ErrorCode::missing_value,
            "no value for agent " + std::to_string(agent) + " in coalition " + s.str());
    return it->second;
  }

  /// True when every legal (agent, coalition) pair has a stored value.
  bool is_complete() const {
    std::size_t expected = 0;
    for (int i = 0; i < n_; ++i) expected += std::size_t{1} << (n_ - 1);
    return values_.size() == expected;
  }

  /// All entries as (agent, coalition, value), sorted for stable serialization.
  std::vector<std::tuple<int, Coalition, double>> entries() const {
    std::vector<std::tuple<int, Coalition, double>> out;
    out.reserve(values_.size());
    for (const auto& [k, v] : values_) {
      out.emplace_back(static_cast<int>(k >> 32), Coalition(static_cast<std::uint32_t>(k)), v);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
      return std::get<1>(a).mask() < std::get<1>(b).mask();
    });
    return out;
  }

  HedonicGame scaled(double factor) const {
    require(factor > 0.0, ErrorCode::invalid_argument, "scale factor must be positive");
    HedonicGame out(n_, coverage_);
    for (const auto& [k, v] : values_) out.values_[k] = v * factor;
    return out;
  }

 private:
  static std::uint64_t key(int agent, Coalition s) {
    return (std::uint64_t{static_cast<std::uint32_t>(agent)} << 32) | s.mask();
  }

  void check_pair(int agent, Coalition s) const {
    require(!s.empty(), ErrorCode::invalid_argument, "empty coalition in value query");
    require(s.subset_of(Coalition::full(n_)), ErrorCode::invalid_argument,
            "coalition " + s.str() + " exceeds agent set");
    require(s.contains(agent), ErrorCode::agent_not_member,
            "agent " + std::to_string(agent) + " is not a member of " + s.str());
  }

  int n_;
  Coverage coverage_;
  std::unordered_map<std::uint64_t, double> values_;
};

}  // namespace nhg

#endif  // NHG_CORE_GAME_HPP
