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

#ifndef NHG_CORE_COALITION_HPP
#define NHG_CORE_COALITION_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "errors.hpp"

namespace nhg {

/// Agent subset in canonical bitmask form; agent i corresponds to bit i.
/// Exhaustive coalition scans are capped at kMaxExhaustiveAgents agents.
class Coalition {
 public:
  static constexpr int kMaxExhaustiveAgents = 24;

  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint32_t mask) : mask_(mask) {}

  static Coalition of(std::initializer_list<int> agents) {
    Coalition c;
    for (int a : agents) c = c.with(a);
    return c;
  }

  static Coalition from_members(const std::vector<int>& agents) {
    Coalition c;
    for (int a : agents) c = c.with(a);
    return c;
  }

  static Coalition full(int n) {
    require(n >= 0 && n <= 31, ErrorCode::invalid_argument, "agent count out of range");
    return Coalition(n == 0 ? 0u : (std::uint32_t{1} << n) - 1u);
  }

  std::uint32_t mask() const { return mask_; }
  bool empty() const { return mask_ == 0; }
  int size() const { return std::popcount(mask_); }

  bool contains(int agent) const {
    return agent >= 0 && agent < 32 && ((mask_ >> agent) & 1u) != 0;
  }
  bool subset_of(Coalition o) const { return (mask_ & ~o.mask_) == 0; }
  bool intersects(Coalition o) const { return (mask_ & o.mask_) != 0; }

  Coalition with(int agent) const {
    require(agent >= 0 && agent < 32, ErrorCode::invalid_argument, "agent index out of range");
    return Coalition(mask_ | (std::uint32_t{1} << agent));
  }
  Coalition minus(Coalition o) const { return Coalition(mask_ & ~o.mask_); }
  Coalition intersect(Coalition o) const { return Coalition(mask_ & o.mask_); }

  int lowest_member() const {
    require(mask_ != 0, ErrorCode::invalid_argument, "empty coalition has no members");
    return std::countr_zero(mask_);
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (int a : members()) {
      if (!first) s += ",";
      s += std::to_string(a);
      first = false;
    }
    return s + "}";
  }

  auto operator<=>(const Coalition&) const = default;

 private:
  std::uint32_t mask_ = 0;
};

}  // namespace nhg

#endif  // NHG_CORE_COALITION_HPP
