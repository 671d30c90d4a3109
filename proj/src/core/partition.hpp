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

#ifndef NHG_CORE_PARTITION_HPP
#define NHG_CORE_PARTITION_HPP

#include <string>
#include <vector>

#include "coalition.hpp"
#include "errors.hpp"

namespace nhg {

/// Exact cover of the agent set by pairwise-disjoint blocks. Blocks are kept
/// in canonical order (ascending lowest member), which doubles as the
/// restricted-growth encoding used for deterministic tie-breaking.
class Partition {
 public:
  Partition(int n, std::vector<Coalition> blocks);

  static Partition singletons(int n);
  static Partition from_rgs(const std::vector<int>& rgs);

  int agent_count() const { return n_; }
  const std::vector<Coalition>& blocks() const { return blocks_; }
  int block_index_of(int agent) const;
  Coalition block_of(int agent) const { return blocks_[block_index_of(agent)]; }

  /// Canonical restricted-growth string: rgs[i] is the index of agent i's
  /// block after canonical ordering; rgs[0] == 0 and rgs[i] <= 1 + max prefix.
  std::vector<int> rgs() const;

  std::string str() const;

  bool operator==(const Partition& o) const {
    return n_ == o.n_ && blocks_ == o.blocks_;
  }
  bool operator!=(const Partition& o) const { return !(*this == o); }

 private:
  int n_ = 0;
  std::vector<Coalition> blocks_;
  std::vector<int> block_index_;  // per agent
};

}  // namespace nhg

#endif  // NHG_CORE_PARTITION_HPP
