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

#include "partition.hpp"

#include <algorithm>

namespace nhg {

Partition::Partition(int n, std::vector<Coalition> blocks) : n_(n), blocks_(std::move(blocks)) {
  require(n >= 1 && n <= 31, ErrorCode::invalid_argument, "agent count out of range");
  std::uint32_t seen = 0;
  for (const Coalition& b : blocks_) {
    require(!b.empty(), ErrorCode::invalid_argument, "partition block must be non-empty");
    require(b.subset_of(Coalition::full(n)), ErrorCode::invalid_argument,
            "block " + b.str() + " exceeds agent set");
    require(!Coalition(seen).intersects(b), ErrorCode::invalid_argument,
            "blocks overlap at " + b.str());
    seen |= b.mask();
  }
  require(seen == Coalition::full(n).mask(), ErrorCode::invalid_argument,
          "blocks do not cover the agent set");
  std::sort(blocks_.begin(), blocks_.end(),
            [](Coalition a, Coalition b) { return a.lowest_member() < b.lowest_member(); });
  block_index_.assign(n, -1);
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    for (int a : blocks_[k].members()) block_index_[a] = static_cast<int>(k);
  }
}

Partition Partition::singletons(int n) {
  std::vector<Coalition> blocks;
  blocks.reserve(n);
  for (int i = 0; i < n; ++i) blocks.push_back(Coalition::of({i}));
  return Partition(n, std::move(blocks));
}

Partition Partition::from_rgs(const std::vector<int>& rgs) {
  require(!rgs.empty(), ErrorCode::invalid_argument, "empty partition encoding");
  int nblocks = 0;
  for (std::size_t i = 0; i < rgs.size(); ++i) {
    require(rgs[i] >= 0 && rgs[i] <= nblocks, ErrorCode::invalid_argument,
            "not a restricted-growth string");
    if (rgs[i] == nblocks) ++nblocks;
  }
  std::vector<Coalition> blocks(nblocks);
  for (std::size_t i = 0; i < rgs.size(); ++i) blocks[rgs[i]] = blocks[rgs[i]].with(static_cast<int>(i));
  return Partition(static_cast<int>(rgs.size()), std::move(blocks));
}

int Partition::block_index_of(int agent) const {
  require(agent >= 0 && agent < n_, ErrorCode::invalid_argument, "agent index out of range");
  return block_index_[agent];
}

std::vector<int> Partition::rgs() const {
  return block_index_;
}

std::string Partition::str() const {
  std::string s = "{";
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (k > 0) s += ",";
    s += blocks_[k].str();
  }
  return s + "}";
}

}  // namespace nhg
