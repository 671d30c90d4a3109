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

#ifndef NHG_CORE_SAMPLING_HPP
#define NHG_CORE_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "coalition.hpp"
#include "errors.hpp"

namespace nhg {

/// Deterministic draw helpers over mt19937_64. The standard engine's raw
/// output sequence is portable; the derived draws below avoid the
/// implementation-defined std distributions so byte-identical replay holds
/// across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform integer in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    require(bound >= 1, ErrorCode::invalid_argument, "bound must be positive");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = eng_();
    while (x >= limit) x = eng_();
    return x % bound;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 eng_;
};

/// One splitmix64 round; used to derive independent per-stream seeds so that
/// parallel generation matches serial generation.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Distribution over coalitions plus the seed that makes draws reproducible.
class SamplingSpec {
 public:
  enum class Kind { uniform_nonempty, fixed_list, weighted };

  static SamplingSpec uniform_nonempty(int n, std::uint64_t seed = 0);
  static SamplingSpec fixed_list(int n, std::vector<Coalition> coalitions, std::uint64_t seed = 0);
  static SamplingSpec weighted(int n, std::vector<Coalition> coalitions,
                               std::vector<double> weights, std::uint64_t seed = 0);

  Kind kind() const { return kind_; }
  int agent_count() const { return n_; }
  std::uint64_t seed() const { return seed_; }
  void set_seed(std::uint64_t seed) { seed_ = seed; }
  const std::vector<Coalition>& coalitions() const { return coalitions_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  SamplingSpec(Kind kind, int n, std::uint64_t seed) : kind_(kind), n_(n), seed_(seed) {}

  Kind kind_;
  int n_;
  std::uint64_t seed_;
  std::vector<Coalition> coalitions_;
  std::vector<double> weights_;  // cumulative form kept private to sample()
};

/// m i.i.d. draws; same spec and seed always yield the identical sequence.
std::vector<Coalition> sample_coalitions(const SamplingSpec& spec, std::size_t m);

}  // namespace nhg

#endif  // NHG_CORE_SAMPLING_HPP
