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

#include "sampling.hpp"

#include <cmath>

namespace nhg {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SamplingSpec SamplingSpec::uniform_nonempty(int n, std::uint64_t seed) {
  require(n >= 1 && n <= Coalition::kMaxExhaustiveAgents, ErrorCode::invalid_argument,
          "uniform sampling needs 1 <= n <= 24");
  return SamplingSpec(Kind::uniform_nonempty, n, seed);
}

SamplingSpec SamplingSpec::fixed_list(int n, std::vector<Coalition> coalitions,
                                      std::uint64_t seed) {
  require(!coalitions.empty(), ErrorCode::invalid_argument, "coalition list must be non-empty");
  for (Coalition c : coalitions) {
    require(!c.empty() && c.subset_of(Coalition::full(n)), ErrorCode::invalid_argument,
            "coalition " + c.str() + " not valid for n=" + std::to_string(n));
  }
  SamplingSpec spec(Kind::fixed_list, n, seed);
  spec.coalitions_ = std::move(coalitions);
  return spec;
}

SamplingSpec SamplingSpec::weighted(int n, std::vector<Coalition> coalitions,
                                    std::vector<double> weights, std::uint64_t seed) {
  SamplingSpec spec = fixed_list(n, std::move(coalitions), seed);
  require(weights.size() == spec.coalitions_.size(), ErrorCode::invalid_argument,
          "weights and coalitions differ in length");
  double total = 0.0;
  for (double w : weights) {
    require(w >= 0.0, ErrorCode::invalid_argument, "weights must be non-negative");
    total += w;
  }
  require(std::abs(total - 1.0) <= 1e-12, ErrorCode::invalid_argument,
          "weights must sum to 1 within 1e-12");
  spec.kind_ = Kind::weighted;
  spec.weights_ = std::move(weights);
  return spec;
}

std::vector<Coalition> sample_coalitions(const SamplingSpec& spec, std::size_t m) {
  std::vector<Coalition> out;
  out.reserve(m);
  Rng rng(spec.seed());
  switch (spec.kind()) {
    case SamplingSpec::Kind::uniform_nonempty: {
      std::uint64_t count = (std::uint64_t{1} << spec.agent_count()) - 1;
      for (std::size_t k = 0; k < m; ++k) {
        out.push_back(Coalition(static_cast<std::uint32_t>(1 + rng.below(count))));
      }
      break;
    }
    case SamplingSpec::Kind::fixed_list: {
      const auto& list = spec.coalitions();
      for (std::size_t k = 0; k < m; ++k) out.push_back(list[rng.below(list.size())]);
      break;
    }
    case SamplingSpec::Kind::weighted: {
      const auto& list = spec.coalitions();
      const auto& w = spec.weights();
      for (std::size_t k = 0; k < m; ++k) {
        double u = rng.unit();
        double acc = 0.0;
        std::size_t pick = list.size() - 1;
        for (std::size_t j = 0; j < w.size(); ++j) {
          acc += w[j];
          if (u < acc) {
            pick = j;
            break;
          }
        }
        out.push_back(list[pick]);
      }
      break;
    }
  }
  return out;
}

}  // namespace nhg
