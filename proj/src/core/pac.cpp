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

#include "pac.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace nhg {

void PacParams::validate() const {
  require(eps_tilde > 0.0 && eps_tilde < 1.0, ErrorCode::invalid_argument,
          "eps_tilde must lie in (0,1)");
  require(delta > 0.0 && delta < 1.0, ErrorCode::invalid_argument, "delta must lie in (0,1)");
  require(zeta > 0.0 && zeta <= 1.0, ErrorCode::invalid_argument, "zeta must lie in (0,1]");
  require(n >= 1, ErrorCode::invalid_argument, "agent count must be positive");
}

HedonicGame game_from_sample(const Sample& sample, int n) {
  require(!sample.observations.empty(), ErrorCode::empty_sample, "sample has no observations");
  HedonicGame partial(n, Coverage::partial);
  for (const Observation& obs : sample.observations) {
    for (const auto& [agent, v] : obs.values) {
      if (partial.has_value(agent, obs.coalition)) {
        double prev = partial.value(agent, obs.coalition);
        require(prev == v, ErrorCode::invalid_argument,
                "conflicting duplicate observation for agent " + std::to_string(agent) +
                    " in " + obs.coalition.str());
        continue;
      }
      partial.set_value(agent, obs.coalition, v);
    }
  }
  if (!partial.is_complete()) return partial;
  HedonicGame full(n, Coverage::full);
  for (const auto& [agent, coal, v] : partial.entries()) full.set_value(agent, coal, v);
  return full;
}

Sample full_sample(const HedonicGame& game) {
  std::map<std::uint32_t, Observation> byCoalition;
  for (const auto& [agent, coal, v] : game.entries()) {
    Observation& obs = byCoalition[coal.mask()];
    obs.coalition = coal;
    obs.values.emplace_back(agent, v);
  }
  Sample out;
  for (auto& [mask, obs] : byCoalition) {
    std::sort(obs.values.begin(), obs.values.end());
    out.observations.push_back(std::move(obs));
  }
  return out;
}

namespace {

// Closure of {start} under estimated choice sets: repeatedly absorb the
// members of each contained agent's best observed coalition.
Coalition choice_closure(int start, const std::vector<std::optional<Coalition>>& choice) {
  Coalition closed = Coalition::of({start});
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i : closed.members()) {
      if (!choice[i].has_value()) continue;
      std::uint32_t next = closed.mask() | choice[i]->mask();
      if (next != closed.mask()) {
        closed = Coalition(next);
        grew = true;
      }
    }
  }
  return closed;
}

Partition learn_top_cover(const Sample& sample, int n) {
  // Working copy of the observations; fixed agents get stripped out.
  std::vector<Observation> obs = sample.observations;
  Coalition active = Coalition::full(n);
  std::vector<Coalition> fixed_blocks;

  while (!active.empty()) {
    // Estimated choice set per active agent: highest-valued observed
    // coalition still containing it; value ties break toward the smaller
    // coalition mask.
    std::vector<std::optional<Coalition>> choice(n);
    std::vector<double> best(n, 0.0);
    for (const Observation& o : obs) {
      if (o.coalition.empty()) continue;
      for (const auto& [agent, v] : o.values) {
        if (!o.coalition.contains(agent) || !active.contains(agent)) continue;
        if (!choice[agent].has_value() || v > best[agent] ||
            (v == best[agent] && o.coalition.mask() < choice[agent]->mask())) {
          choice[agent] = o.coalition;
          best[agent] = v;
        }
      }
    }

    // Smallest closure wins; scanning by ascending agent index makes the
    // tie-break deterministic.
    std::optional<Coalition> block;
    for (int i : active.members()) {
      if (!choice[i].has_value()) continue;
      Coalition c = choice_closure(i, choice);
      if (!block.has_value() || c.size() < block->size()) block = c;
    }
    if (!block.has_value()) {
      // No observations left: remaining agents become singletons.
      for (int i : active.members()) fixed_blocks.push_back(Coalition::of({i}));
      break;
    }

    fixed_blocks.push_back(*block);
    active = active.minus(*block);
    for (Observation& o : obs) {
      if (!o.coalition.intersects(*block)) continue;
      o.coalition = o.coalition.minus(*block);
      std::erase_if(o.values, [&](const auto& kv) { return block->contains(kv.first); });
    }
  }
  return Partition(n, std::move(fixed_blocks));
}

}  // namespace

std::optional<Partition> learn_partition(const Sample& sample, int n, LearnBackend backend) {
  require(n >= 1, ErrorCode::invalid_argument, "agent count must be positive");
  require(!sample.observations.empty(), ErrorCode::empty_sample, "sample has no observations");
  if (backend == LearnBackend::exact) {
    HedonicGame game = game_from_sample(sample, n);
    require(game.coverage() == Coverage::full, ErrorCode::coverage_insufficient,
            "exact learning needs a sample covering every coalition");
    return find_core_partition(game);
  }
  return learn_top_cover(sample, n);
}

double empirical_blocking_rate(const Partition& pi, const SamplingSpec& spec,
                               const HedonicGame& game, std::size_t m_eval) {
  require(m_eval >= 1, ErrorCode::invalid_argument, "m_eval must be positive");
  std::size_t blocked = 0;
  for (Coalition t : sample_coalitions(spec, m_eval)) {
    if (core_blocks(game, pi, t)) ++blocked;
  }
  return static_cast<double>(blocked) / static_cast<double>(m_eval);
}

namespace {

double top_responsive_coefficient(int n) {
  double nn = static_cast<double>(n);
  return 2.0 * nn * nn * nn + 2.0 * nn * nn * nn * nn;
}

double log_term(int n, double delta) {
  double nn = static_cast<double>(n);
  return std::log(2.0 * nn * nn * nn / delta);
}

}  // namespace

std::uint64_t sample_complexity_top_responsive(int n, double eps, double delta) {
  require(n >= 1, ErrorCode::invalid_argument, "agent count must be positive");
  require(eps > 0.0 && eps < 1.0, ErrorCode::invalid_argument, "eps must lie in (0,1)");
  require(delta > 0.0 && delta < 1.0, ErrorCode::invalid_argument, "delta must lie in (0,1)");
  // Ceiling applied once, after the whole product.
  double m = top_responsive_coefficient(n) * (1.0 / eps) * log_term(n, delta);
  return static_cast<std::uint64_t>(std::ceil(m));
}

std::pair<double, double> sample_bounds(std::uint64_t m, const PacParams& params) {
  params.validate();
  double et = params.eps_tilde;
  double z = params.zeta;
  double extra = top_responsive_coefficient(params.n) * ((1.0 - et) + et * z) /
                 (et * (1.0 + et * z)) * log_term(params.n, params.delta);
  double lower = static_cast<double>(m) * z;
  double upper = static_cast<double>(m) + extra;
  return {lower, upper};
}

double epsilon_after_more_samples(double eps_tilde, double eps_tilde_prime, double agreement) {
  require(eps_tilde >= 0.0 && eps_tilde < 1.0, ErrorCode::invalid_argument,
          "eps_tilde must lie in [0,1)");
  require(eps_tilde_prime >= 0.0 && eps_tilde_prime <= eps_tilde, ErrorCode::invalid_argument,
          "eps_tilde_prime must lie in [0, eps_tilde]");
  require(agreement >= 0.0 && agreement <= 1.0, ErrorCode::invalid_argument,
          "agreement must lie in [0,1]");
  return 1.0 - (1.0 - (eps_tilde - eps_tilde_prime)) * agreement;
}

}  // namespace nhg
