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

#include "nhg/nhg.h"

#include <cstring>
#include <new>
#include <string>

#include "agreement.hpp"
#include "json_io.hpp"
#include "pac.hpp"
#include "regimes.hpp"
#include "stability.hpp"
#include "two_agent.hpp"

using namespace nhg;

// Opaque handle definitions: thin owning wrappers over the core types.
struct nhg_game {
  HedonicGame impl;
};
struct nhg_partition {
  Partition impl;
};
struct nhg_noise_spec {
  NoiseSpec impl;
};
struct nhg_noise_assignment {
  NoiseAssignment impl;
};
struct nhg_sampling_spec {
  SamplingSpec impl;
};
struct nhg_sample {
  Sample impl;
};

namespace {

thread_local std::string g_last_error;

nhg_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument:
      return NHG_ERR_INVALID_ARGUMENT;
    case ErrorCode::parse_error:
      return NHG_ERR_PARSE;
    case ErrorCode::missing_value:
      return NHG_ERR_MISSING_VALUE;
    case ErrorCode::agent_not_member:
      return NHG_ERR_AGENT_NOT_MEMBER;
    case ErrorCode::coverage_insufficient:
      return NHG_ERR_COVERAGE_INSUFFICIENT;
    case ErrorCode::instance_too_large:
      return NHG_ERR_INSTANCE_TOO_LARGE;
    case ErrorCode::enumeration_too_large:
      return NHG_ERR_ENUMERATION_TOO_LARGE;
    case ErrorCode::missing_assignment:
      return NHG_ERR_MISSING_ASSIGNMENT;
    case ErrorCode::empty_sample:
      return NHG_ERR_EMPTY_SAMPLE;
    case ErrorCode::overflow:
      return NHG_ERR_OVERFLOW;
    case ErrorCode::tie_encountered:
      return NHG_ERR_TIE;
    case ErrorCode::unsupported_game:
      return NHG_ERR_UNSUPPORTED_GAME;
    case ErrorCode::boundary_point:
      return NHG_ERR_BOUNDARY_POINT;
    case ErrorCode::io_error:
      return NHG_ERR_IO;
  }
  return NHG_ERR_INTERNAL;
}

template <class F>
nhg_status wrap(F&& fn) {
  try {
    fn();
    return NHG_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NHG_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

nhg_status check_args(bool ok) {
  if (!ok) {
    g_last_error = "null argument";
    return NHG_ERR_INVALID_ARGUMENT;
  }
  return NHG_OK;
}

std::vector<Coalition> masks_to_coalitions(const uint32_t* masks, size_t count) {
  std::vector<Coalition> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) out.push_back(Coalition(masks[i]));
  return out;
}

}  // namespace

extern "C" {

const char* nhg_version(void) { return "0.1.0"; }

const char* nhg_last_error(void) { return g_last_error.c_str(); }

void nhg_string_free(char* s) { delete[] s; }

nhg_status nhg_game_parse(const char* json, nhg_game** out) {
  if (auto st = check_args(json && out)) return st;
  return wrap([&] { *out = new nhg_game{game_from_json(json)}; });
}

nhg_status nhg_game_to_json(const nhg_game* game, char** out_json) {
  if (auto st = check_args(game && out_json)) return st;
  return wrap([&] { *out_json = dup_string(game_to_json(game->impl)); });
}

void nhg_game_free(nhg_game* game) { delete game; }

int nhg_game_agent_count(const nhg_game* game) {
  return game ? game->impl.agent_count() : 0;
}

nhg_status nhg_partition_parse(const char* json, nhg_partition** out) {
  if (auto st = check_args(json && out)) return st;
  return wrap([&] { *out = new nhg_partition{partition_from_json(json)}; });
}

nhg_status nhg_partition_to_json(const nhg_partition* pi, char** out_json) {
  if (auto st = check_args(pi && out_json)) return st;
  return wrap([&] { *out_json = dup_string(partition_to_json(pi->impl)); });
}

void nhg_partition_free(nhg_partition* pi) { delete pi; }

nhg_status nhg_noise_spec_parse(const char* json, nhg_noise_spec** out) {
  if (auto st = check_args(json && out)) return st;
  return wrap([&] { *out = new nhg_noise_spec{noise_spec_from_json(json)}; });
}

void nhg_noise_spec_free(nhg_noise_spec* spec) { delete spec; }

nhg_status nhg_noise_assignment_parse(const char* json, nhg_noise_assignment** out) {
  if (auto st = check_args(json && out)) return st;
  return wrap([&] { *out = new nhg_noise_assignment{noise_assignment_from_json(json)}; });
}

nhg_status nhg_noise_assignment_to_json(const nhg_noise_assignment* assignment,
                                        char** out_json) {
  if (auto st = check_args(assignment && out_json)) return st;
  return wrap([&] { *out_json = dup_string(noise_assignment_to_json(assignment->impl)); });
}

void nhg_noise_assignment_free(nhg_noise_assignment* assignment) { delete assignment; }

nhg_status nhg_sampling_spec_parse(const char* json, nhg_sampling_spec** out) {
  if (auto st = check_args(json && out)) return st;
  return wrap([&] { *out = new nhg_sampling_spec{sampling_spec_from_json(json)}; });
}

nhg_status nhg_sampling_spec_set_seed(nhg_sampling_spec* spec, uint64_t seed) {
  if (auto st = check_args(spec != nullptr)) return st;
  spec->impl.set_seed(seed);
  return NHG_OK;
}

void nhg_sampling_spec_free(nhg_sampling_spec* spec) { delete spec; }

nhg_status nhg_sample_parse(const char* json, nhg_sample** out) {
  if (auto st = check_args(json && out)) return st;
  return wrap([&] { *out = new nhg_sample{sample_from_json(json)}; });
}

void nhg_sample_free(nhg_sample* sample) { delete sample; }

nhg_status nhg_sample_from_game(const nhg_game* game, nhg_sample** out) {
  if (auto st = check_args(game && out)) return st;
  return wrap([&] { *out = new nhg_sample{full_sample(game->impl)}; });
}

nhg_status nhg_prefers(const nhg_game* game, int agent, uint32_t s_mask, uint32_t t_mask,
                       int* out_cmp) {
  if (auto st = check_args(game && out_cmp)) return st;
  return wrap([&] {
    Preference p = prefers(game->impl, agent, Coalition(s_mask), Coalition(t_mask));
    *out_cmp = p == Preference::first_better ? 1 : (p == Preference::second_better ? -1 : 0);
  });
}

nhg_status nhg_core_blocks(const nhg_game* game, const nhg_partition* pi, uint32_t t_mask,
                           int* out) {
  if (auto st = check_args(game && pi && out)) return st;
  return wrap([&] { *out = core_blocks(game->impl, pi->impl, Coalition(t_mask)) ? 1 : 0; });
}

nhg_status nhg_is_core_stable(const nhg_game* game, const nhg_partition* pi, int* out) {
  if (auto st = check_args(game && pi && out)) return st;
  return wrap([&] { *out = is_core_stable(game->impl, pi->impl) ? 1 : 0; });
}

nhg_status nhg_find_core_partition(const nhg_game* game, nhg_partition** out) {
  if (auto st = check_args(game && out)) return st;
  *out = nullptr;
  bool empty_core = false;
  nhg_status st = wrap([&] {
    auto found = find_core_partition(game->impl);
    if (found.has_value()) {
      *out = new nhg_partition{*std::move(found)};
    } else {
      empty_core = true;
    }
  });
  if (st != NHG_OK) return st;
  return empty_core ? NHG_EMPTY_CORE : NHG_OK;
}

nhg_status nhg_sample_coalitions(const nhg_sampling_spec* spec, uint64_t m, uint32_t** out_masks,
                                 size_t* out_count) {
  if (auto st = check_args(spec && out_masks && out_count)) return st;
  return wrap([&] {
    auto draws = sample_coalitions(spec->impl, static_cast<std::size_t>(m));
    uint32_t* masks = new uint32_t[draws.size()];
    for (size_t i = 0; i < draws.size(); ++i) masks[i] = draws[i].mask();
    *out_masks = masks;
    *out_count = draws.size();
  });
}

void nhg_masks_free(uint32_t* masks) { delete[] masks; }

nhg_status nhg_draw_noise(const nhg_noise_spec* spec, const uint32_t* masks, size_t count,
                          uint64_t seed, nhg_noise_assignment** out) {
  if (auto st = check_args(spec && out && (masks || count == 0))) return st;
  return wrap([&] {
    *out = new nhg_noise_assignment{
        draw_noise(spec->impl, masks_to_coalitions(masks, count), seed)};
  });
}

nhg_status nhg_apply_noise(const nhg_game* game, const nhg_noise_assignment* assignment,
                           nhg_game** out) {
  if (auto st = check_args(game && assignment && out)) return st;
  return wrap([&] { *out = new nhg_game{apply_noise(game->impl, assignment->impl)}; });
}

nhg_status nhg_additive_to_multiplicative(const nhg_game* game, nhg_game** out) {
  if (auto st = check_args(game && out)) return st;
  return wrap([&] { *out = new nhg_game{additive_to_multiplicative(game->impl)}; });
}

nhg_status nhg_agreement_report(const nhg_game* noisy_game, const nhg_partition* pi,
                                uint32_t t_mask, const nhg_noise_spec* spec, double eps_tilde,
                                double threshold, int non_stable_mode, char** out_json) {
  if (auto st = check_args(noisy_game && pi && spec && out_json)) return st;
  return wrap([&] {
    AgreementKind mode = non_stable_mode ? AgreementKind::non_stable : AgreementKind::stable;
    CoalitionReport rep = analyze_coalition(noisy_game->impl, pi->impl, Coalition(t_mask),
                                            spec->impl, eps_tilde, threshold, mode);
    *out_json = dup_string(report_to_json(rep));
  });
}

nhg_status nhg_analyze(const nhg_game* noisy_game, const nhg_partition* pi,
                       const uint32_t* t_masks, size_t count, const nhg_noise_spec* spec,
                       double eps_tilde, double threshold, int non_stable_mode,
                       char** out_json) {
  if (auto st = check_args(noisy_game && pi && spec && out_json && t_masks && count > 0))
    return st;
  return wrap([&] {
    AgreementKind mode = non_stable_mode ? AgreementKind::non_stable : AgreementKind::stable;
    std::vector<CoalitionReport> reports;
    reports.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      reports.push_back(analyze_coalition(noisy_game->impl, pi->impl, Coalition(t_masks[i]),
                                          spec->impl, eps_tilde, threshold, mode));
    }
    *out_json = dup_string(analyze_to_json(reports, eps_tilde, threshold, mode));
  });
}

nhg_status nhg_prediction_epsilon(double eps_tilde, double agreement, double* out) {
  if (auto st = check_args(out != nullptr)) return st;
  return wrap([&] { *out = prediction_epsilon(eps_tilde, agreement); });
}

nhg_status nhg_coalition_regime(const nhg_game* noisy_game, const nhg_partition* pi,
                                const uint32_t* t_masks, size_t count, double alpha, double zeta,
                                int resolution, int non_stable_mode, char** out_region_json) {
  if (auto st = check_args(noisy_game && pi && t_masks && count > 0 && out_region_json))
    return st;
  return wrap([&] {
    require(alpha > 1.0, ErrorCode::invalid_argument, "regime scan needs alpha > 1");
    AgreementKind mode = non_stable_mode ? AgreementKind::non_stable : AgreementKind::stable;
    std::vector<Region1D> regions;
    for (size_t i = 0; i < count; ++i) {
      AgreementContext ctx = build_context(noisy_game->impl, pi->impl, Coalition(t_masks[i]));
      regions.push_back(superlevel_region_1d(
          [&](double p) {
            NoiseSpec spec = NoiseSpec::two_support(alpha, p);
            return agreement_closed(mode, make_inputs(mode, spec, ctx));
          },
          zeta, resolution));
    }
    *out_region_json = dup_string(region_to_json(intersect_regions(regions)));
  });
}

nhg_status nhg_sample_complexity_top_responsive(int n, double eps, double delta, uint64_t* out) {
  if (auto st = check_args(out != nullptr)) return st;
  return wrap([&] { *out = sample_complexity_top_responsive(n, eps, delta); });
}

nhg_status nhg_sample_bounds(uint64_t m, int n, double eps_tilde, double delta, double zeta,
                             double* out_lower, double* out_upper) {
  if (auto st = check_args(out_lower && out_upper)) return st;
  return wrap([&] {
    PacParams params;
    params.eps_tilde = eps_tilde;
    params.delta = delta;
    params.zeta = zeta;
    params.n = n;
    auto [lo, hi] = sample_bounds(m, params);
    *out_lower = lo;
    *out_upper = hi;
  });
}

nhg_status nhg_epsilon_after_more_samples(double eps_tilde, double eps_tilde_prime,
                                          double agreement, double* out) {
  if (auto st = check_args(out != nullptr)) return st;
  return wrap([&] { *out = epsilon_after_more_samples(eps_tilde, eps_tilde_prime, agreement); });
}

nhg_status nhg_learn_partition(const nhg_sample* sample, int n, int backend,
                               nhg_partition** out) {
  if (auto st = check_args(sample && out)) return st;
  *out = nullptr;
  bool empty_core = false;
  nhg_status st = wrap([&] {
    require(backend == NHG_LEARN_EXACT || backend == NHG_LEARN_TOP_COVER,
            ErrorCode::invalid_argument, "unknown learn backend");
    auto learned = learn_partition(
        sample->impl, n, backend == NHG_LEARN_EXACT ? LearnBackend::exact : LearnBackend::top_cover);
    if (learned.has_value()) {
      *out = new nhg_partition{*std::move(learned)};
    } else {
      empty_core = true;
    }
  });
  if (st != NHG_OK) return st;
  return empty_core ? NHG_EMPTY_CORE : NHG_OK;
}

nhg_status nhg_empirical_blocking_rate(const nhg_partition* pi, const nhg_sampling_spec* spec,
                                       const nhg_game* game, uint64_t m_eval, double* out) {
  if (auto st = check_args(pi && spec && game && out)) return st;
  return wrap([&] {
    *out = empirical_blocking_rate(pi->impl, spec->impl, game->impl,
                                   static_cast<std::size_t>(m_eval));
  });
}

nhg_status nhg_two_agent_game_id(const nhg_game* game, int* out_id) {
  if (auto st = check_args(game && out_id)) return st;
  return wrap([&] { *out_id = TwoAgentGame::from_game(game->impl).id(); });
}

nhg_status nhg_two_agent_predict_2support(const nhg_game* game, double p, double alpha,
                                          double* out) {
  if (auto st = check_args(game && out)) return st;
  return wrap([&] {
    *out = predict_prob_2support(TwoAgentGame::from_game(game->impl), p, alpha);
  });
}

nhg_status nhg_two_agent_predict_3support(const nhg_game* game, double alpha1, double alpha2,
                                          double p1, double p2, double* out) {
  if (auto st = check_args(game && out)) return st;
  return wrap([&] {
    ThreeSupportSpec spec{alpha1, alpha2, p1, p2};
    *out = predict_prob_3support(TwoAgentGame::from_game(game->impl), spec);
  });
}

nhg_status nhg_two_agent_curves_csv(const nhg_game* game, double alpha, int resolution,
                                    char** out_csv) {
  if (auto st = check_args(game && out_csv)) return st;
  return wrap([&] {
    *out_csv = dup_string(curves_csv(TwoAgentGame::from_game(game->impl), alpha, resolution));
  });
}

nhg_status nhg_two_agent_regime(const nhg_game* game, double alpha, double zeta, int resolution,
                                char** out_region_json) {
  if (auto st = check_args(game && out_region_json)) return st;
  return wrap([&] {
    Region1D region =
        regime_1d_two_agent(TwoAgentGame::from_game(game->impl), alpha, zeta, resolution);
    *out_region_json = dup_string(region_to_json(region));
  });
}

nhg_status nhg_two_agent_safety(const nhg_game* game, double alpha, int resolution,
                                double* out_p_star, double* out_value) {
  if (auto st = check_args(game && out_p_star && out_value)) return st;
  return wrap([&] {
    SafetyValue sv = safety_two_agent(TwoAgentGame::from_game(game->impl), alpha, resolution);
    *out_p_star = sv.p_star;
    *out_value = sv.value;
  });
}

nhg_status nhg_enumerate_cases_csv(const nhg_game* game, const nhg_noise_spec* spec,
                                   char** out_csv) {
  if (auto st = check_args(game && spec && out_csv)) return st;
  return wrap([&] {
    auto rows = enumerate_cases(TwoAgentGame::from_game(game->impl), spec->impl);
    *out_csv = dup_string(case_table_csv(rows));
  });
}

nhg_status nhg_three_support_hessian(double p1, double p2, double step, double out_matrix[4],
                                     double out_eigs[2]) {
  if (auto st = check_args(out_matrix && out_eigs)) return st;
  return wrap([&] {
    Hessian2D h = hessian_2d(g_three_support, p1, p2, step);
    out_matrix[0] = h.fxx;
    out_matrix[1] = h.fxy;
    out_matrix[2] = h.fxy;
    out_matrix[3] = h.fyy;
    auto eigs = h.eigenvalues();
    out_eigs[0] = eigs[0];
    out_eigs[1] = eigs[1];
  });
}

}  // extern "C"
