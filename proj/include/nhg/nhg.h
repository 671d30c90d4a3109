/* Copyright 2026 The noisyhg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the noisyhg core: noise-robustness analysis of core-stable
 * partitions in hedonic games. Objects are opaque handles created from JSON
 * and freed with the matching *_free call; every function reports an
 * nhg_status, with a thread-local message available via nhg_last_error().
 * Coalitions cross this boundary as bitmasks (bit i = agent i). Strings
 * returned through char** outputs are owned by the caller and released with
 * nhg_string_free().
 */

#ifndef NHG_H
#define NHG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(NHG_BUILD_SHARED)
#    define NHG_API __declspec(dllexport)
#  else
#    define NHG_API __declspec(dllimport)
#  endif
#else
#  if defined(NHG_BUILD_SHARED)
#    define NHG_API __attribute__((visibility("default")))
#  else
#    define NHG_API
#  endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nhg_status {
  NHG_OK = 0,
  NHG_EMPTY_CORE = 1, /* result, not an error: no core-stable partition exists */
  NHG_ERR_INVALID_ARGUMENT = 2,
  NHG_ERR_PARSE = 3,
  NHG_ERR_MISSING_VALUE = 4,
  NHG_ERR_AGENT_NOT_MEMBER = 5,
  NHG_ERR_COVERAGE_INSUFFICIENT = 6,
  NHG_ERR_INSTANCE_TOO_LARGE = 7,
  NHG_ERR_ENUMERATION_TOO_LARGE = 8,
  NHG_ERR_MISSING_ASSIGNMENT = 9,
  NHG_ERR_EMPTY_SAMPLE = 10,
  NHG_ERR_OVERFLOW = 11,
  NHG_ERR_TIE = 12,
  NHG_ERR_UNSUPPORTED_GAME = 13,
  NHG_ERR_BOUNDARY_POINT = 14,
  NHG_ERR_IO = 15,
  NHG_ERR_INTERNAL = 16
} nhg_status;

typedef struct nhg_game nhg_game;
typedef struct nhg_partition nhg_partition;
typedef struct nhg_noise_spec nhg_noise_spec;
typedef struct nhg_noise_assignment nhg_noise_assignment;
typedef struct nhg_sampling_spec nhg_sampling_spec;
typedef struct nhg_sample nhg_sample;

NHG_API const char* nhg_version(void);
/* Message for the most recent failing call on this thread. */
NHG_API const char* nhg_last_error(void);
NHG_API void nhg_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Parsing, serialization, lifetime                                    */
/* ------------------------------------------------------------------ */

NHG_API nhg_status nhg_game_parse(const char* json, nhg_game** out);
NHG_API nhg_status nhg_game_to_json(const nhg_game* game, char** out_json);
NHG_API void nhg_game_free(nhg_game* game);
NHG_API int nhg_game_agent_count(const nhg_game* game);

NHG_API nhg_status nhg_partition_parse(const char* json, nhg_partition** out);
NHG_API nhg_status nhg_partition_to_json(const nhg_partition* pi, char** out_json);
NHG_API void nhg_partition_free(nhg_partition* pi);

NHG_API nhg_status nhg_noise_spec_parse(const char* json, nhg_noise_spec** out);
NHG_API void nhg_noise_spec_free(nhg_noise_spec* spec);

NHG_API nhg_status nhg_noise_assignment_parse(const char* json, nhg_noise_assignment** out);
NHG_API nhg_status nhg_noise_assignment_to_json(const nhg_noise_assignment* assignment,
                                                char** out_json);
NHG_API void nhg_noise_assignment_free(nhg_noise_assignment* assignment);

NHG_API nhg_status nhg_sampling_spec_parse(const char* json, nhg_sampling_spec** out);
NHG_API nhg_status nhg_sampling_spec_set_seed(nhg_sampling_spec* spec, uint64_t seed);
NHG_API void nhg_sampling_spec_free(nhg_sampling_spec* spec);

NHG_API nhg_status nhg_sample_parse(const char* json, nhg_sample** out);
NHG_API void nhg_sample_free(nhg_sample* sample);
/* Full-information sample listing every stored entry of the game. */
NHG_API nhg_status nhg_sample_from_game(const nhg_game* game, nhg_sample** out);

/* ------------------------------------------------------------------ */
/* Preferences, blocking, core stability                               */
/* ------------------------------------------------------------------ */

/* out_cmp: +1 when s is strictly preferred, -1 for t, 0 indifferent. */
NHG_API nhg_status nhg_prefers(const nhg_game* game, int agent, uint32_t s_mask, uint32_t t_mask,
                               int* out_cmp);
NHG_API nhg_status nhg_core_blocks(const nhg_game* game, const nhg_partition* pi, uint32_t t_mask,
                                   int* out);
NHG_API nhg_status nhg_is_core_stable(const nhg_game* game, const nhg_partition* pi, int* out);
/* NHG_EMPTY_CORE with *out == NULL when no stable partition exists. */
NHG_API nhg_status nhg_find_core_partition(const nhg_game* game, nhg_partition** out);

/* Caller frees *out_masks with nhg_masks_free. */
NHG_API nhg_status nhg_sample_coalitions(const nhg_sampling_spec* spec, uint64_t m,
                                         uint32_t** out_masks, size_t* out_count);
NHG_API void nhg_masks_free(uint32_t* masks);

/* ------------------------------------------------------------------ */
/* Noise                                                               */
/* ------------------------------------------------------------------ */

NHG_API nhg_status nhg_draw_noise(const nhg_noise_spec* spec, const uint32_t* masks, size_t count,
                                  uint64_t seed, nhg_noise_assignment** out);
NHG_API nhg_status nhg_apply_noise(const nhg_game* game, const nhg_noise_assignment* assignment,
                                   nhg_game** out);
NHG_API nhg_status nhg_additive_to_multiplicative(const nhg_game* game, nhg_game** out);

/* ------------------------------------------------------------------ */
/* Agreement probabilities and prediction                              */
/* ------------------------------------------------------------------ */

/* Per-coalition report (closed forms, enumeration oracles, index sizes,
 * epsilon, verdict) as JSON. non_stable_mode selects the h/eta analysis. */
NHG_API nhg_status nhg_agreement_report(const nhg_game* noisy_game, const nhg_partition* pi,
                                        uint32_t t_mask, const nhg_noise_spec* spec,
                                        double eps_tilde, double threshold, int non_stable_mode,
                                        char** out_json);
/* Aggregate analysis over a coalition list: reports plus min agreement. */
NHG_API nhg_status nhg_analyze(const nhg_game* noisy_game, const nhg_partition* pi,
                               const uint32_t* t_masks, size_t count, const nhg_noise_spec* spec,
                               double eps_tilde, double threshold, int non_stable_mode,
                               char** out_json);
NHG_API nhg_status nhg_prediction_epsilon(double eps_tilde, double agreement, double* out);

/* Two-support superlevel region over the noise probability p for the listed
 * coalitions, intersected; alpha > 1. */
NHG_API nhg_status nhg_coalition_regime(const nhg_game* noisy_game, const nhg_partition* pi,
                                        const uint32_t* t_masks, size_t count, double alpha,
                                        double zeta, int resolution, int non_stable_mode,
                                        char** out_region_json);

/* ------------------------------------------------------------------ */
/* PAC machinery                                                       */
/* ------------------------------------------------------------------ */

NHG_API nhg_status nhg_sample_complexity_top_responsive(int n, double eps, double delta,
                                                        uint64_t* out);
NHG_API nhg_status nhg_sample_bounds(uint64_t m, int n, double eps_tilde, double delta,
                                     double zeta, double* out_lower, double* out_upper);
NHG_API nhg_status nhg_epsilon_after_more_samples(double eps_tilde, double eps_tilde_prime,
                                                  double agreement, double* out);

#define NHG_LEARN_EXACT 0
#define NHG_LEARN_TOP_COVER 1
/* NHG_EMPTY_CORE with *out == NULL when the exact backend finds no core. */
NHG_API nhg_status nhg_learn_partition(const nhg_sample* sample, int n, int backend,
                                       nhg_partition** out);
NHG_API nhg_status nhg_empirical_blocking_rate(const nhg_partition* pi,
                                               const nhg_sampling_spec* spec,
                                               const nhg_game* game, uint64_t m_eval,
                                               double* out);

/* ------------------------------------------------------------------ */
/* Two-agent full-information analysis                                 */
/* ------------------------------------------------------------------ */

NHG_API nhg_status nhg_two_agent_game_id(const nhg_game* game, int* out_id);
NHG_API nhg_status nhg_two_agent_predict_2support(const nhg_game* game, double p, double alpha,
                                                  double* out);
NHG_API nhg_status nhg_two_agent_predict_3support(const nhg_game* game, double alpha1,
                                                  double alpha2, double p1, double p2,
                                                  double* out);
/* alpha <= 0 emits every branch column; alpha > 1 the active branch only. */
NHG_API nhg_status nhg_two_agent_curves_csv(const nhg_game* game, double alpha, int resolution,
                                            char** out_csv);
NHG_API nhg_status nhg_two_agent_regime(const nhg_game* game, double alpha, double zeta,
                                        int resolution, char** out_region_json);
NHG_API nhg_status nhg_two_agent_safety(const nhg_game* game, double alpha, int resolution,
                                        double* out_p_star, double* out_value);
NHG_API nhg_status nhg_enumerate_cases_csv(const nhg_game* game, const nhg_noise_spec* spec,
                                           char** out_csv);

/* Finite-difference Hessian of the three-support strict-branch surface at a
 * simplex-interior point; out_matrix = {fxx, fxy, fyx, fyy}. */
NHG_API nhg_status nhg_three_support_hessian(double p1, double p2, double step,
                                             double out_matrix[4], double out_eigs[2]);

#ifdef __cplusplus
}
#endif

#endif /* NHG_H */
