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

#ifndef NHG_CORE_JSON_IO_HPP
#define NHG_CORE_JSON_IO_HPP

#include <string>
#include <vector>

#include "agreement.hpp"
#include "game.hpp"
#include "noise.hpp"
#include "pac.hpp"
#include "partition.hpp"
#include "regimes.hpp"
#include "sampling.hpp"
#include "two_agent.hpp"

namespace nhg {

// Wire formats. Doubles are serialized with the shortest round-trip
// representation, so equal inputs always produce byte-identical output.

HedonicGame game_from_json(const std::string& text);
std::string game_to_json(const HedonicGame& game);

Partition partition_from_json(const std::string& text);
std::string partition_to_json(const Partition& pi);

NoiseSpec noise_spec_from_json(const std::string& text);
std::string noise_spec_to_json(const NoiseSpec& spec);

NoiseAssignment noise_assignment_from_json(const std::string& text);
std::string noise_assignment_to_json(const NoiseAssignment& assignment);

SamplingSpec sampling_spec_from_json(const std::string& text);
std::string sampling_spec_to_json(const SamplingSpec& spec);

Sample sample_from_json(const std::string& text);
std::string sample_to_json(const Sample& sample);

PacParams pac_params_from_json(const std::string& text);

std::string region_to_json(const Region1D& region);
std::string region_to_json(const Region2D& region);

std::string report_to_json(const CoalitionReport& report);

/// Aggregate analyze output: per-coalition reports plus the minimum
/// agreement over the list and the verdict derived from it.
std::string analyze_to_json(const std::vector<CoalitionReport>& reports, double eps_tilde,
                            double threshold, AgreementKind mode);

/// Curve table for the two-agent branch formulas. With alpha > 0 a single
/// "prob" column for the active branch; otherwise one column per branch.
std::string curves_csv(const TwoAgentGame& game, double alpha, int resolution);

/// Case table in the canonical case order.
std::string case_table_csv(const std::vector<CaseRow>& rows);

/// Shortest round-trip decimal form of a double (also used by the CSVs).
std::string fmt_double(double v);

}  // namespace nhg

#endif  // NHG_CORE_JSON_IO_HPP
