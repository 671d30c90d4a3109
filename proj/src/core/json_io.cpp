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

#include "json_io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace nhg {

using nlohmann::json;

namespace {

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("invalid JSON: ") + e.what());
  }
}

// Rethrows nlohmann type/lookup errors as parse errors with context.
template <class F>
auto guarded(const char* what, F&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string(what) + ": " + e.what());
  }
}

Coalition coalition_from_json(const json& j) {
  Coalition c;
  for (const auto& v : j) c = c.with(v.get<int>());
  return c;
}

json coalition_to_json(Coalition c) {
  json arr = json::array();
  for (int a : c.members()) arr.push_back(a);
  return arr;
}

}  // namespace

std::string fmt_double(double v) { return json(v).dump(); }

HedonicGame game_from_json(const std::string& text) {
  json j = parse_text(text);
  return guarded("game", [&] {
    int n = j.at("n").get<int>();
    std::string cov = j.at("coverage").get<std::string>();
    require(cov == "full" || cov == "partial", ErrorCode::parse_error,
            "coverage must be \"full\" or \"partial\"");
    HedonicGame game(n, cov == "full" ? Coverage::full : Coverage::partial);
    for (const auto& entry : j.at("values")) {
      game.set_value(entry.at("agent").get<int>(), coalition_from_json(entry.at("coalition")),
                     entry.at("value").get<double>());
    }
    require(game.coverage() == Coverage::partial || game.is_complete(),
            ErrorCode::coverage_insufficient,
            "game declared full but not every value is present");
    return game;
  });
}

std::string game_to_json(const HedonicGame& game) {
  json values = json::array();
  for (const auto& [agent, coal, v] : game.entries()) {
    values.push_back({{"agent", agent}, {"coalition", coalition_to_json(coal)}, {"value", v}});
  }
  json j = {{"n", game.agent_count()},
            {"coverage", game.coverage() == Coverage::full ? "full" : "partial"},
            {"values", values}};
  return j.dump(2);
}

Partition partition_from_json(const std::string& text) {
  json j = parse_text(text);
  return guarded("partition", [&] {
    std::vector<Coalition> blocks;
    int n = 0;
    for (const auto& b : j.at("blocks")) {
      Coalition c = coalition_from_json(b);
      blocks.push_back(c);
      n += c.size();
    }
    return Partition(n, std::move(blocks));
  });
}

std::string partition_to_json(const Partition& pi) {
  json blocks = json::array();
  for (Coalition b : pi.blocks()) blocks.push_back(coalition_to_json(b));
  return json{{"blocks", blocks}}.dump(2);
}

NoiseSpec noise_spec_from_json(const std::string& text) {
  json j = parse_text(text);
  return guarded("noise spec", [&] {
    return NoiseSpec(j.at("support").get<std::vector<double>>(),
                     j.at("probs").get<std::vector<double>>());
  });
}

std::string noise_spec_to_json(const NoiseSpec& spec) {
  return json{{"support", spec.support()}, {"probs", spec.probs()}}.dump(2);
}

NoiseAssignment noise_assignment_from_json(const std::string& text) {
  json j = parse_text(text);
  return guarded("noise assignment", [&] {
    NoiseAssignment out;
    for (const auto& entry : j) {
      Coalition c = coalition_from_json(entry.at("coalition"));
      out.alpha[c.mask()] = entry.at("alpha").get<double>();
    }
    return out;
  });
}

std::string noise_assignment_to_json(const NoiseAssignment& assignment) {
  std::vector<std::uint32_t> masks;
  masks.reserve(assignment.alpha.size());
  for (const auto& [mask, a] : assignment.alpha) masks.push_back(mask);
  std::sort(masks.begin(), masks.end());
  json arr = json::array();
  for (std::uint32_t m : masks) {
    arr.push_back({{"coalition", coalition_to_json(Coalition(m))},
                   {"alpha", assignment.alpha.at(m)}});
  }
  return arr.dump(2);
}

SamplingSpec sampling_spec_from_json(const std::string& text) {
  json j = parse_text(text);
  return guarded("sampling spec", [&] {
    std::string kind = j.at("kind").get<std::string>();
    std::uint64_t seed = j.value("seed", std::uint64_t{0});
    int n = j.at("n").get<int>();
    if (kind == "uniform") return SamplingSpec::uniform_nonempty(n, seed);
    std::vector<Coalition> coalitions;
    for (const auto& c : j.at("coalitions")) coalitions.push_back(coalition_from_json(c));
    if (kind == "list") return SamplingSpec::fixed_list(n, std::move(coalitions), seed);
    require(kind == "weighted", ErrorCode::parse_error,
            "kind must be \"uniform\", \"list\" or \"weighted\"");
    return SamplingSpec::weighted(n, std::move(coalitions),
                                  j.at("weights").get<std::vector<double>>(), seed);
  });
}

std::string sampling_spec_to_json(const SamplingSpec& spec) {
  json j = {{"n", spec.agent_count()}, {"seed", spec.seed()}};
  switch (spec.kind()) {
    case SamplingSpec::Kind::uniform_nonempty:
      j["kind"] = "uniform";
      break;
    case SamplingSpec::Kind::fixed_list:
      j["kind"] = "list";
      break;
    case SamplingSpec::Kind::weighted:
      j["kind"] = "weighted";
      j["weights"] = spec.weights();
      break;
  }
  if (spec.kind() != SamplingSpec::Kind::uniform_nonempty) {
    json arr = json::array();
    for (Coalition c : spec.coalitions()) arr.push_back(coalition_to_json(c));
    j["coalitions"] = arr;
  }
  return j.dump(2);
}

Sample sample_from_json(const std::string& text) {
  json j = parse_text(text);
  return guarded("sample", [&] {
    Sample out;
    out.seed = j.value("seed", std::uint64_t{0});
    for (const auto& o : j.at("observations")) {
      Observation obs;
      obs.coalition = coalition_from_json(o.at("coalition"));
      for (const auto& kv : o.at("values")) {
        obs.values.emplace_back(kv.at("agent").get<int>(), kv.at("value").get<double>());
      }
      out.observations.push_back(std::move(obs));
    }
    return out;
  });
}

std::string sample_to_json(const Sample& sample) {
  json obs = json::array();
  for (const Observation& o : sample.observations) {
    json values = json::array();
    for (const auto& [agent, v] : o.values) values.push_back({{"agent", agent}, {"value", v}});
    obs.push_back({{"coalition", coalition_to_json(o.coalition)}, {"values", values}});
  }
  return json{{"seed", sample.seed}, {"observations", obs}}.dump(2);
}

PacParams pac_params_from_json(const std::string& text) {
  json j = parse_text(text);
  return guarded("pac params", [&] {
    PacParams params;
    params.eps_tilde = j.at("eps_tilde").get<double>();
    params.delta = j.at("delta").get<double>();
    params.zeta = j.at("zeta").get<double>();
    params.n = j.at("n").get<int>();
    params.validate();
    return params;
  });
}

std::string region_to_json(const Region1D& region) {
  json intervals = json::array();
  for (const auto& [lo, hi] : region.intervals) intervals.push_back({lo, hi});
  return json{{"intervals", intervals}, {"resolution", region.resolution}}.dump(2);
}

std::string region_to_json(const Region2D& region) {
  json cells = json::array();
  for (const auto& [i, j2] : region.cells) cells.push_back({i, j2});
  return json{{"cells", cells}, {"resolution", region.resolution}}.dump(2);
}

namespace {

json report_json(const CoalitionReport& report) {
  return json{{"coalition", coalition_to_json(report.t)},
              {"degenerate", report.degenerate},
              {"R_size", report.r_size},
              {"I_sizes", report.i_sizes},
              {"J_sizes", report.j_sizes},
              {"f_closed", report.f_closed},
              {"f_oracle", report.f_oracle},
              {"h_closed", report.h_closed},
              {"h_oracle", report.h_oracle},
              {"epsilon", report.epsilon},
              {"verdict", report.verdict}};
}

}  // namespace

std::string report_to_json(const CoalitionReport& report) { return report_json(report).dump(2); }

std::string analyze_to_json(const std::vector<CoalitionReport>& reports, double eps_tilde,
                            double threshold, AgreementKind mode) {
  json arr = json::array();
  double min_agreement = 1.0;
  for (const CoalitionReport& r : reports) {
    arr.push_back(report_json(r));
    double agreement = mode == AgreementKind::stable ? r.f_oracle : r.h_oracle;
    min_agreement = std::min(min_agreement, agreement);
  }
  PredictionReport verdict = robustness_verdict(eps_tilde, min_agreement, threshold, mode);
  json aggregate = {{"min_agreement", min_agreement},
                    {"eps_tilde", eps_tilde},
                    {"threshold", threshold},
                    {"epsilon", prediction_epsilon(eps_tilde, min_agreement)},
                    {"verdict", verdict.robust},
                    {"mode", mode == AgreementKind::stable ? "stable" : "non-stable"}};
  return json{{"reports", arr}, {"aggregate", aggregate}}.dump(2);
}

std::string curves_csv(const TwoAgentGame& game, double alpha, int resolution) {
  require(resolution >= 1, ErrorCode::invalid_argument, "resolution must be positive");
  std::ostringstream out;
  if (alpha > 0.0) {
    out << "p,prob\n";
    for (int k = 0; k <= resolution; ++k) {
      double p = static_cast<double>(k) / resolution;
      out << fmt_double(p) << "," << fmt_double(predict_prob_2support(game, p, alpha)) << "\n";
    }
    return out.str();
  }
  auto curves = branch_curves(game);
  out << "p";
  for (const auto& c : curves) out << "," << c.name;
  out << "\n";
  for (int k = 0; k <= resolution; ++k) {
    double p = static_cast<double>(k) / resolution;
    out << fmt_double(p);
    for (const auto& c : curves) out << "," << fmt_double(c.fn(p));
    out << "\n";
  }
  return out.str();
}

std::string case_table_csv(const std::vector<CaseRow>& rows) {
  std::ostringstream out;
  out << "alpha_1_coal,alpha_2_coal,alpha_12_coal,probability,partition,agrees\n";
  for (const CaseRow& row : rows) {
    out << fmt_double(row.alpha[0]) << "," << fmt_double(row.alpha[1]) << ","
        << fmt_double(row.alpha[2]) << "," << fmt_double(row.probability) << ","
        << (row.pair_forms ? "0.1" : "0|1") << "," << (row.agrees ? 1 : 0) << "\n";
  }
  return out.str();
}

}  // namespace nhg
