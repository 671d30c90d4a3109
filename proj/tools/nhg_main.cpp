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

// Command-line front end. All analysis goes through the C API in nhg/nhg.h;
// this binary only handles flags, files and output placement.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nhg/nhg.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitMissingValue = 3;
constexpr int kExitEnumerationTooLarge = 4;

int exit_code_for(nhg_status st) {
  switch (st) {
    case NHG_OK:
    case NHG_EMPTY_CORE:
      return 0;
    case NHG_ERR_PARSE:
    case NHG_ERR_INVALID_ARGUMENT:
    case NHG_ERR_IO:
      return kExitConfig;
    case NHG_ERR_MISSING_VALUE:
      return kExitMissingValue;
    case NHG_ERR_ENUMERATION_TOO_LARGE:
      return kExitEnumerationTooLarge;
    default:
      return kExitFailure;
  }
}

[[noreturn]] void die(nhg_status st) {
  std::cerr << "error: " << nhg_last_error() << "\n";
  std::exit(exit_code_for(st));
}

[[noreturn]] void die_config(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(kExitConfig);
}

void check(nhg_status st) {
  if (st != NHG_OK) die(st);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die_config("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Output lands in a temp file first and is renamed into place, so a failed
// run never leaves a partial artifact.
void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::string tmp = out_path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) die_config("cannot write " + tmp);
    out << content;
    if (!out.flush()) die_config("cannot write " + tmp);
  }
  if (std::rename(tmp.c_str(), out_path.c_str()) != 0) {
    std::remove(tmp.c_str());
    die_config("cannot move output into place at " + out_path);
  }
}

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { nhg_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

using GameHandle = std::unique_ptr<nhg_game, decltype(&nhg_game_free)>;
using PartitionHandle = std::unique_ptr<nhg_partition, decltype(&nhg_partition_free)>;
using NoiseHandle = std::unique_ptr<nhg_noise_spec, decltype(&nhg_noise_spec_free)>;
using SamplingHandle = std::unique_ptr<nhg_sampling_spec, decltype(&nhg_sampling_spec_free)>;
using SampleHandle = std::unique_ptr<nhg_sample, decltype(&nhg_sample_free)>;

GameHandle load_game(const std::string& path) {
  nhg_game* g = nullptr;
  check(nhg_game_parse(read_file(path).c_str(), &g));
  return GameHandle(g, &nhg_game_free);
}

PartitionHandle load_partition(const std::string& path) {
  nhg_partition* p = nullptr;
  check(nhg_partition_parse(read_file(path).c_str(), &p));
  return PartitionHandle(p, &nhg_partition_free);
}

NoiseHandle load_noise(const std::string& path) {
  nhg_noise_spec* s = nullptr;
  check(nhg_noise_spec_parse(read_file(path).c_str(), &s));
  return NoiseHandle(s, &nhg_noise_spec_free);
}

uint32_t mask_of_members(const nlohmann::json& members) {
  uint32_t mask = 0;
  for (const auto& m : members) {
    int a = m.get<int>();
    if (a < 0 || a > 31) die_config("agent index out of range in coalition list");
    mask |= uint32_t{1} << a;
  }
  return mask;
}

// Coalition lists come either from a JSON file of member arrays or from
// repeated --coalition flags with comma-separated indices.
std::vector<uint32_t> gather_masks(const std::string& coalitions_path,
                                   const std::vector<std::string>& inline_coalitions) {
  std::vector<uint32_t> masks;
  if (!coalitions_path.empty()) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_file(coalitions_path));
      for (const auto& entry : j) masks.push_back(mask_of_members(entry));
    } catch (const nlohmann::json::exception& e) {
      die_config(std::string("invalid coalition list: ") + e.what());
    }
  }
  for (const std::string& text : inline_coalitions) {
    uint32_t mask = 0;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        int a = std::stoi(tok);
        if (a < 0 || a > 31) throw std::out_of_range("agent");
        mask |= uint32_t{1} << a;
      } catch (const std::exception&) {
        die_config("bad --coalition entry: " + text);
      }
    }
    if (mask == 0) die_config("empty --coalition entry");
    masks.push_back(mask);
  }
  if (masks.empty()) die_config("no coalitions given (use --coalitions or --coalition)");
  return masks;
}

std::vector<uint32_t> coalition_masks_of_game_json(const std::string& game_json) {
  std::vector<uint32_t> masks;
  try {
    nlohmann::json j = nlohmann::json::parse(game_json);
    for (const auto& entry : j.at("values")) {
      uint32_t mask = mask_of_members(entry.at("coalition"));
      if (std::find(masks.begin(), masks.end(), mask) == masks.end()) masks.push_back(mask);
    }
  } catch (const nlohmann::json::exception& e) {
    die_config(std::string("invalid game file: ") + e.what());
  }
  return masks;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"noisyhg: noise robustness analysis for hedonic games"};
  app.require_subcommand(1);

  std::string game_path, noise_path, partition_path, sample_path, sampling_path;
  std::string coalitions_path, out_path, format = "json", backend = "exact";
  std::vector<std::string> inline_coalitions;
  double zeta = 0.9, eta = -1.0, eps_tilde = 0.0, alpha = -1.0;
  double alpha1 = 2.0, alpha2 = 0.5, p1 = 0.0, p2 = 0.0;
  int resolution = 0;
  uint64_t seed = 0;
  uint64_t m_eval = 10000;
  bool seed_given = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "output file (stdout when omitted)");
    cmd->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "per-coalition agreement probabilities, epsilon and verdict");
  analyze->add_option("--game", game_path, "noisy game JSON")->required();
  analyze->add_option("--noise", noise_path, "noise spec JSON")->required();
  analyze->add_option("--partition", partition_path, "partition JSON")->required();
  analyze->add_option("--coalitions", coalitions_path, "JSON file with coalition member lists");
  analyze->add_option("--coalition", inline_coalitions,
                      "comma-separated agent indices; repeatable");
  analyze->add_option("--eps-tilde", eps_tilde, "noisy-game PAC error");
  analyze->add_option("--zeta", zeta, "satisfaction threshold (stable mode)");
  analyze->add_option("--eta", eta, "threshold for the non-stable analysis; selects that mode");
  add_common(analyze);

  CLI::App* curves = app.add_subcommand("curves", "prediction-probability curve CSV");
  curves->add_option("--game", game_path, "two-agent noisy game JSON")->required();
  curves->add_option("--alpha", alpha, "noise factor; omit for all branch columns");
  curves->add_option("--resolution", resolution, "points minus one (default 1000)");
  add_common(curves);

  CLI::App* regimes = app.add_subcommand("regimes", "noise regimes (superlevel sets over p)");
  regimes->add_option("--game", game_path, "noisy game JSON")->required();
  regimes->add_option("--alpha", alpha, "noise factor > 1")->required();
  regimes->add_option("--zeta", zeta, "satisfaction threshold");
  regimes->add_option("--eta", eta, "non-stable threshold; selects that mode");
  regimes->add_option("--partition", partition_path,
                      "partition JSON (with --coalitions: coalition-regime mode)");
  regimes->add_option("--coalitions", coalitions_path, "JSON coalition list");
  regimes->add_option("--coalition", inline_coalitions, "inline coalition; repeatable");
  regimes->add_option("--resolution", resolution, "grid resolution (default 10000)");
  add_common(regimes);

  CLI::App* safety = app.add_subcommand("safety", "safety value (minimum prediction probability)");
  safety->add_option("--game", game_path, "two-agent noisy game JSON")->required();
  safety->add_option("--alpha", alpha, "noise factor > 1")->required();
  safety->add_option("--resolution", resolution, "grid resolution (default 10000)");
  add_common(safety);

  CLI::App* learn = app.add_subcommand("learn", "learn a partition and score its blocking rate");
  learn->add_option("--game", game_path, "game JSON used for rate evaluation")->required();
  learn->add_option("--sample", sample_path, "sample JSON (default: full sample of the game)");
  learn->add_option("--backend", backend, "exact|top_cover")
      ->check(CLI::IsMember({"exact", "top_cover"}));
  learn->add_option("--sampling", sampling_path,
                    "sampling spec JSON for the rate (default: uniform over observed coalitions)");
  learn->add_option("--m-eval", m_eval, "draws for the empirical blocking rate");
  learn->add_option("--seed", seed, "seed for the rate evaluation");
  add_common(learn);

  CLI::App* enumerate = app.add_subcommand("enumerate", "two-agent case table CSV");
  enumerate->add_option("--game", game_path, "two-agent noisy game JSON")->required();
  enumerate->add_option("--noise", noise_path, "noise spec JSON")->required();
  add_common(enumerate);

  CLI::App* predict = app.add_subcommand("predict", "two-agent prediction probability");
  predict->add_option("--game", game_path, "two-agent noisy game JSON")->required();
  predict->add_option("--alpha", alpha, "two-support factor > 1");
  predict->add_option("--alpha1", alpha1, "three-support inflating factor");
  predict->add_option("--alpha2", alpha2, "three-support deflating factor");
  predict->add_option("--p1", p1, "P[alpha1]");
  predict->add_option("--p2", p2, "P[alpha2]");
  predict->add_option("--p", p1, "P[alpha] in the two-support model");
  add_common(predict);

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) {
    GameHandle game = load_game(game_path);
    NoiseHandle noise = load_noise(noise_path);
    PartitionHandle pi = load_partition(partition_path);
    std::vector<uint32_t> masks = gather_masks(coalitions_path, inline_coalitions);
    bool non_stable = eta >= 0.0;
    double threshold = non_stable ? eta : zeta;
    OwnedString out;
    check(nhg_analyze(game.get(), pi.get(), masks.data(), masks.size(), noise.get(), eps_tilde,
                      threshold, non_stable ? 1 : 0, &out.ptr));
    emit(out_path, out.str());
    return 0;
  }

  if (curves->parsed()) {
    if (resolution == 0) resolution = 1000;
    GameHandle game = load_game(game_path);
    OwnedString out;
    check(nhg_two_agent_curves_csv(game.get(), alpha, resolution, &out.ptr));
    emit(out_path, out.str());
    return 0;
  }

  if (regimes->parsed()) {
    if (resolution == 0) resolution = 10000;
    GameHandle game = load_game(game_path);
    bool non_stable = eta >= 0.0;
    double threshold = non_stable ? eta : zeta;
    OwnedString out;
    if (!partition_path.empty()) {
      PartitionHandle pi = load_partition(partition_path);
      std::vector<uint32_t> masks = gather_masks(coalitions_path, inline_coalitions);
      check(nhg_coalition_regime(game.get(), pi.get(), masks.data(), masks.size(), alpha,
                                 threshold, resolution, non_stable ? 1 : 0, &out.ptr));
    } else {
      check(nhg_two_agent_regime(game.get(), alpha, threshold, resolution, &out.ptr));
    }
    emit(out_path, out.str());
    return 0;
  }

  if (safety->parsed()) {
    if (resolution == 0) resolution = 10000;
    GameHandle game = load_game(game_path);
    double p_star = 0.0, value = 0.0;
    check(nhg_two_agent_safety(game.get(), alpha, resolution, &p_star, &value));
    nlohmann::json j = {{"p_star", p_star}, {"value", value}};
    if (format == "csv") {
      emit(out_path, "p_star,value\n" + nlohmann::json(p_star).dump() + "," +
                         nlohmann::json(value).dump() + "\n");
    } else {
      emit(out_path, j.dump(2) + "\n");
    }
    return 0;
  }

  if (learn->parsed()) {
    seed_given = learn->count("--seed") > 0;
    GameHandle game = load_game(game_path);
    SampleHandle sample(nullptr, &nhg_sample_free);
    std::string sample_json;
    if (!sample_path.empty()) {
      sample_json = read_file(sample_path);
      nhg_sample* s = nullptr;
      check(nhg_sample_parse(sample_json.c_str(), &s));
      sample.reset(s);
    } else {
      nhg_sample* s = nullptr;
      check(nhg_sample_from_game(game.get(), &s));
      sample.reset(s);
    }
    int n = nhg_game_agent_count(game.get());
    nhg_partition* learned = nullptr;
    nhg_status st = nhg_learn_partition(
        sample.get(), n, backend == "exact" ? NHG_LEARN_EXACT : NHG_LEARN_TOP_COVER, &learned);
    if (st != NHG_OK && st != NHG_EMPTY_CORE) die(st);
    if (st == NHG_EMPTY_CORE) {
      emit(out_path, nlohmann::json{{"empty_core", true}}.dump(2) + "\n");
      return 0;
    }
    PartitionHandle pi(learned, &nhg_partition_free);

    SamplingHandle sampling(nullptr, &nhg_sampling_spec_free);
    if (!sampling_path.empty()) {
      nhg_sampling_spec* sp = nullptr;
      check(nhg_sampling_spec_parse(read_file(sampling_path).c_str(), &sp));
      sampling.reset(sp);
    } else {
      // Uniform over the coalitions observed in the sample (or the game).
      std::vector<uint32_t> masks;
      if (!sample_path.empty()) {
        try {
          nlohmann::json j = nlohmann::json::parse(sample_json);
          for (const auto& obs : j.at("observations")) {
            uint32_t mask = mask_of_members(obs.at("coalition"));
            if (std::find(masks.begin(), masks.end(), mask) == masks.end()) masks.push_back(mask);
          }
        } catch (const nlohmann::json::exception& e) {
          die_config(std::string("invalid sample file: ") + e.what());
        }
      } else {
        OwnedString game_json;
        check(nhg_game_to_json(game.get(), &game_json.ptr));
        masks = coalition_masks_of_game_json(game_json.str());
      }
      nlohmann::json spec_json = {{"kind", "list"}, {"n", n}, {"seed", seed}};
      nlohmann::json arr = nlohmann::json::array();
      for (uint32_t mask : masks) {
        nlohmann::json members = nlohmann::json::array();
        for (int a = 0; a < 32; ++a) {
          if (mask & (uint32_t{1} << a)) members.push_back(a);
        }
        arr.push_back(members);
      }
      spec_json["coalitions"] = arr;
      nhg_sampling_spec* sp = nullptr;
      check(nhg_sampling_spec_parse(spec_json.dump().c_str(), &sp));
      sampling.reset(sp);
    }
    if (seed_given) check(nhg_sampling_spec_set_seed(sampling.get(), seed));

    double rate = 0.0;
    check(nhg_empirical_blocking_rate(pi.get(), sampling.get(), game.get(), m_eval, &rate));
    OwnedString pi_json;
    check(nhg_partition_to_json(pi.get(), &pi_json.ptr));
    nlohmann::json j = {{"partition", nlohmann::json::parse(pi_json.str())},
                        {"empirical_blocking_rate", rate},
                        {"m_eval", m_eval}};
    emit(out_path, j.dump(2) + "\n");
    return 0;
  }

  if (enumerate->parsed()) {
    GameHandle game = load_game(game_path);
    NoiseHandle noise = load_noise(noise_path);
    OwnedString out;
    check(nhg_enumerate_cases_csv(game.get(), noise.get(), &out.ptr));
    emit(out_path, out.str());
    return 0;
  }

  if (predict->parsed()) {
    GameHandle game = load_game(game_path);
    double value = 0.0;
    if (alpha > 0.0) {
      check(nhg_two_agent_predict_2support(game.get(), p1, alpha, &value));
    } else {
      check(nhg_two_agent_predict_3support(game.get(), alpha1, alpha2, p1, p2, &value));
    }
    emit(out_path, nlohmann::json{{"probability", value}}.dump(2) + "\n");
    return 0;
  }

  return kExitConfig;
}
