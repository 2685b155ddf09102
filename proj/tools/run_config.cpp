// Copyright 2026 The bosim Authors
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

#include "run_config.hpp"

#include <cmath>
#include <set>

#include "bosim/errors.hpp"
#include "bosim/io.hpp"
#include "bosim/version.hpp"

namespace bosim::cli {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxTrials = 100'000'000;

const char* command_name(Command c) {
  switch (c) {
    case Command::kDistribution: return "distribution";
    case Command::kSample: return "sample";
    case Command::kScaling: return "scaling";
    case Command::kFilter: return "filter";
  }
  return "?";
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.contains(key)) throw ParseError(where + ": unknown field '" + key + "'");
  }
}

template <class T>
T get_field(const json& obj, const char* key, const std::string& where) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(where + "." + key + ": wrong type");
  }
}

std::uint64_t get_unsigned(const json& obj, const char* key, const std::string& where) {
  const auto& v = obj.at(key);
  if (!v.is_number_unsigned()) throw ParseError(where + "." + key + ": expected a non-negative integer");
  return v.get<std::uint64_t>();
}

double get_probability(const json& obj, const char* key, const std::string& where) {
  const auto& v = obj.at(key);
  if (!v.is_number()) throw ParseError(where + "." + key + ": expected a number");
  const double x = v.get<double>();
  if (!(x >= 0.0 && x <= 1.0)) throw InvalidArgument(where + "." + key + ": must lie in [0, 1]");
  return x;
}

std::vector<int> get_photon_list(const json& obj, const std::string& where) {
  const auto& list = obj.at("n");
  if (!list.is_array() || list.empty()) throw ParseError(where + ".n: expected a non-empty array");
  std::vector<int> out;
  for (const auto& v : list) {
    if (!v.is_number_integer() || v.get<int>() < 1) {
      throw InvalidArgument(where + ".n: photon counts must be positive integers");
    }
    out.push_back(v.get<int>());
  }
  return out;
}

// Rejects (n, m, noise) combinations the experiment would refuse, with the
// size that tripped the guard.
void check_feasible(int n, int m, const NoiseModel& noise, const ComputeOptions& options) {
  ExperimentShape{n, m}.validate(options.max_configurations);
  if (experiment_feasible(n, m, noise, options)) return;
  const std::string label = "n=" + std::to_string(n) + ", m=" + std::to_string(m);
  const bool pairs = noise.channel == ErrorChannel::kNumber && noise.p2 > 0.0;
  bool any_error = false;
  for (int i = 0; i < n; ++i) any_error = any_error || noise.ideal_probability(i) < 1.0;
  const int max_photons = (pairs && any_error) ? 2 * n : n;
  if (max_photons > kRyserPermanentLimit) {
    throw GuardError(label + ": photon pairs exceed the permanent guard",
                     static_cast<std::uint64_t>(max_photons), kRyserPermanentLimit);
  }
  for (int t = n; t <= max_photons; ++t) {
    const auto count = configuration_count(t, m);
    if (count > options.max_configurations) {
      throw GuardError(label + ": noisy branches exceed the enumeration guard", count,
                       options.max_configurations);
    }
  }
  const double per_mode = noise.channel == ErrorChannel::kNumber ? 3.0 : 2.0;
  throw GuardError(label + ": input ensemble exceeds the branch guard",
                   static_cast<std::uint64_t>(std::pow(per_mode, n)), options.max_branches);
}

bool is_noiseless(const NoiseModel& noise) {
  if (noise.p != 1.0 || noise.eta != 1.0) return false;
  for (double q : noise.per_mode_p) {
    if (q != 1.0) return false;
  }
  return true;
}

}  // namespace

UnitaryMatrix RunConfig::unitary() const {
  const int m = shape->modes;
  if (circuit) return compose(*circuit, m);
  return haar_random(m, {*haar_seed, 0});
}

ModeOccupation RunConfig::input_occupation() const {
  if (input) return *input;
  return ModeOccupation::single_photons(shape->photons, shape->modes);
}

json RunConfig::metadata() const {
  json meta = {{"tool", "bosim"},
               {"version", kVersion},
               {"command", command_name(command)},
               {"seed", seed},
               {"threads", options.threads},
               {"guards",
                {{"max_configurations", options.max_configurations},
                 {"max_branches", options.max_branches}}}};
  switch (command) {
    case Command::kScaling:
      meta["noise"] = io::noise_to_json(scaling.noise);
      meta["mode_rule"] = scaling.rule.to_string();
      meta["trials"] = scaling.trials;
      meta["unitaries"] = scaling.unitaries;
      meta["n"] = scaling.photon_counts;
      break;
    case Command::kFilter:
      meta["eta"] = filter.eta;
      meta["mode_rule"] = filter.rule.to_string();
      meta["trials"] = filter.trials;
      meta["n"] = filter.photon_counts;
      break;
    default:
      meta["n"] = shape->photons;
      meta["m"] = shape->modes;
      meta["noise"] = io::noise_to_json(noise);
      meta["trials"] = trials;
      if (haar_seed) meta["haar_seed"] = *haar_seed;
      break;
  }
  return meta;
}

RunConfig load_run_config(Command command, const std::optional<std::filesystem::path>& path,
                          const Overrides& overrides) {
  json doc = json::object();
  if (path) doc = io::parse_json(io::read_file(*path), path->string());
  reject_unknown(doc,
                 {"n", "m", "input", "circuit", "circuit_file", "haar_seed", "noise", "sampling",
                  "scaling", "filter", "guards", "threads"},
                 "config");

  RunConfig cfg;
  cfg.command = command;

  if (doc.contains("guards")) {
    const auto& g = doc["guards"];
    reject_unknown(g, {"max_configurations", "max_branches"}, "guards");
    if (g.contains("max_configurations")) cfg.options.max_configurations = get_unsigned(g, "max_configurations", "guards");
    if (g.contains("max_branches")) cfg.options.max_branches = get_unsigned(g, "max_branches", "guards");
  }
  if (doc.contains("threads")) cfg.options.threads = static_cast<int>(get_unsigned(doc, "threads", "config"));
  if (overrides.threads) cfg.options.threads = *overrides.threads;
  if (cfg.options.threads < 1 || cfg.options.threads > 256) {
    throw InvalidArgument("threads must lie in [1, 256]");
  }

  if (doc.contains("sampling")) {
    const auto& s = doc["sampling"];
    reject_unknown(s, {"trials", "seed"}, "sampling");
    if (s.contains("trials")) cfg.trials = get_unsigned(s, "trials", "sampling");
    if (s.contains("seed")) cfg.seed = get_unsigned(s, "seed", "sampling");
  }
  if (overrides.seed) cfg.seed = *overrides.seed;
  if (cfg.trials < 1) throw InvalidArgument("sampling.trials must be positive");
  if (cfg.trials > kMaxTrials) throw GuardError("sampling.trials above the trial guard", cfg.trials, kMaxTrials);
  if (overrides.out_dir) cfg.out_dir = *overrides.out_dir;

  if (doc.contains("noise")) cfg.noise = io::noise_from_json(doc["noise"]);

  const int sources = static_cast<int>(doc.contains("circuit")) +
                      static_cast<int>(doc.contains("circuit_file")) +
                      static_cast<int>(doc.contains("haar_seed"));

  if (command == Command::kDistribution || command == Command::kSample) {
    if (sources != 1) {
      throw ParseError("config: exactly one of 'circuit', 'circuit_file', 'haar_seed' is required");
    }
    if (doc.contains("input")) {
      if (command == Command::kSample) throw ParseError("config.input: sample always uses the single-photon input");
      const auto& in = doc["input"];
      if (!in.is_array()) throw ParseError("config.input: expected an array of photon counts");
      std::vector<int> counts;
      for (const auto& v : in) {
        if (!v.is_number_integer()) throw ParseError("config.input: expected integers");
        counts.push_back(v.get<int>());
      }
      cfg.input = ModeOccupation(std::move(counts));
      cfg.shape = ExperimentShape{cfg.input->total(), cfg.input->modes()};
      if (doc.contains("n") && get_field<int>(doc, "n", "config") != cfg.shape->photons) {
        throw InvalidArgument("config.n disagrees with the photon total of config.input");
      }
      if (doc.contains("m") && get_field<int>(doc, "m", "config") != cfg.shape->modes) {
        throw InvalidArgument("config.m disagrees with the length of config.input");
      }
      if (cfg.shape->photons > kRyserPermanentLimit) {
        throw GuardError("photon total above the permanent guard",
                         static_cast<std::uint64_t>(cfg.shape->photons), kRyserPermanentLimit);
      }
      const auto count = configuration_count(cfg.shape->photons, cfg.shape->modes);
      if (count > cfg.options.max_configurations) {
        throw GuardError("output space exceeds the enumeration guard", count, cfg.options.max_configurations);
      }
    } else {
      if (!doc.contains("n") || !doc.contains("m")) throw ParseError("config: fields 'n' and 'm' are required");
      cfg.shape = ExperimentShape{get_field<int>(doc, "n", "config"), get_field<int>(doc, "m", "config")};
      cfg.shape->validate(cfg.options.max_configurations);
    }

    if (doc.contains("circuit")) {
      cfg.circuit = io::circuit_from_json(doc["circuit"]);
    } else if (doc.contains("circuit_file")) {
      const std::filesystem::path file = get_field<std::string>(doc, "circuit_file", "config");
      const auto resolved = file.is_relative() && path ? path->parent_path() / file : file;
      cfg.circuit = io::circuit_from_json(io::parse_json(io::read_file(resolved), resolved.string()));
    } else {
      cfg.haar_seed = get_unsigned(doc, "haar_seed", "config");
    }
    // Element indices and unitarity are checked here, before any sampling.
    (void)cfg.unitary();

    if (cfg.input && !is_noiseless(cfg.noise)) {
      throw InvalidArgument("config: a custom input cannot be combined with a noise model");
    }
    if (!cfg.input) {
      cfg.noise.validate(cfg.shape->photons);
      check_feasible(cfg.shape->photons, cfg.shape->modes, cfg.noise, cfg.options);
    }
    return cfg;
  }

  if (sources != 0 || doc.contains("input") || doc.contains("n") || doc.contains("m")) {
    throw ParseError(std::string("config: '") + command_name(command) +
                     "' draws its own Haar unitaries; remove circuit, input, n and m");
  }

  if (command == Command::kScaling) {
    auto& sc = cfg.scaling;
    if (doc.contains("noise")) {
      sc.noise = cfg.noise;
      if (!doc["noise"].contains("p")) sc.noise.p = ScalingConfig{}.noise.p;
    }
    if (doc.contains("scaling")) {
      const auto& s = doc["scaling"];
      reject_unknown(s, {"p", "n", "mode_rule", "unitaries"}, "scaling");
      if (s.contains("p")) sc.noise.p = get_probability(s, "p", "scaling");
      if (s.contains("n")) sc.photon_counts = get_photon_list(s, "scaling");
      if (s.contains("mode_rule")) sc.rule = ModeCountRule::parse(get_field<std::string>(s, "mode_rule", "scaling"));
      if (s.contains("unitaries")) sc.unitaries = static_cast<int>(get_unsigned(s, "unitaries", "scaling"));
    }
    if (sc.unitaries < 1) throw InvalidArgument("scaling.unitaries must be positive");
    sc.trials = cfg.trials;
    sc.seed = cfg.seed;
    sc.options = cfg.options;
    for (int n : sc.photon_counts) {
      sc.noise.validate(n);
      check_feasible(n, sc.rule.modes(n), sc.noise, sc.options);
    }
    return cfg;
  }

  auto& fc = cfg.filter;
  if (doc.contains("filter")) {
    const auto& f = doc["filter"];
    reject_unknown(f, {"eta", "n", "mode_rule"}, "filter");
    if (f.contains("eta")) fc.eta = get_probability(f, "eta", "filter");
    if (f.contains("n")) fc.photon_counts = get_photon_list(f, "filter");
    if (f.contains("mode_rule")) fc.rule = ModeCountRule::parse(get_field<std::string>(f, "mode_rule", "filter"));
  } else if (doc.contains("noise")) {
    fc.eta = cfg.noise.eta;
  }
  fc.trials = cfg.trials;
  fc.seed = cfg.seed;
  fc.options = cfg.options;
  NoiseModel loss;
  loss.eta = fc.eta;
  for (int n : fc.photon_counts) check_feasible(n, fc.rule.modes(n), loss, fc.options);
  return cfg;
}

}  // namespace bosim::cli
