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

#include <cstdio>
#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "bosim/distribution.hpp"
#include "bosim/errors.hpp"
#include "bosim/io.hpp"
#include "bosim/permanent.hpp"
#include "bosim/sampling.hpp"
#include "bosim/version.hpp"
#include "run_config.hpp"

namespace {

using namespace bosim;
using nlohmann::json;

constexpr int kExitParse = 2;
constexpr int kExitGuard = 3;
constexpr int kExitIo = 4;

struct CommonArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  std::string out;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool config_required) {
  auto* opt = cmd->add_option("--config", args.config, "JSON run configuration");
  if (config_required) opt->required();
  cmd->add_option("--seed", args.seed, "Override the sampling seed");
  cmd->add_option("--threads", args.threads, "Worker threads")->check(CLI::Range(1, 256));
  cmd->add_option("--out", args.out, "Output directory (default: current directory)");
}

std::filesystem::path prepare_out_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  return dir;
}

void write_json(const std::filesystem::path& path, const json& j) {
  io::write_file_atomic(path, j.dump(2) + "\n");
}

void report(const std::filesystem::path& path) { std::cout << "wrote " << path.string() << "\n"; }

cli::RunConfig load(cli::Command command, const CommonArgs& args) {
  cli::Overrides ov;
  ov.seed = args.seed;
  ov.threads = args.threads;
  if (!args.out.empty()) ov.out_dir = args.out;
  std::optional<std::filesystem::path> path;
  if (!args.config.empty()) path = args.config;
  return cli::load_run_config(command, path, ov);
}

int run_permanent(const std::string& file, int threads) {
  const auto m = io::matrix_from_json(io::parse_json(io::read_file(file), file));
  if (m.rows() != m.cols()) throw InvalidArgument("permanent: matrix must be square");
  if (m.rows() > kRyserPermanentLimit) {
    throw GuardError("permanent: matrix size above the Ryser guard",
                     static_cast<std::uint64_t>(m.rows()), kRyserPermanentLimit);
  }
  // Adding 0.0 turns a signed zero into +0.
  const Complex v = permanent_ryser(m, threads) + Complex(0.0, 0.0);
  std::cout << "[" << io::format_double(v.real()) << ", " << io::format_double(v.imag()) << "]\n";
  return 0;
}

int run_distribution(const cli::RunConfig& cfg) {
  const auto dir = prepare_out_dir(cfg.out_dir);
  const auto u = cfg.unitary();
  OutputDistribution dist = cfg.input
                                ? output_distribution(u, *cfg.input, cfg.options)
                                : noisy_distribution(u, *cfg.shape, cfg.noise, cfg.options);
  const auto path = dir / "distribution.csv";
  io::write_file_atomic(path, io::distribution_csv(dist));
  report(path);
  return 0;
}

int run_sample(const cli::RunConfig& cfg) {
  const auto dir = prepare_out_dir(cfg.out_dir);
  const auto u = cfg.unitary();
  const NoisyEnsemble ensemble(u, *cfg.shape, cfg.noise, cfg.options);
  const auto samples = ensemble.sample({cfg.seed, 0}, cfg.trials, cfg.options.threads);
  const auto post = postselect(samples, cfg.shape->photons);
  std::size_t ideal = 0;
  for (const auto& s : samples) ideal += s.branch_ideal ? 1 : 0;

  auto summary = cfg.metadata();
  summary["results"] = {
      {"samples", samples.size()},
      {"postselected", post.kept.size()},
      {"postselection_success", post.success_rate},
      {"ideal_branch_fraction", static_cast<double>(ideal) / static_cast<double>(samples.size())},
      {"analytic_ideal_probability", ideal_component_probability(cfg.noise, cfg.shape->photons)}};

  const auto csv = dir / "samples.csv";
  const auto js = dir / "sample_summary.json";
  io::write_file_atomic(csv, io::samples_csv(samples));
  write_json(js, summary);
  report(csv);
  report(js);
  return 0;
}

json number_or_null(double x) { return std::isnan(x) ? json(nullptr) : json(x); }

int run_scaling(const cli::RunConfig& cfg) {
  const auto dir = prepare_out_dir(cfg.out_dir);
  const auto rows = run_scaling_experiment(cfg.scaling);
  auto summary = cfg.metadata();
  summary["rows"] = json::array();
  for (const auto& r : rows) {
    summary["rows"].push_back({{"n", r.photons},
                               {"m", r.modes},
                               {"analytic_ideal_probability", r.analytic_ideal_probability},
                               {"empirical_ideal_fraction", number_or_null(r.empirical_ideal_fraction)},
                               {"tvd_ideal_noisy", number_or_null(r.tvd_ideal_noisy)},
                               {"tvd_ideal_postselected", number_or_null(r.tvd_ideal_postselected)},
                               {"postselection_success", number_or_null(r.postselection_success)},
                               {"feasible", r.feasible}});
  }
  const auto csv = dir / "scaling.csv";
  const auto js = dir / "scaling_summary.json";
  io::write_file_atomic(csv, io::scaling_csv(rows));
  write_json(js, summary);
  report(csv);
  report(js);
  return 0;
}

int run_filter(const cli::RunConfig& cfg) {
  const auto dir = prepare_out_dir(cfg.out_dir);
  const auto rows = run_filter_experiment(cfg.filter);
  auto summary = cfg.metadata();
  summary["rows"] = json::array();
  for (const auto& r : rows) {
    summary["rows"].push_back({{"n", r.photons},
                               {"m", r.modes},
                               {"analytic_success", r.analytic_success},
                               {"empirical_success", number_or_null(r.empirical_success)},
                               {"trials", r.trials},
                               {"feasible", r.feasible}});
  }
  const auto csv = dir / "filter.csv";
  const auto js = dir / "filter_summary.json";
  io::write_file_atomic(csv, io::filter_csv(rows));
  write_json(js, summary);
  report(csv);
  report(js);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noisy boson sampling simulator"};
  app.set_version_flag("--version", std::string(bosim::kVersion));
  app.require_subcommand(1);

  std::string matrix_file;
  int perm_threads = 1;
  auto* perm = app.add_subcommand("permanent", "Permanent of a square complex matrix (JSON)");
  perm->add_option("matrix", matrix_file, "JSON file: array of rows, entries are [re, im] pairs")
      ->required();
  perm->add_option("--threads", perm_threads, "Worker threads")->check(CLI::Range(1, 256));

  CommonArgs dist_args, sample_args, scaling_args, filter_args;
  auto* dist = app.add_subcommand("distribution", "Exact output distribution");
  add_common(dist, dist_args, true);
  auto* sample = app.add_subcommand("sample", "Monte-Carlo samples from the noisy experiment");
  add_common(sample, sample_args, true);
  auto* scaling = app.add_subcommand("scaling", "Ideal-fraction and TVD scaling experiment");
  add_common(scaling, scaling_args, false);
  auto* filter = app.add_subcommand("filter", "Pure-loss post-selection experiment");
  add_common(filter, filter_args, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*perm) return run_permanent(matrix_file, perm_threads);
    if (*dist) return run_distribution(load(cli::Command::kDistribution, dist_args));
    if (*sample) return run_sample(load(cli::Command::kSample, sample_args));
    if (*scaling) return run_scaling(load(cli::Command::kScaling, scaling_args));
    if (*filter) return run_filter(load(cli::Command::kFilter, filter_args));
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << " (requested " << e.requested() << ", limit "
              << e.limit() << ")\n";
    return kExitGuard;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
