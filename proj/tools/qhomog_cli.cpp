// Copyright 2026 The qhomog Authors
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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qhomog/experiments.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct CommonFlags {
  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int jobs = 1;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_path, "experiment config (JSON)")
      ->required();
  cmd->add_option("--out", flags.out_dir, "output directory (overrides config)");
  cmd->add_option("--seed", flags.seed, "root seed (overrides config)")
      ->each([&](const std::string&) { flags.seed_set = true; });
  cmd->add_option("--jobs", flags.jobs, "worker count")->check(CLI::Range(1, 256));
}

int run(const CommonFlags& flags, const std::string& expected) {
  std::ifstream in(flags.config_path, std::ios::binary);
  if (!in) {
    std::cerr << "config error: cannot open '" << flags.config_path << "'\n";
    return kExitConfig;
  }
  std::ostringstream buf;
  buf << in.rdbuf();

  try {
    qhomog::ExperimentConfig config = qhomog::parse_config(buf.str());
    const std::string kind = [&] {
      switch (config.experiment) {
        case qhomog::ExperimentKind::kConverge:
          return "converge";
        case qhomog::ExperimentKind::kGapCurve:
          return "gap-curve";
        case qhomog::ExperimentKind::kCrossing:
          return "crossing";
        case qhomog::ExperimentKind::kRegimes:
          return "regimes";
      }
      return "";
    }();
    if (kind != expected) {
      std::cerr << "config error: config declares experiment '" << kind
                << "' but subcommand is '" << expected << "'\n";
      return kExitConfig;
    }
    if (flags.seed_set) config.seed = flags.seed;
    if (!flags.out_dir.empty()) config.out_dir = flags.out_dir;
    const auto written = qhomog::run_experiment(config, flags.jobs);
    for (const auto& path : written) std::cout << path << "\n";
    return kExitOk;
  } catch (const qhomog::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const qhomog::Error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qhomog: collision-model quantum homogenizer with Fredkin-mediated "
      "reservoir memory"};
  app.require_subcommand(1);

  CommonFlags converge_flags, gap_flags, crossing_flags, regimes_flags;
  CLI::App* converge =
      app.add_subcommand("converge", "Markovian vs composite convergence run");
  add_common(converge, converge_flags);
  CLI::App* gap = app.add_subcommand("gap-curve", "memory-witness gap sweep");
  add_common(gap, gap_flags);
  CLI::App* crossing =
      app.add_subcommand("crossing", "memory-witness sign crossing only");
  add_common(crossing, crossing_flags);
  CLI::App* regimes =
      app.add_subcommand("regimes", "operator-sum interpolation sweep");
  add_common(regimes, regimes_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    // CLI11 returns 0 for --help; anything else is a usage error.
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (converge->parsed()) return run(converge_flags, "converge");
  if (gap->parsed()) return run(gap_flags, "gap-curve");
  if (crossing->parsed()) return run(crossing_flags, "crossing");
  if (regimes->parsed()) return run(regimes_flags, "regimes");
  return kExitConfig;
}
