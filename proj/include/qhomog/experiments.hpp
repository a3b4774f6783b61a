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

#ifndef QHOMOG_EXPERIMENTS_HPP
#define QHOMOG_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qhomog/dynamics.hpp"
#include "qhomog/states.hpp"
#include "qhomog/witness.hpp"

namespace qhomog {

enum class ExperimentKind { kConverge, kGapCurve, kCrossing, kRegimes };

// Parsed and validated experiment description. A fixed seed fully
// determines all stochastic draws; identical configs produce byte-identical
// artifacts regardless of worker count.
struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::kGapCurve;
  ReservoirInit init;
  int n_steps = 0;
  EtaSchedule::Kind sched_kind = EtaSchedule::Kind::kUniformRandom;
  double sched_eta = 0.0;
  double sched_mean = 0.0;
  double sched_stddev = 0.0;
  std::vector<double> grid;  // eta grid (gap-curve, crossing) or p grid (regimes)
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  std::string fiducial = "one";  // one | zero | plus | mixed

  EtaSchedule schedule() const;
  WitnessOptions witness_options() const;
};

// Strict JSON parsing: unknown fields and fields inapplicable to the chosen
// experiment are rejected; documented defaults are filled in.
ExperimentConfig parse_config(const std::string& json_text);

// Canonical form: every field explicit, keys sorted; parse(serialize(c))
// reproduces c.
std::string serialize_config(const ExperimentConfig& config);

// Format a double with 17 significant digits (exact round-trip text).
std::string format_g17(double x);

std::string trajectory_csv(const Trajectory& traj);
std::string gap_curve_csv(const GapCurve& curve);
std::string regimes_csv(const std::vector<std::pair<double, Trajectory>>& table);
std::string crossing_summary_json(const GapCurve& curve);

// Artifacts written by each experiment, under config.out_dir:
//   converge:  trajectory_markov.csv, trajectory_composite.csv
//   gap-curve: gap_curve.csv, summary.json
//   crossing:  summary.json
//   regimes:   regimes.csv
// Returns the paths written.
std::vector<std::string> run_experiment(const ExperimentConfig& config,
                                        int jobs = 1);

}  // namespace qhomog

#endif  // QHOMOG_EXPERIMENTS_HPP
