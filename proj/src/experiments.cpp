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

#include "qhomog/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qhomog {

namespace {

using nlohmann::json;

constexpr double kHalfPi = std::numbers::pi / 2;

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.count(key))
      throw ConfigError("unknown field '" + key + "' in " + where);
  }
}

double require_number(const json& obj, const std::string& field) {
  if (!obj.at(field).is_number())
    throw ConfigError("field '" + field + "' must be a number");
  return obj.at(field).get<double>();
}

ReservoirInit parse_init(const json& j, ExperimentKind experiment) {
  if (!j.is_object()) throw ConfigError("'init' must be an object");
  reject_unknown(j, {"kind", "n_qubits", "alpha", "site"}, "'init'");
  if (!j.contains("kind") || !j.at("kind").is_string())
    throw ConfigError("'init.kind' must be a string");
  const std::string kind = j.at("kind").get<std::string>();

  auto get_n = [&](int fallback) {
    if (!j.contains("n_qubits")) return fallback;
    if (!j.at("n_qubits").is_number_integer())
      throw ConfigError("'init.n_qubits' must be an integer");
    return j.at("n_qubits").get<int>();
  };
  auto forbid = [&](const char* field, const char* why) {
    if (j.contains(field))
      throw ConfigError(std::string("'init.") + field + "' is only valid for " +
                        why);
  };

  ReservoirInit init;
  if (kind == "product") {
    forbid("alpha", "perturbed_ghz");
    forbid("site", "xerror_ghz");
    init = ReservoirInit::product(
        get_n(experiment == ExperimentKind::kConverge ? 4 : 3));
  } else if (kind == "bell") {
    forbid("alpha", "perturbed_ghz");
    forbid("site", "xerror_ghz");
    init = ReservoirInit::bell(get_n(3));
  } else if (kind == "ghz") {
    forbid("alpha", "perturbed_ghz");
    forbid("site", "xerror_ghz");
    init = ReservoirInit::ghz(get_n(3));
  } else if (kind == "asym_ghz") {
    forbid("alpha", "perturbed_ghz");
    forbid("site", "xerror_ghz");
    if (get_n(3) != 3) throw ConfigError("'asym_ghz' is a 3-qubit state");
    init = ReservoirInit::asym_ghz();
  } else if (kind == "perturbed_ghz") {
    forbid("site", "xerror_ghz");
    if (!j.contains("alpha"))
      throw ConfigError("'perturbed_ghz' requires 'init.alpha'");
    const double alpha = require_number(j, "alpha");
    if (alpha < 0.0 || alpha > 1.0)
      throw ConfigError("'init.alpha' must lie in [0, 1]");
    if (get_n(3) != 3) throw ConfigError("'perturbed_ghz' is a 3-qubit state");
    init = ReservoirInit::perturbed_ghz(alpha);
  } else if (kind == "xerror_ghz") {
    forbid("alpha", "perturbed_ghz");
    const int n = get_n(3);
    int site = 1;
    if (j.contains("site")) {
      if (!j.at("site").is_number_integer())
        throw ConfigError("'init.site' must be an integer");
      site = j.at("site").get<int>();
    }
    if (site < 1 || site > n)
      throw ConfigError("'init.site' must lie in [1, n_qubits]");
    init = ReservoirInit::xerror_ghz(site, n);
  } else {
    throw ConfigError("unknown 'init.kind' value '" + kind + "'");
  }
  return init;
}

void parse_schedule(const json& j, ExperimentConfig& config) {
  if (!j.is_object()) throw ConfigError("'eta' must be an object");
  reject_unknown(j, {"kind", "eta", "mean", "stddev"}, "'eta'");
  if (!j.contains("kind") || !j.at("kind").is_string())
    throw ConfigError("'eta.kind' must be a string");
  const std::string kind = j.at("kind").get<std::string>();
  auto forbid = [&](const char* field, const char* owner) {
    if (j.contains(field))
      throw ConfigError(std::string("'eta.") + field + "' is only valid for '" +
                        owner + "' schedules");
  };
  if (kind == "fixed") {
    forbid("mean", "gaussian");
    forbid("stddev", "gaussian");
    if (!j.contains("eta")) throw ConfigError("'fixed' schedule requires 'eta.eta'");
    const double eta = require_number(j, "eta");
    if (eta < 0.0 || eta > kHalfPi)
      throw ConfigError("'eta.eta' must lie in [0, pi/2]");
    config.sched_kind = EtaSchedule::Kind::kFixed;
    config.sched_eta = eta;
  } else if (kind == "uniform") {
    forbid("eta", "fixed");
    forbid("mean", "gaussian");
    forbid("stddev", "gaussian");
    config.sched_kind = EtaSchedule::Kind::kUniformRandom;
  } else if (kind == "gaussian") {
    forbid("eta", "fixed");
    if (!j.contains("mean"))
      throw ConfigError("'gaussian' schedule requires 'eta.mean'");
    const double mean = require_number(j, "mean");
    if (mean < 0.0 || mean > kHalfPi)
      throw ConfigError("'eta.mean' must lie in [0, pi/2]");
    // Default spread: 0.1 * pi/2.
    double stddev = 0.1 * kHalfPi;
    if (j.contains("stddev")) stddev = require_number(j, "stddev");
    if (stddev < 0.0) throw ConfigError("'eta.stddev' must be nonnegative");
    config.sched_kind = EtaSchedule::Kind::kGaussianRandom;
    config.sched_mean = mean;
    config.sched_stddev = stddev;
  } else {
    throw ConfigError("unknown 'eta.kind' value '" + kind + "'");
  }
}

std::vector<double> parse_grid(const json& j, bool is_p_grid) {
  if (!j.is_array()) throw ConfigError("'grid' must be an array of numbers");
  std::vector<double> grid;
  for (const auto& v : j) {
    if (!v.is_number()) throw ConfigError("'grid' must be an array of numbers");
    grid.push_back(v.get<double>());
  }
  if (grid.size() < (is_p_grid ? 1u : 2u))
    throw ConfigError("'grid' has too few points");
  const double hi = is_p_grid ? 1.0 : kHalfPi;
  for (size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 0.0 || grid[i] > hi + 1e-12)
      throw ConfigError(is_p_grid ? "'grid' p values must lie in [0, 1]"
                                  : "'grid' eta values must lie in [0, pi/2]");
    if (i > 0 && grid[i] <= grid[i - 1])
      throw ConfigError("'grid' must be strictly increasing");
  }
  return grid;
}

}  // namespace

EtaSchedule ExperimentConfig::schedule() const {
  switch (sched_kind) {
    case EtaSchedule::Kind::kFixed:
      return EtaSchedule::fixed(sched_eta);
    case EtaSchedule::Kind::kUniformRandom:
      return EtaSchedule::uniform(seed);
    case EtaSchedule::Kind::kGaussianRandom:
      return EtaSchedule::gaussian(sched_mean, sched_stddev, seed);
  }
  throw ConfigError("unknown schedule kind");
}

WitnessOptions ExperimentConfig::witness_options() const {
  WitnessOptions opts;
  Mat f = Mat::Zero(2, 2);
  if (fiducial == "one") {
    f(1, 1) = 1.0;
  } else if (fiducial == "zero") {
    f(0, 0) = 1.0;
  } else if (fiducial == "plus") {
    f(0, 0) = f(0, 1) = f(1, 0) = f(1, 1) = 0.5;
  } else if (fiducial == "mixed") {
    f(0, 0) = f(1, 1) = 0.5;
  } else {
    throw ConfigError("'fiducial' must be one of one|zero|plus|mixed");
  }
  opts.fiducial = f;
  return opts;
}

ExperimentConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown(j,
                 {"experiment", "init", "n_steps", "eta", "grid", "seed",
                  "out_dir", "fiducial"},
                 "config");
  if (!j.contains("experiment") || !j.at("experiment").is_string())
    throw ConfigError("'experiment' must be a string");
  const std::string exp = j.at("experiment").get<std::string>();

  ExperimentConfig config;
  if (exp == "converge")
    config.experiment = ExperimentKind::kConverge;
  else if (exp == "gap-curve")
    config.experiment = ExperimentKind::kGapCurve;
  else if (exp == "crossing")
    config.experiment = ExperimentKind::kCrossing;
  else if (exp == "regimes")
    config.experiment = ExperimentKind::kRegimes;
  else
    throw ConfigError("unknown 'experiment' value '" + exp + "'");

  auto forbid = [&](const char* field, const char* why) {
    if (j.contains(field))
      throw ConfigError(std::string("'") + field + "' is not valid for " + why);
  };

  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer())
      throw ConfigError("'seed' must be a nonnegative integer");
    if (j.at("seed").is_number_integer() && j.at("seed").get<long long>() < 0)
      throw ConfigError("'seed' must be a nonnegative integer");
    config.seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("out_dir")) {
    if (!j.at("out_dir").is_string())
      throw ConfigError("'out_dir' must be a string");
    config.out_dir = j.at("out_dir").get<std::string>();
  }

  switch (config.experiment) {
    case ExperimentKind::kConverge: {
      forbid("grid", "'converge' (grids belong to gap-curve/crossing/regimes)");
      forbid("fiducial", "'converge' (the fiducial belongs to the witness)");
      config.init = j.contains("init")
                        ? parse_init(j.at("init"), config.experiment)
                        : ReservoirInit::product(4);
      config.n_steps = 50;
      if (j.contains("n_steps")) {
        if (!j.at("n_steps").is_number_integer())
          throw ConfigError("'n_steps' must be an integer");
        config.n_steps = j.at("n_steps").get<int>();
      }
      if (config.n_steps < 1) throw ConfigError("'n_steps' must be >= 1");
      if (j.contains("eta"))
        parse_schedule(j.at("eta"), config);
      else
        config.sched_kind = EtaSchedule::Kind::kUniformRandom;
      break;
    }
    case ExperimentKind::kGapCurve:
    case ExperimentKind::kCrossing: {
      forbid("n_steps", "the witness experiments (two steps by definition)");
      forbid("eta", "the witness experiments (the grid sets eta)");
      config.init = j.contains("init")
                        ? parse_init(j.at("init"), config.experiment)
                        : ReservoirInit::bell(3);
      config.grid = j.contains("grid") ? parse_grid(j.at("grid"), false)
                                       : uniform_eta_grid(60);
      if (j.contains("fiducial")) {
        if (!j.at("fiducial").is_string())
          throw ConfigError("'fiducial' must be a string");
        config.fiducial = j.at("fiducial").get<std::string>();
        config.witness_options();  // validates the name
      }
      break;
    }
    case ExperimentKind::kRegimes: {
      forbid("init", "'regimes' (the appendix model fixes xi = |0><0|)");
      forbid("eta", "'regimes' (eta is determined by p)");
      forbid("fiducial", "'regimes'");
      config.n_steps = 10;
      if (j.contains("n_steps")) {
        if (!j.at("n_steps").is_number_integer())
          throw ConfigError("'n_steps' must be an integer");
        config.n_steps = j.at("n_steps").get<int>();
      }
      if (config.n_steps < 1) throw ConfigError("'n_steps' must be >= 1");
      config.grid = j.contains("grid") ? parse_grid(j.at("grid"), true)
                                       : std::vector<double>{0.0, 0.25, 0.5,
                                                             0.75, 1.0};
      break;
    }
  }
  return config;
}

std::string serialize_config(const ExperimentConfig& config) {
  json j;
  json init;
  switch (config.init.kind) {
    case ReservoirKind::kProduct:
      init["kind"] = "product";
      break;
    case ReservoirKind::kBell:
      init["kind"] = "bell";
      break;
    case ReservoirKind::kGHZ:
      init["kind"] = "ghz";
      break;
    case ReservoirKind::kAsymGHZ:
      init["kind"] = "asym_ghz";
      break;
    case ReservoirKind::kPerturbedGHZ:
      init["kind"] = "perturbed_ghz";
      init["alpha"] = config.init.alpha;
      break;
    case ReservoirKind::kXErrorGHZ:
      init["kind"] = "xerror_ghz";
      init["site"] = config.init.site;
      break;
  }
  init["n_qubits"] = config.init.n_qubits;

  switch (config.experiment) {
    case ExperimentKind::kConverge: {
      j["experiment"] = "converge";
      j["init"] = init;
      j["n_steps"] = config.n_steps;
      json eta;
      switch (config.sched_kind) {
        case EtaSchedule::Kind::kFixed:
          eta["kind"] = "fixed";
          eta["eta"] = config.sched_eta;
          break;
        case EtaSchedule::Kind::kUniformRandom:
          eta["kind"] = "uniform";
          break;
        case EtaSchedule::Kind::kGaussianRandom:
          eta["kind"] = "gaussian";
          eta["mean"] = config.sched_mean;
          eta["stddev"] = config.sched_stddev;
          break;
      }
      j["eta"] = eta;
      break;
    }
    case ExperimentKind::kGapCurve:
    case ExperimentKind::kCrossing:
      j["experiment"] = config.experiment == ExperimentKind::kGapCurve
                            ? "gap-curve"
                            : "crossing";
      j["init"] = init;
      j["grid"] = config.grid;
      j["fiducial"] = config.fiducial;
      break;
    case ExperimentKind::kRegimes:
      j["experiment"] = "regimes";
      j["n_steps"] = config.n_steps;
      j["grid"] = config.grid;
      break;
  }
  j["seed"] = config.seed;
  j["out_dir"] = config.out_dir;
  return j.dump(2) + "\n";
}

std::string format_g17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

void append_state_columns(std::ostringstream& os, const Mat& rho) {
  os << ',' << format_g17(rho(0, 0).real()) << ','
     << format_g17(rho(0, 1).real()) << ',' << format_g17(rho(0, 1).imag())
     << ',' << format_g17(rho(1, 1).real());
}

}  // namespace

std::string trajectory_csv(const Trajectory& traj) {
  std::ostringstream os;
  os << "step,eta,dist_l2,rho00_re,rho01_re,rho01_im,rho11_re\n";
  for (const auto& s : traj.steps) {
    os << s.step << ',' << format_g17(s.eta) << ',' << format_g17(s.dist);
    append_state_columns(os, s.rho_s);
    os << '\n';
  }
  return os.str();
}

std::string gap_curve_csv(const GapCurve& curve) {
  std::ostringstream os;
  os << "eta,c_assist_step1,c_form_step2,gap\n";
  for (const auto& s : curve.samples)
    os << format_g17(s.eta) << ',' << format_g17(s.c_assist) << ','
       << format_g17(s.c_form) << ',' << format_g17(s.gap) << '\n';
  return os.str();
}

std::string regimes_csv(
    const std::vector<std::pair<double, Trajectory>>& table) {
  std::ostringstream os;
  os << "p,step,eta,dist_l2,rho00_re,rho01_re,rho01_im,rho11_re\n";
  for (const auto& [p, traj] : table)
    for (const auto& s : traj.steps) {
      os << format_g17(p) << ',' << s.step << ',' << format_g17(s.eta) << ','
         << format_g17(s.dist);
      append_state_columns(os, s.rho_s);
      os << '\n';
    }
  return os.str();
}

std::string crossing_summary_json(const GapCurve& curve) {
  json j;
  j["init"] = curve.init.label();
  if (curve.crossing)
    j["eta_star"] = *curve.crossing;
  else
    j["eta_star"] = nullptr;
  return j.dump(2) + "\n";
}

namespace {

std::string write_file(const std::string& dir, const std::string& name,
                       const std::string& content) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create out_dir '" + dir + "'");
  const std::string path = (fs::path(dir) / name).string();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << content;
  return path;
}

}  // namespace

std::vector<std::string> run_experiment(const ExperimentConfig& config,
                                        int jobs) {
  std::vector<std::string> written;
  switch (config.experiment) {
    case ExperimentKind::kConverge: {
      Mat rho0 = Mat::Zero(2, 2);
      rho0(1, 1) = 1.0;
      const EtaSchedule sched = config.schedule();
      const Mat xi = config.init.xi_marginal();
      const Trajectory markov = homogenize(rho0, xi, config.n_steps, sched);
      const Trajectory composite =
          evolve_composite(rho0, config.init, config.n_steps, sched,
                           CollisionPlan::odd_targets(config.n_steps));
      written.push_back(write_file(config.out_dir, "trajectory_markov.csv",
                                   trajectory_csv(markov)));
      written.push_back(write_file(config.out_dir, "trajectory_composite.csv",
                                   trajectory_csv(composite)));
      break;
    }
    case ExperimentKind::kGapCurve: {
      const GapCurve curve =
          gap_curve(config.init, config.grid, config.witness_options(), jobs);
      written.push_back(
          write_file(config.out_dir, "gap_curve.csv", gap_curve_csv(curve)));
      written.push_back(write_file(config.out_dir, "summary.json",
                                   crossing_summary_json(curve)));
      break;
    }
    case ExperimentKind::kCrossing: {
      const GapCurve curve =
          gap_curve(config.init, config.grid, config.witness_options(), jobs);
      written.push_back(write_file(config.out_dir, "summary.json",
                                   crossing_summary_json(curve)));
      break;
    }
    case ExperimentKind::kRegimes: {
      const auto table = interpolation_sweep(config.grid, config.n_steps);
      written.push_back(
          write_file(config.out_dir, "regimes.csv", regimes_csv(table)));
      break;
    }
  }
  return written;
}

}  // namespace qhomog
