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

#include "qhomog/dynamics.hpp"

#include <cmath>
#include <numbers>

#include "qhomog/channels.hpp"
#include "qhomog/rng.hpp"

namespace qhomog {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

Mat default_xi() {
  Mat xi = Mat::Zero(2, 2);
  xi(0, 0) = 1.0;
  return xi;
}

void check_qubit_state(const Mat& rho, const char* who) {
  if (rho.rows() != 2 || rho.cols() != 2)
    throw DimensionError(std::string(who) + ": single-qubit state required");
}

}  // namespace

EtaSchedule EtaSchedule::fixed(double eta) {
  if (!(eta >= 0.0 && eta <= kHalfPi + 1e-12))
    throw PreconditionError("EtaSchedule: eta must lie in [0, pi/2]");
  EtaSchedule s;
  s.kind = Kind::kFixed;
  s.eta = eta;
  return s;
}

EtaSchedule EtaSchedule::uniform(std::uint64_t seed) {
  EtaSchedule s;
  s.kind = Kind::kUniformRandom;
  s.seed = seed;
  return s;
}

EtaSchedule EtaSchedule::gaussian(double mean, double stddev,
                                  std::uint64_t seed) {
  if (!(mean >= 0.0 && mean <= kHalfPi))
    throw PreconditionError("EtaSchedule: mean must lie in [0, pi/2]");
  if (stddev < 0.0)
    throw PreconditionError("EtaSchedule: stddev must be nonnegative");
  EtaSchedule s;
  s.kind = Kind::kGaussianRandom;
  s.mean = mean;
  s.stddev = stddev;
  s.seed = seed;
  return s;
}

double EtaSchedule::sample(int step) const {
  switch (kind) {
    case Kind::kFixed:
      return eta;
    case Kind::kUniformRandom: {
      SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(step));
      return rng.next_uniform(0.0, kHalfPi);
    }
    case Kind::kGaussianRandom: {
      SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(step));
      double v = mean + stddev * rng.next_gaussian();
      if (v < 0.0) v = 0.0;
      if (v > kHalfPi) v = kHalfPi;
      return v;
    }
  }
  throw PreconditionError("EtaSchedule: unknown kind");
}

CollisionPlan CollisionPlan::odd_targets(int n_steps) {
  if (n_steps < 1)
    throw PreconditionError("CollisionPlan: need at least one step");
  CollisionPlan plan;
  for (int k = 1; k <= n_steps; ++k) {
    plan.system_targets.push_back(2 * k - 1);
    if (k < n_steps)
      plan.fredkin_triples.push_back({2 * k - 1, 2 * k, 2 * k + 1});
  }
  return plan;
}

Trajectory homogenize(const Mat& rho_s, const Mat& xi, int n,
                      const EtaSchedule& schedule) {
  check_qubit_state(rho_s, "homogenize");
  check_qubit_state(xi, "homogenize");
  if (n < 1) throw PreconditionError("homogenize: need at least one step");
  Trajectory traj;
  Mat rho = rho_s;
  const FactorShape two = FactorShape::qubits(2);
  for (int k = 1; k <= n; ++k) {
    const double eta = schedule.sample(k);
    const Gate u = partial_swap(eta);
    const Mat joint = u.op * kron(rho, xi) * u.op.adjoint();
    rho = partial_trace(joint, two, {0});
    traj.steps.push_back({k, eta, l2_distance(rho, xi), rho});
  }
  return traj;
}

namespace {

// Dense composite run: the full joint register is kept in memory.
Trajectory composite_dense(const Mat& rho_s, const ReservoirInit& init,
                           int n, const EtaSchedule& schedule,
                           const CollisionPlan& plan, const Mat& target) {
  const int needed = 2 * n - 1;
  if (init.n_qubits < needed)
    throw PreconditionError(
        "evolve_composite: reservoir too small for the collision plan");
  const int total = 1 + init.n_qubits;
  if (total > 10)
    throw PreconditionError(
        "evolve_composite: dense joint register exceeds 10 qubits");
  const FactorShape shape = FactorShape::qubits(total);
  Mat state = kron(rho_s, build_reservoir(init));
  const Gate f = fredkin();
  Trajectory traj;
  for (int k = 1; k <= n; ++k) {
    const double eta = schedule.sample(k);
    const int t = plan.system_targets[static_cast<size_t>(k - 1)];
    state = apply_gate(state, partial_swap(eta), {0, t}, total);
    if (k < n) {
      const auto& tri = plan.fredkin_triples[static_cast<size_t>(k - 1)];
      state = apply_gate(state, f, {tri[0], tri[1], tri[2]}, total);
    }
    const Mat rho = partial_trace(state, shape, {0});
    traj.steps.push_back({k, eta, l2_distance(rho, target), rho});
  }
  return traj;
}

// Windowed composite run for product reservoirs. Fredkins only route fresh
// xi ancillas, so ancillas 2k-1 and 2k are dead once step k completes; the
// live window is the system, the step's collision partner, and the two
// Fredkin targets. Fresh xi ancillas are appended lazily, which realizes
// the iid reservoir sequence for any number of steps.
Trajectory composite_windowed_product(const Mat& rho_s, const Mat& xi, int n,
                                      const EtaSchedule& schedule) {
  Trajectory traj;
  // Window wires: 0 = S, 1 = current collision partner.
  Mat window = kron(rho_s, xi);
  const Gate f = fredkin();
  for (int k = 1; k <= n; ++k) {
    const double eta = schedule.sample(k);
    if (k < n) {
      // Extend by the two Fredkin targets (wires 2, 3).
      window = kron(window, kron(xi, xi));
      window = apply_gate(window, partial_swap(eta), {0, 1}, 4);
      window = apply_gate(window, f, {1, 2, 3}, 4);
      const Mat rho =
          partial_trace(window, FactorShape::qubits(4), {0});
      traj.steps.push_back({k, eta, l2_distance(rho, xi), rho});
      // Wires 1 (collided control) and 2 (first target) are never touched
      // again; the surviving second target becomes the next partner.
      window = partial_trace(window, FactorShape::qubits(4), {0, 3});
    } else {
      window = apply_gate(window, partial_swap(eta), {0, 1}, 2);
      const Mat rho = partial_trace(window, FactorShape::qubits(2), {0});
      traj.steps.push_back({k, eta, l2_distance(rho, xi), rho});
      window = kron(rho, xi);
    }
  }
  return traj;
}

}  // namespace

Trajectory evolve_composite(const Mat& rho_s, const ReservoirInit& init,
                            int n, const EtaSchedule& schedule,
                            const CollisionPlan& plan) {
  check_qubit_state(rho_s, "evolve_composite");
  if (n < 1)
    throw PreconditionError("evolve_composite: need at least one step");
  if (static_cast<int>(plan.system_targets.size()) < n ||
      static_cast<int>(plan.fredkin_triples.size()) < n - 1)
    throw PreconditionError("evolve_composite: plan does not cover the steps");
  if (init.kind == ReservoirKind::kProduct) {
    const Mat xi = init.xi.size() == 0 ? default_xi() : init.xi;
    return composite_windowed_product(rho_s, xi, n, schedule);
  }
  return composite_dense(rho_s, init, n, schedule, plan, init.xi_marginal());
}

Mat operator_sum_evolution(const Mat& rho_s, double p, int n) {
  return operator_sum_evolution(rho_s, default_xi(), p, n);
}

Mat operator_sum_evolution(const Mat& rho_s, const Mat& xi, double p, int n) {
  check_qubit_state(rho_s, "operator_sum_evolution");
  check_qubit_state(xi, "operator_sum_evolution");
  if (p < 0.0 || p > 1.0)
    throw PreconditionError("operator_sum_evolution: p must lie in [0, 1]");
  if (n < 0)
    throw PreconditionError("operator_sum_evolution: negative step count");
  const double eta = std::asin(std::sqrt(p));
  auto m_pow = [&](Mat rho, int k) {
    for (int i = 0; i < k; ++i) rho = collision_map(rho, xi, eta);
    return rho;
  };
  std::vector<Mat> history;
  history.push_back(rho_s);
  for (int big_n = 1; big_n <= n; ++big_n) {
    Mat acc = Mat::Zero(2, 2);
    for (int k = 1; k <= big_n - 1; ++k)
      acc += (1.0 - p) * std::pow(p, k - 1) *
             m_pow(history[static_cast<size_t>(big_n - k)], k);
    acc += std::pow(p, big_n - 1) * m_pow(history[0], big_n);
    history.push_back(acc);
  }
  return history.back();
}

std::vector<std::pair<double, Trajectory>> interpolation_sweep(
    const std::vector<double>& p_grid, int n) {
  const Mat xi = default_xi();
  Mat rho0 = Mat::Zero(2, 2);
  rho0(1, 1) = 1.0;
  std::vector<std::pair<double, Trajectory>> out;
  for (double p : p_grid) {
    if (p < 0.0 || p > 1.0)
      throw PreconditionError("interpolation_sweep: p grid outside [0, 1]");
    const double eta = std::asin(std::sqrt(p));
    Trajectory traj;
    for (int k = 1; k <= n; ++k) {
      const Mat rho = operator_sum_evolution(rho0, xi, p, k);
      traj.steps.push_back({k, eta, l2_distance(rho, xi), rho});
    }
    out.emplace_back(p, traj);
  }
  return out;
}

}  // namespace qhomog
