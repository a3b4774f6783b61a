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

#include "qhomog/witness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qhomog/entanglement.hpp"
#include "qhomog/parallel.hpp"

namespace qhomog {

namespace {

void check_witness_init(const ReservoirInit& init) {
  if (init.n_qubits < 3)
    throw PreconditionError("witness: reservoir must hold >= 3 ancillas");
}

// Global unitary of step 1 on 1 + n_qubits wires: U_{S,1} then the Fredkin
// with control on the just-collided ancilla.
Mat step1_unitary(int n_qubits, double eta) {
  const int total = 1 + n_qubits;
  const Mat u = embed(partial_swap(eta).op, {0, 1}, total);
  const Mat f = embed(fredkin().op, {1, 2, 3}, total);
  return f * u;
}

}  // namespace

QubitChannel step1_channel(const ReservoirInit& init, double eta) {
  check_witness_init(init);
  return QubitChannel::from_stinespring(step1_unitary(init.n_qubits, eta),
                                        build_reservoir(init));
}

QubitChannel step2_channel(const ReservoirInit& init, double eta,
                           const Mat& fiducial) {
  check_witness_init(init);
  const int total = 1 + init.n_qubits;
  const Mat fid = fiducial.size() == 0 ? Mat(0.5 * identity(2)) : fiducial;
  if (fid.rows() != 2 || fid.cols() != 2)
    throw DimensionError("step2_channel: fiducial must be single-qubit");
  const Mat u1 = step1_unitary(init.n_qubits, eta);
  const Mat joint = u1 * kron(fid, build_reservoir(init)) * u1.adjoint();
  std::vector<int> env_wires;
  for (int w = 1; w < total; ++w) env_wires.push_back(w);
  const Mat sigma_r1 =
      partial_trace(joint, FactorShape::qubits(total), env_wires);
  // Second collision targets ancilla 3; no second Fredkin is applied.
  const Mat u2 = embed(partial_swap(eta).op, {0, 3}, total);
  return QubitChannel::from_stinespring(u2, sigma_r1);
}

Mat WitnessOptions::fiducial_or_default() const {
  if (fiducial.size() == 0) {
    Mat one = Mat::Zero(2, 2);
    one(1, 1) = 1.0;
    return one;
  }
  if (fiducial.rows() != 2 || fiducial.cols() != 2)
    throw DimensionError("WitnessOptions: fiducial must be single-qubit");
  return fiducial;
}

MemoryGap memory_gap(const ReservoirInit& init, double eta,
                     const WitnessOptions& opts) {
  check_witness_init(init);

  // Assist side: the write record of one collision on a fresh ancilla,
  // |u~> = U(eta)(|1> (x) |0>); pure, so C# is its concurrence.
  Vec u_in = Vec::Zero(4);
  u_in(2) = 1.0;  // |10>
  const Vec u_tilde = partial_swap(eta).op * u_in;
  const double c_assist = concurrence_of_assistance(dm(u_tilde));

  // Formation side: run step 1 (collision + routing) and the step-2
  // collision with the fiducial system input, and take the largest
  // system-memory-ancilla concurrence observable across the second step.
  const int total = 1 + init.n_qubits;
  const FactorShape shape = FactorShape::qubits(total);
  Mat state = kron(opts.fiducial_or_default(), build_reservoir(init));
  state = apply_gate(state, partial_swap(eta), {0, 1}, total);
  state = apply_gate(state, fredkin(), {1, 2, 3}, total);
  double c_form = 0.0;
  for (int a : {2, 3})
    c_form = std::max(c_form, concurrence(partial_trace(state, shape, {0, a})));
  state = apply_gate(state, partial_swap(eta), {0, 3}, total);
  for (int a : {2, 3})
    c_form = std::max(c_form, concurrence(partial_trace(state, shape, {0, a})));

  return {c_assist, c_form, c_assist - c_form};
}

std::vector<double> uniform_eta_grid(int points) {
  if (points < 2)
    throw PreconditionError("uniform_eta_grid: need at least 2 points");
  std::vector<double> grid(static_cast<size_t>(points));
  const double hi = std::numbers::pi / 2;
  for (int i = 0; i < points; ++i)
    grid[static_cast<size_t>(i)] = hi * i / (points - 1);
  return grid;
}

GapCurve gap_curve(const ReservoirInit& init, const std::vector<double>& grid,
                   const WitnessOptions& opts, int jobs) {
  for (size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 0.0 || grid[i] > std::numbers::pi / 2 + 1e-12)
      throw PreconditionError("gap_curve: grid point outside [0, pi/2]");
    if (i > 0 && grid[i] <= grid[i - 1])
      throw PreconditionError("gap_curve: grid must be strictly increasing");
  }
  GapCurve curve;
  curve.init = init;
  curve.samples.resize(grid.size());
  parallel_for_indexed(static_cast<int>(grid.size()), jobs, [&](int i) {
    const double eta = grid[static_cast<size_t>(i)];
    const MemoryGap g = memory_gap(init, eta, opts);
    curve.samples[static_cast<size_t>(i)] = {eta, g.c_assist, g.c_form, g.gap};
  });
  curve.crossing = find_crossing(curve, opts);
  return curve;
}

std::optional<double> find_crossing(const GapCurve& curve,
                                    const std::function<double(double)>& gap_at,
                                    double tol, double sign_eps) {
  if (curve.samples.size() < 2) return std::nullopt;
  const auto is_neg = [sign_eps](double g) { return g < -sign_eps; };
  for (size_t i = 1; i < curve.samples.size(); ++i) {
    const bool neg_prev = is_neg(curve.samples[i - 1].gap);
    const bool neg_here = is_neg(curve.samples[i].gap);
    if (neg_prev == neg_here) continue;
    double lo = curve.samples[i - 1].eta;
    double hi = curve.samples[i].eta;
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      (is_neg(gap_at(mid)) == neg_prev ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }
  return std::nullopt;
}

std::optional<double> find_crossing(const GapCurve& curve,
                                    const WitnessOptions& opts) {
  return find_crossing(
      curve,
      [&](double eta) { return memory_gap(curve.init, eta, opts).gap; },
      opts.bisect_tol, opts.sign_eps);
}

}  // namespace qhomog
