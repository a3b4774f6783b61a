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

#include "qhomog/channels.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <unordered_map>
#include <utility>

#include "qhomog/states.hpp"

namespace qhomog {

namespace {

const cxd kI(0.0, 1.0);

Mat swap_matrix() {
  Mat s = Mat::Zero(4, 4);
  s(0, 0) = s(3, 3) = 1.0;
  s(1, 2) = s(2, 1) = 1.0;
  return s;
}

// Base-gate cache keyed by eta rounded to 1e-12; sweeps reuse thousands of
// identical gates. Guarded for concurrent read/insert.
const Mat& cached_partial_swap(double eta) {
  static std::mutex mu;
  static std::unordered_map<long long, Mat> cache;
  const long long key = std::llround(eta * 1e12);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) {
    const Mat u =
        std::cos(eta) * identity(4) + kI * std::sin(eta) * swap_matrix();
    it = cache.emplace(key, u).first;
  }
  return it->second;
}

}  // namespace

Gate partial_swap(double eta) {
  if (!(eta >= 0.0 && eta <= std::numbers::pi / 2 + 1e-12))
    throw PreconditionError("partial_swap: eta must lie in [0, pi/2]");
  return Gate{cached_partial_swap(eta), 2};
}

Gate swap_gate() { return Gate{swap_matrix(), 2}; }

Gate fredkin() {
  Mat f = Mat::Zero(8, 8);
  // Control |0>: identity on the targets.
  for (int i = 0; i < 4; ++i) f(i, i) = 1.0;
  // Control |1>: SWAP on the targets.
  f(4, 4) = f(7, 7) = 1.0;
  f(5, 6) = f(6, 5) = 1.0;
  return Gate{f, 3};
}

Mat embed(const Mat& gate_op, const std::vector<int>& wires, int n_qubits) {
  const int k = static_cast<int>(wires.size());
  if (k < 1 || k > n_qubits) throw DimensionError("embed: bad wire count");
  const int gdim = 1 << k;
  if (gate_op.rows() != gdim || gate_op.cols() != gdim)
    throw DimensionError("embed: gate dimension does not match wire count");
  std::vector<int> shift(static_cast<size_t>(k));
  unsigned seen = 0;
  for (int i = 0; i < k; ++i) {
    const int w = wires[static_cast<size_t>(i)];
    if (w < 0 || w >= n_qubits) throw PreconditionError("embed: wire out of range");
    if (seen & (1u << w)) throw PreconditionError("embed: duplicate wire");
    seen |= 1u << w;
    shift[static_cast<size_t>(i)] = n_qubits - 1 - w;
  }
  const int dim = 1 << n_qubits;
  Mat out = Mat::Zero(dim, dim);
  for (int row = 0; row < dim; ++row) {
    int grow = 0;
    int rest = row;
    for (int i = 0; i < k; ++i) {
      grow = (grow << 1) | ((row >> shift[static_cast<size_t>(i)]) & 1);
      rest &= ~(1 << shift[static_cast<size_t>(i)]);
    }
    for (int gcol = 0; gcol < gdim; ++gcol) {
      const cxd v = gate_op(grow, gcol);
      if (v == cxd(0.0, 0.0)) continue;
      int col = rest;
      for (int i = 0; i < k; ++i)
        if ((gcol >> (k - 1 - i)) & 1) col |= 1 << shift[static_cast<size_t>(i)];
      out(row, col) = v;
    }
  }
  return out;
}

Mat apply_gate(const Mat& state, const Gate& gate,
               const std::vector<int>& wires, int n_qubits) {
  if (static_cast<int>(wires.size()) != gate.arity)
    throw PreconditionError("apply_gate: gate arity does not match wire count");
  if (state.rows() != (1 << n_qubits) || state.cols() != state.rows())
    throw DimensionError("apply_gate: state dimension mismatch");
  const Mat u = embed(gate.op, wires, n_qubits);
  return u * state * u.adjoint();
}

QubitChannel QubitChannel::from_stinespring(const Mat& unitary,
                                            const Mat& env) {
  if (unitary.rows() != unitary.cols() || env.rows() != env.cols())
    throw DimensionError("QubitChannel: square operators required");
  if (unitary.rows() != 2 * env.rows())
    throw DimensionError(
        "QubitChannel: unitary dim must equal 2 x environment dim");
  QubitChannel ch;
  ch.unitary_ = unitary;
  ch.env_ = env;
  return ch;
}

QubitChannel QubitChannel::from_function(std::function<Mat(const Mat&)> fn) {
  QubitChannel ch;
  ch.fn_ = std::move(fn);
  return ch;
}

Mat QubitChannel::apply(const Mat& rho) const {
  if (rho.rows() != 2 || rho.cols() != 2)
    throw DimensionError("QubitChannel: single-qubit input required");
  if (!has_stinespring()) return fn_(rho);
  const Mat joint = unitary_ * kron(rho, env_) * unitary_.adjoint();
  int n = 0;
  while ((1 << n) < joint.rows()) ++n;
  return partial_trace(joint, FactorShape::qubits(n), {0});
}

Mat collision_map(const Mat& rho, const Mat& xi, double eta) {
  const double c = std::cos(eta), s = std::sin(eta);
  return c * c * rho + s * s * xi + kI * c * s * (xi * rho - rho * xi);
}

QubitChannel collision_channel(const Mat& xi, double eta) {
  return QubitChannel::from_stinespring(partial_swap(eta).op, xi);
}

namespace {

Mat choi_unchecked(const QubitChannel& channel) {
  Mat out = Mat::Zero(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Mat eij = Mat::Zero(2, 2);
      eij(i, j) = 1.0;
      Mat ref = Mat::Zero(2, 2);
      ref(i, j) = 0.5;
      out += kron(channel.apply(eij), ref);
    }
  return out;
}

}  // namespace

Mat choi(const QubitChannel& channel) {
  const Mat c = choi_unchecked(channel);
  const Mat marg = partial_trace(c, FactorShape::qubits(2), {1});
  if ((marg - 0.5 * identity(2)).cwiseAbs().maxCoeff() > kReconTol)
    throw PreconditionError("choi: channel is not trace-preserving to 1e-9");
  return c;
}

CptpReport is_cptp_choi(const Mat& choi_state) {
  if (choi_state.rows() != 4 || choi_state.cols() != 4)
    throw DimensionError("is_cptp_choi: two-qubit Choi state required");
  CptpReport rep;
  const Mat sym = 0.5 * (choi_state + choi_state.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> solver(sym);
  rep.min_choi_eigenvalue = solver.eigenvalues().minCoeff();
  const Mat marg = partial_trace(choi_state, FactorShape::qubits(2), {1});
  rep.tp_deviation = (marg - 0.5 * identity(2)).cwiseAbs().maxCoeff();
  rep.ok = rep.min_choi_eigenvalue >= -kReconTol && rep.tp_deviation <= kReconTol;
  return rep;
}

CptpReport is_cptp(const QubitChannel& channel) {
  return is_cptp_choi(choi_unchecked(channel));
}

}  // namespace qhomog
