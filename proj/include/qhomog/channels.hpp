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

#ifndef QHOMOG_CHANNELS_HPP
#define QHOMOG_CHANNELS_HPP

#include <functional>
#include <vector>

#include "qhomog/tensor.hpp"

namespace qhomog {

struct Gate {
  Mat op;
  int arity = 0;
};

// cos(eta) I_4 + i sin(eta) SWAP; eta in [0, pi/2]. Cached by eta rounded
// to 1e-12.
Gate partial_swap(double eta);
Gate swap_gate();
// |0><0|_C (x) I_4 + |1><1|_C (x) SWAP; control is factor 0.
Gate fredkin();

// Unitary embedded on the given wires of an n-qubit register; wires[0]
// carries the gate's factor 0 (its most significant bit).
Mat embed(const Mat& gate_op, const std::vector<int>& wires, int n_qubits);

// U rho U^dag with U embedded on the given wires.
Mat apply_gate(const Mat& state, const Gate& gate,
               const std::vector<int>& wires, int n_qubits);

// Single-qubit channel. Channels produced by the simulator carry their
// Stinespring realization (global unitary, environment state, traced
// factors); test-only maps may be function-backed.
class QubitChannel {
 public:
  static QubitChannel from_stinespring(const Mat& unitary, const Mat& env);
  static QubitChannel from_function(std::function<Mat(const Mat&)> fn);

  Mat apply(const Mat& rho) const;

  bool has_stinespring() const { return unitary_.size() > 0; }
  const Mat& unitary() const { return unitary_; }
  const Mat& env() const { return env_; }

 private:
  QubitChannel() = default;

  Mat unitary_;  // dim 2^n; system is wire 0
  Mat env_;      // dim 2^(n-1); wires 1..n-1
  std::function<Mat(const Mat&)> fn_;
};

// Exact single-collision reduced map of the partial-SWAP:
//   rho -> cos^2(eta) rho + sin^2(eta) xi + i cos(eta) sin(eta) (xi rho - rho xi)
Mat collision_map(const Mat& rho, const Mat& xi, double eta);
// The same map as a Stinespring-backed channel (dual route for tests).
QubitChannel collision_channel(const Mat& xi, double eta);

// (Lambda (x) id)|Phi+><Phi+|; factor 0 is the channel output. Throws
// PreconditionError if the channel is not trace-preserving to 1e-9.
Mat choi(const QubitChannel& channel);

struct CptpReport {
  bool ok = false;
  double min_choi_eigenvalue = 0.0;
  double tp_deviation = 0.0;  // max entry of |tr_out(choi) - I/2|
};

// Choi PSD to -1e-9 and tr_out(choi) = I/2 to 1e-9.
CptpReport is_cptp(const QubitChannel& channel);
CptpReport is_cptp_choi(const Mat& choi_state);

}  // namespace qhomog

#endif  // QHOMOG_CHANNELS_HPP
