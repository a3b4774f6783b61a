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

#ifndef QHOMOG_WITNESS_HPP
#define QHOMOG_WITNESS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "qhomog/channels.hpp"
#include "qhomog/states.hpp"

namespace qhomog {

// Reduced map of the first composite step:
//   rho -> tr_env[(C_{3,2} o U_{S,1}) (rho (x) xi_R)]
QubitChannel step1_channel(const ReservoirInit& init, double eta);

// Reduced map of the second step: rho -> tr_env[U_{S,3} (rho (x) sigma_R1)]
// where sigma_R1 is the reservoir marginal after step 1 ran on the fiducial
// system input (default I/2); no second Fredkin is applied.
QubitChannel step2_channel(const ReservoirInit& init, double eta,
                           const Mat& fiducial = Mat());

struct WitnessOptions {
  // System state prepared when probing the delivered entanglement. The
  // maximally mixed fiducial cannot produce the published crossing (its
  // step-1 Choi has unit concurrence of assistance for every Bell-type
  // reservoir), so the default is the encoded-information state |1><1|;
  // empty means that default.
  Mat fiducial;
  double bisect_tol = 1e-4;
  double sign_eps = 1e-9;

  Mat fiducial_or_default() const;
};

struct MemoryGap {
  double c_assist = 0.0;  // C#(U~): assisted entanglement a collision can write
  double c_form = 0.0;    // C(C~): entanglement the memory must deliver
  double gap = 0.0;       // c_assist - c_form; negative flags quantum memory
};

// The two sides of the witness:
//  - c_assist: concurrence of assistance of |u~> = U(eta)(|1>_S (x) |0>_a),
//    the step-1 write record of one partial-SWAP on a fresh ancilla.
//  - c_form: the largest two-qubit concurrence between the system and the
//    memory ancillas a2, a3 across the second timestep (after the
//    intra-reservoir routing and after the second collision), with the
//    fiducial system input on the actual reservoir init. Only
//    system-involving pairs count: the witness reads the memory off the
//    local dynamics of S alone.
MemoryGap memory_gap(const ReservoirInit& init, double eta,
                     const WitnessOptions& opts = {});

struct GapSample {
  double eta = 0.0;
  double c_assist = 0.0;
  double c_form = 0.0;
  double gap = 0.0;
};

struct GapCurve {
  ReservoirInit init;
  std::vector<GapSample> samples;
  std::optional<double> crossing;
};

// 60 uniform points on [0, pi/2] by default.
std::vector<double> uniform_eta_grid(int points = 60);

// Per-eta memory_gap samples plus crossing detection; grid points are
// independent and evaluated concurrently when jobs > 1, merged by index.
GapCurve gap_curve(const ReservoirInit& init, const std::vector<double>& grid,
                   const WitnessOptions& opts = {}, int jobs = 1);

// Smallest eta where the sampled gap changes sign, refined by bisection of
// `gap_at` to within tol; absent when no sign change occurs.
std::optional<double> find_crossing(const GapCurve& curve,
                                    const std::function<double(double)>& gap_at,
                                    double tol = 1e-4, double sign_eps = 1e-9);
std::optional<double> find_crossing(const GapCurve& curve,
                                    const WitnessOptions& opts = {});

}  // namespace qhomog

#endif  // QHOMOG_WITNESS_HPP
