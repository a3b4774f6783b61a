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

#ifndef QHOMOG_DYNAMICS_HPP
#define QHOMOG_DYNAMICS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "qhomog/states.hpp"
#include "qhomog/tensor.hpp"

namespace qhomog {

// Per-step coupling strengths; sampling is counter-based in the step index,
// so draws are independent of evaluation order and shared across machines.
struct EtaSchedule {
  enum class Kind { kFixed, kUniformRandom, kGaussianRandom };

  Kind kind = Kind::kFixed;
  double eta = 0.0;     // kFixed
  double mean = 0.0;    // kGaussianRandom
  double stddev = 0.0;  // kGaussianRandom; default 0.1 * pi/2
  std::uint64_t seed = 0;

  static EtaSchedule fixed(double eta);
  static EtaSchedule uniform(std::uint64_t seed);
  static EtaSchedule gaussian(double mean, double stddev, std::uint64_t seed);

  // eta_k in [0, pi/2] for step k (0-based).
  double sample(int step) const;
};

struct TrajectoryStep {
  int step = 0;       // 1-based collision count
  double eta = 0.0;   // coupling used at this step
  double dist = 0.0;  // l2_distance(rho_s, target xi)
  Mat rho_s;          // reduced system state after the step
};

struct Trajectory {
  std::vector<TrajectoryStep> steps;
};

// Collision plan of the composite machine: the system couples to odd
// ancillas only; each Fredkin control is the most recently collided ancilla.
struct CollisionPlan {
  std::vector<int> system_targets;               // 1-based: 1, 3, 5, ...
  std::vector<std::array<int, 3>> fredkin_triples;  // (control, a, b) per step

  // n collisions: targets 2k-1, triples (2k-1, 2k, 2k+1) for k < n.
  static CollisionPlan odd_targets(int n_steps);
};

// Markovian homogenizer: n partial-SWAP collisions with fresh ancillas in
// state xi, each traced out after its collision.
Trajectory homogenize(const Mat& rho_s, const Mat& xi, int n,
                      const EtaSchedule& schedule);

// Composite non-Markovian evolution: per step, the system-ancilla
// partial-SWAP followed by the intra-reservoir Fredkin (control = the
// just-collided ancilla, targets = the next two); the final step is
// collision-only. Entangled reservoirs are simulated densely and must
// supply all 2n-1 ancillas; product reservoirs extend with fresh xi
// ancillas lazily and trace ancillas no future gate touches, so any n is
// admissible.
Trajectory evolve_composite(const Mat& rho_s, const ReservoirInit& init,
                            int n, const EtaSchedule& schedule,
                            const CollisionPlan& plan);

// Appendix operator-sum recursion with memory weight p and the single
// collision map M at eta = asin(sqrt(p)):
//   rho^(N) = (1-p) sum_{k=1}^{N-1} p^(k-1) M^k[rho^(N-k)] + p^(N-1) M^N[rho^(0)]
Mat operator_sum_evolution(const Mat& rho_s, double p, int n);
Mat operator_sum_evolution(const Mat& rho_s, const Mat& xi, double p, int n);

// One operator-sum trajectory per p; distances measured against xi.
std::vector<std::pair<double, Trajectory>> interpolation_sweep(
    const std::vector<double>& p_grid, int n);

}  // namespace qhomog

#endif  // QHOMOG_DYNAMICS_HPP
