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

#ifndef QHOMOG_ENTANGLEMENT_HPP
#define QHOMOG_ENTANGLEMENT_HPP

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "qhomog/tensor.hpp"

namespace qhomog {

// Descending square roots of the eigenvalues of rho * spin_flip(rho);
// tiny negative eigenvalues are clamped to 0.
std::array<double, 4> wootters_lambdas(const Mat& rho);

// max(0, l1 - l2 - l3 - l4) of the Wootters spectrum.
double concurrence(const Mat& rho);

// Sum of the Wootters spectrum, equal to tr sqrt(sqrt(rho) rho~ sqrt(rho));
// always >= concurrence.
double concurrence_of_assistance(const Mat& rho);

// h((1 + sqrt(1 - C^2)) / 2) with h the binary entropy.
double entanglement_of_formation(const Mat& rho);

// Concurrence of a pure two-qubit state: 2|ad - bc|.
double pure_concurrence(const Vec& psi);

struct Decomposition {
  // (p_k, |psi_k>) with sum p_k = 1; sum p_k |psi_k><psi_k| reconstructs
  // the searched state.
  std::vector<std::pair<double, Vec>> members;

  Mat reconstruct() const;
};

// Brute-force maximization of sum p_k C(psi_k) over random isometry-generated
// decompositions with local hill-climbing. Validation oracle for the closed
// form; never exceeds it. Requires ensemble_size >= rank(rho).
std::pair<double, Decomposition> eoa_search(const Mat& rho, int ensemble_size,
                                            int restarts, std::uint64_t seed);

// Same search minimizing instead of maximizing (convex-roof upper bound on
// the concurrence); test oracle only.
std::pair<double, Decomposition> roof_min_search(const Mat& rho,
                                                 int ensemble_size,
                                                 int restarts,
                                                 std::uint64_t seed);

}  // namespace qhomog

#endif  // QHOMOG_ENTANGLEMENT_HPP
