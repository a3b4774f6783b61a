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

#ifndef QHOMOG_STATES_HPP
#define QHOMOG_STATES_HPP

#include <string>

#include "qhomog/tensor.hpp"

namespace qhomog {

Vec basis_ket(int dim, int index);
Mat dm(const Vec& psi);

Mat pauli_x();
Mat pauli_y();
Mat pauli_z();

// (|00> + |11>) / sqrt(2)
Vec bell_phi_plus();
// (|0...0> + |1...1>) / sqrt(2) on n qubits
Vec ghz_ket(int n);

enum class ReservoirKind {
  kProduct,       // xi^(x)(n): every ancilla in the same single-qubit state
  kBell,          // Bell pair on ancillas 1,2 (first collided + first Fredkin
                  // target region), remaining ancillas |0>
  kGHZ,           // (|0...0> + |1...1>)/sqrt(2)
  kAsymGHZ,       // (|101> + |000>)/sqrt(2)
  kPerturbedGHZ,  // normalized sqrt(alpha)|100> + sqrt(1-alpha) GHZ_3
  kXErrorGHZ      // X_site GHZ
};

struct ReservoirInit {
  ReservoirKind kind = ReservoirKind::kProduct;
  int n_qubits = 3;
  double alpha = 0.0;  // PerturbedGHZ only, in [0, 1]
  int site = 1;        // XErrorGHZ only, 1-based ancilla index
  Mat xi;              // Product only; defaults to |0><0| when empty

  static ReservoirInit product(int n, const Mat& xi = Mat());
  static ReservoirInit bell(int n = 3);
  static ReservoirInit ghz(int n = 3);
  static ReservoirInit asym_ghz();
  static ReservoirInit perturbed_ghz(double alpha);
  static ReservoirInit xerror_ghz(int site = 1, int n = 3);

  // Single-qubit marginal of the first ancilla; homogenization target.
  Mat xi_marginal() const;
  std::string label() const;
};

Mat build_reservoir(const ReservoirInit& init);

// Wootters companion: (sigma_y (x) sigma_y) rho^* (sigma_y (x) sigma_y).
Mat spin_flip(const Mat& rho);

struct ValidationReport {
  double herm_dev = 0.0;
  double trace_dev = 0.0;
  double min_eigenvalue = 0.0;
  bool pass = false;
};

// Report-only density-matrix diagnostics: Hermiticity to 1e-10, trace to
// 1e-10, eigenvalues >= -1e-10.
ValidationReport validate(const Mat& rho);

}  // namespace qhomog

#endif  // QHOMOG_STATES_HPP
