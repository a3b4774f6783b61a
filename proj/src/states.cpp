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

#include "qhomog/states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qhomog {

namespace {

const cxd kI(0.0, 1.0);

Mat default_xi() {
  Mat xi = Mat::Zero(2, 2);
  xi(0, 0) = 1.0;
  return xi;
}

}  // namespace

Vec basis_ket(int dim, int index) {
  if (dim < 1 || index < 0 || index >= dim)
    throw DimensionError("basis_ket: index out of range");
  Vec v = Vec::Zero(dim);
  v(index) = 1.0;
  return v;
}

Mat dm(const Vec& psi) { return psi * psi.adjoint(); }

Mat pauli_x() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Mat pauli_y() {
  Mat m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}

Mat pauli_z() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Vec bell_phi_plus() {
  Vec v = Vec::Zero(4);
  v(0) = v(3) = 1.0 / std::numbers::sqrt2;
  return v;
}

Vec ghz_ket(int n) {
  if (n < 2) throw PreconditionError("ghz_ket: need at least 2 qubits");
  const int d = 1 << n;
  Vec v = Vec::Zero(d);
  v(0) = v(d - 1) = 1.0 / std::numbers::sqrt2;
  return v;
}

ReservoirInit ReservoirInit::product(int n, const Mat& xi) {
  ReservoirInit r;
  r.kind = ReservoirKind::kProduct;
  r.n_qubits = n;
  r.xi = xi.size() == 0 ? default_xi() : xi;
  return r;
}

ReservoirInit ReservoirInit::bell(int n) {
  ReservoirInit r;
  r.kind = ReservoirKind::kBell;
  r.n_qubits = n;
  return r;
}

ReservoirInit ReservoirInit::ghz(int n) {
  ReservoirInit r;
  r.kind = ReservoirKind::kGHZ;
  r.n_qubits = n;
  return r;
}

ReservoirInit ReservoirInit::asym_ghz() {
  ReservoirInit r;
  r.kind = ReservoirKind::kAsymGHZ;
  r.n_qubits = 3;
  return r;
}

ReservoirInit ReservoirInit::perturbed_ghz(double alpha) {
  ReservoirInit r;
  r.kind = ReservoirKind::kPerturbedGHZ;
  r.n_qubits = 3;
  r.alpha = alpha;
  return r;
}

ReservoirInit ReservoirInit::xerror_ghz(int site, int n) {
  ReservoirInit r;
  r.kind = ReservoirKind::kXErrorGHZ;
  r.n_qubits = n;
  r.site = site;
  return r;
}

Mat ReservoirInit::xi_marginal() const {
  const Mat full = build_reservoir(*this);
  return partial_trace(full, FactorShape::qubits(n_qubits), {0});
}

std::string ReservoirInit::label() const {
  std::ostringstream os;
  switch (kind) {
    case ReservoirKind::kProduct:
      os << "product";
      break;
    case ReservoirKind::kBell:
      os << "bell";
      break;
    case ReservoirKind::kGHZ:
      os << "ghz";
      break;
    case ReservoirKind::kAsymGHZ:
      os << "asym_ghz";
      break;
    case ReservoirKind::kPerturbedGHZ:
      os << "perturbed_ghz_alpha" << alpha;
      break;
    case ReservoirKind::kXErrorGHZ:
      os << "xerror_ghz_site" << site;
      break;
  }
  return os.str();
}

Mat build_reservoir(const ReservoirInit& init) {
  switch (init.kind) {
    case ReservoirKind::kProduct: {
      if (init.n_qubits < 1)
        throw PreconditionError("build_reservoir: product needs >= 1 qubit");
      const Mat xi = init.xi.size() == 0 ? default_xi() : init.xi;
      if (xi.rows() != 2 || xi.cols() != 2)
        throw DimensionError("build_reservoir: xi must be single-qubit");
      Mat out = xi;
      for (int k = 1; k < init.n_qubits; ++k) out = kron(out, xi);
      return out;
    }
    case ReservoirKind::kBell: {
      if (init.n_qubits < 2)
        throw PreconditionError("build_reservoir: Bell needs >= 2 qubits");
      // Entangled pair on ancillas 1,2; remaining ancillas |0>.
      Mat out = dm(bell_phi_plus());
      for (int k = 2; k < init.n_qubits; ++k) out = kron(out, default_xi());
      return out;
    }
    case ReservoirKind::kGHZ: {
      if (init.n_qubits < 3)
        throw PreconditionError("build_reservoir: GHZ needs >= 3 qubits");
      return dm(ghz_ket(init.n_qubits));
    }
    case ReservoirKind::kAsymGHZ: {
      if (init.n_qubits != 3)
        throw PreconditionError("build_reservoir: AsymGHZ is a 3-qubit state");
      Vec v = Vec::Zero(8);
      v(0b000) = 1.0 / std::numbers::sqrt2;
      v(0b101) = 1.0 / std::numbers::sqrt2;
      return dm(v);
    }
    case ReservoirKind::kPerturbedGHZ: {
      if (init.n_qubits != 3)
        throw PreconditionError(
            "build_reservoir: PerturbedGHZ is a 3-qubit state");
      if (init.alpha < 0.0 || init.alpha > 1.0)
        throw PreconditionError("build_reservoir: alpha must lie in [0, 1]");
      Vec v = std::sqrt(init.alpha) * basis_ket(8, 0b100) +
              std::sqrt(1.0 - init.alpha) * ghz_ket(3);
      // |100> is orthogonal to GHZ_3, so the norm is already 1; renormalize
      // anyway for safety.
      v /= v.norm();
      return dm(v);
    }
    case ReservoirKind::kXErrorGHZ: {
      if (init.n_qubits < 3)
        throw PreconditionError("build_reservoir: XErrorGHZ needs >= 3 qubits");
      if (init.site < 1 || init.site > init.n_qubits)
        throw PreconditionError("build_reservoir: X-error site out of range");
      Mat x = Mat::Identity(1, 1);
      for (int k = 1; k <= init.n_qubits; ++k)
        x = kron(x, k == init.site ? pauli_x() : identity(2));
      const Vec v = x * ghz_ket(init.n_qubits);
      return dm(v);
    }
  }
  throw PreconditionError("build_reservoir: unknown kind");
}

Mat spin_flip(const Mat& rho) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw DimensionError("spin_flip: two-qubit state required");
  const Mat yy = kron(pauli_y(), pauli_y());
  return yy * rho.conjugate() * yy;
}

ValidationReport validate(const Mat& rho) {
  ValidationReport rep;
  if (rho.rows() != rho.cols() || rho.rows() == 0) {
    rep.herm_dev = rep.trace_dev = 1.0;
    rep.min_eigenvalue = -1.0;
    rep.pass = false;
    return rep;
  }
  rep.herm_dev = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  rep.trace_dev = std::abs(rho.trace() - cxd(1.0, 0.0));
  const Mat sym = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> solver(sym);
  rep.min_eigenvalue = solver.eigenvalues().minCoeff();
  rep.pass = rep.herm_dev <= kHermTol && rep.trace_dev <= kHermTol &&
             rep.min_eigenvalue >= -kPsdTol;
  return rep;
}

}  // namespace qhomog
