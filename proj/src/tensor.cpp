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

#include "qhomog/tensor.hpp"

#include <cmath>
#include <string>

namespace qhomog {

FactorShape FactorShape::qubits(int n) {
  if (n < 1) throw DimensionError("FactorShape: need at least one qubit");
  FactorShape s;
  s.factors.assign(static_cast<size_t>(n), 2);
  return s;
}

int FactorShape::dim() const {
  int d = 1;
  for (int f : factors) {
    if (f < 1) throw DimensionError("FactorShape: factor dims must be >= 1");
    d *= f;
  }
  return d;
}

Mat identity(int dim) { return Mat::Identity(dim, dim); }

Mat dag(const Mat& m) { return m.adjoint(); }

bool is_hermitian(const Mat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Mat kron(const Mat& a, const Mat& b) {
  const Eigen::Index ar = a.rows(), ac = a.cols();
  const Eigen::Index br = b.rows(), bc = b.cols();
  Mat out(ar * br, ac * bc);
  for (Eigen::Index i = 0; i < ar; ++i)
    for (Eigen::Index j = 0; j < ac; ++j)
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
  return out;
}

Vec kron(const Vec& a, const Vec& b) {
  const Eigen::Index an = a.size(), bn = b.size();
  Vec out(an * bn);
  for (Eigen::Index i = 0; i < an; ++i) out.segment(i * bn, bn) = a(i) * b;
  return out;
}

Mat partial_trace(const Mat& rho, const FactorShape& shape,
                  const std::vector<int>& keep) {
  const int n = shape.n_factors();
  if (shape.dim() != rho.rows() || rho.rows() != rho.cols())
    throw DimensionError("partial_trace: shape inconsistent with operator");
  if (keep.empty())
    throw PreconditionError("partial_trace: keep set must be nonempty");
  std::vector<bool> kept(static_cast<size_t>(n), false);
  for (int k : keep) {
    if (k < 0 || k >= n)
      throw PreconditionError("partial_trace: keep index out of range");
    if (kept[static_cast<size_t>(k)])
      throw PreconditionError("partial_trace: duplicate keep index");
    kept[static_cast<size_t>(k)] = true;
  }
  // Kept factors retain their original (ascending big-endian) order.
  std::vector<int> kept_idx, traced_idx;
  for (int f = 0; f < n; ++f) (kept[static_cast<size_t>(f)] ? kept_idx : traced_idx).push_back(f);

  // Strides of each factor in the flat basis index (big-endian).
  std::vector<long> stride(static_cast<size_t>(n), 1);
  for (int f = n - 2; f >= 0; --f)
    stride[static_cast<size_t>(f)] =
        stride[static_cast<size_t>(f + 1)] * shape.factors[static_cast<size_t>(f + 1)];

  long dk = 1, dt = 1;
  for (int f : kept_idx) dk *= shape.factors[static_cast<size_t>(f)];
  for (int f : traced_idx) dt *= shape.factors[static_cast<size_t>(f)];

  // Decompose a compound index over an ordered factor list into a flat offset.
  auto offset = [&](const std::vector<int>& fs, long idx) {
    long off = 0;
    for (size_t p = fs.size(); p-- > 0;) {
      const int f = fs[p];
      const long d = shape.factors[static_cast<size_t>(f)];
      off += (idx % d) * stride[static_cast<size_t>(f)];
      idx /= d;
    }
    return off;
  };

  Mat out = Mat::Zero(dk, dk);
  for (long i = 0; i < dk; ++i) {
    const long ri = offset(kept_idx, i);
    for (long j = 0; j < dk; ++j) {
      const long cj = offset(kept_idx, j);
      cxd acc = 0.0;
      for (long t = 0; t < dt; ++t) {
        const long rt = offset(traced_idx, t);
        acc += rho(ri + rt, cj + rt);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

std::pair<Eigen::VectorXd, Mat> herm_eig(const Mat& h) {
  if (h.rows() != h.cols()) throw DimensionError("herm_eig: square input required");
  if (!is_hermitian(h, kHermTol))
    throw PreconditionError("herm_eig: input not Hermitian within 1e-10");
  Eigen::SelfAdjointEigenSolver<Mat> solver(h);
  if (solver.info() != Eigen::Success)
    throw NumericalError("herm_eig: eigensolver failed to converge");
  const Eigen::Index d = h.rows();
  Eigen::VectorXd vals(d);
  Mat vecs(d, d);
  // Eigen returns ascending order; flip to descending.
  for (Eigen::Index i = 0; i < d; ++i) {
    vals(i) = solver.eigenvalues()(d - 1 - i);
    vecs.col(i) = solver.eigenvectors().col(d - 1 - i);
  }
  return {vals, vecs};
}

Mat sqrt_psd(const Mat& m) {
  auto [vals, vecs] = herm_eig(m);
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals(i) < -kPsdTol)
      throw PreconditionError("sqrt_psd: eigenvalue " + std::to_string(vals(i)) +
                              " below -1e-10, input not PSD");
    if (vals(i) < 0.0) vals(i) = 0.0;
  }
  Mat root = Mat::Zero(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    root += std::sqrt(vals(i)) * (vecs.col(i) * vecs.col(i).adjoint());
  return root;
}

double l2_distance(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("l2_distance: dimension mismatch");
  return (a - b).norm();
}

}  // namespace qhomog
