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

#ifndef QHOMOG_TENSOR_HPP
#define QHOMOG_TENSOR_HPP

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qhomog/errors.hpp"

namespace qhomog {

using cxd = std::complex<double>;
// Row-major storage; qubit ordering is big-endian: tensor factor 0 is the
// most significant bit of the computational-basis index.
using Mat =
    Eigen::Matrix<cxd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vec = Eigen::Matrix<cxd, Eigen::Dynamic, 1>;

// Tolerance hierarchy: input checks at 1e-10, reconstruction at 1e-9..1e-8.
inline constexpr double kHermTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kReconTol = 1e-9;

// Ordered subsystem dimensions; product must equal the operator dimension.
struct FactorShape {
  std::vector<int> factors;

  static FactorShape qubits(int n);
  int dim() const;
  int n_factors() const { return static_cast<int>(factors.size()); }
};

Mat identity(int dim);
Mat dag(const Mat& m);
bool is_hermitian(const Mat& m, double tol = kHermTol);

// Kronecker product; left factor is the slower-varying index.
Mat kron(const Mat& a, const Mat& b);
Vec kron(const Vec& a, const Vec& b);

// Trace out every factor not in `keep`; kept factors retain their relative
// order. Big-endian indexing throughout.
Mat partial_trace(const Mat& rho, const FactorShape& shape,
                  const std::vector<int>& keep);

// Hermitian eigendecomposition, eigenvalues descending, eigenvectors as the
// matching columns. Throws PreconditionError if max|h - h^dag| > 1e-10.
std::pair<Eigen::VectorXd, Mat> herm_eig(const Mat& h);

// Principal square root of a PSD matrix. Eigenvalues in [-1e-10, 0) are
// clamped to 0; anything below -1e-10 throws PreconditionError.
Mat sqrt_psd(const Mat& m);

// Frobenius norm of (a - b).
double l2_distance(const Mat& a, const Mat& b);

}  // namespace qhomog

#endif  // QHOMOG_TENSOR_HPP
