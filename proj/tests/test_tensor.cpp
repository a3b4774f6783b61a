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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "qhomog/errors.hpp"
#include "qhomog/states.hpp"
#include "qhomog/tensor.hpp"
#include "test_util.hpp"

using namespace qhomog;
using namespace qhomog::testutil;

namespace {

// Faddeev-LeVerrier recursion; p(x) = x^n + c[0] x^{n-1} + ... + c[n-1].
std::vector<cxd> charpoly_coeffs(const Mat& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<cxd> c(n);
  Mat m = Mat::Zero(n, n);
  cxd ck(1.0);
  for (int k = 1; k <= n; ++k) {
    m = a * (m + ck * Mat::Identity(n, n));
    ck = -m.trace() / static_cast<double>(k);
    c[k - 1] = ck;
  }
  return c;
}

// Durand-Kerner simultaneous root iteration on a monic polynomial.
std::vector<cxd> poly_roots(const std::vector<cxd>& c) {
  const int n = static_cast<int>(c.size());
  const auto eval = [&](cxd x) {
    cxd p(1.0);
    for (int i = 0; i < n; ++i) p = p * x + c[i];
    return p;
  };
  std::vector<cxd> r(n);
  for (int i = 0; i < n; ++i) r[i] = std::pow(cxd(0.4, 0.9), i + 1);
  for (int it = 0; it < 1000; ++it) {
    double moved = 0.0;
    for (int i = 0; i < n; ++i) {
      cxd denom(1.0);
      for (int j = 0; j < n; ++j)
        if (j != i) denom *= r[i] - r[j];
      const cxd delta = eval(r[i]) / denom;
      r[i] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-14) break;
  }
  return r;
}

}  // namespace

TEST_CASE("kron identity and projector cases") {
  const Mat i2 = identity(2);
  CHECK(max_abs_diff(kron(i2, i2), identity(4)) == doctest::Approx(0.0));

  Mat p0 = Mat::Zero(2, 2), p1 = Mat::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  Mat expect = Mat::Zero(4, 4);
  expect(1, 1) = 1.0;
  CHECK(max_abs_diff(kron(p0, p1), expect) == doctest::Approx(0.0));
}

TEST_CASE("kron matches quadruple-loop oracle on random pairs") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat a = random_matrix(rng, 2);
    const Mat b = random_matrix(rng, 2);
    const Mat k = kron(a, b);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int p = 0; p < 2; ++p)
          for (int q = 0; q < 2; ++q)
            CHECK(std::abs(k(2 * i + p, 2 * j + q) - a(i, j) * b(p, q)) <
                  1e-14);
  }
}

TEST_CASE("kron is associative on random triples") {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const Mat a = random_matrix(rng, 2);
    const Mat b = random_matrix(rng, 2);
    const Mat c = random_matrix(rng, 2);
    CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-12);
  }
}

TEST_CASE("partial_trace of a Bell pair gives the maximally mixed marginal") {
  const Mat rho = dm(bell_phi_plus());
  const Mat marg = partial_trace(rho, FactorShape::qubits(2), {0});
  CHECK(max_abs_diff(marg, Mat(0.5 * identity(2))) < 1e-14);
}

TEST_CASE("partial_trace of a product state recovers the kept factor") {
  SplitMix64 rng(13);
  const Mat rho = random_density(rng, 2);
  const Mat sigma = random_matrix(rng, 2);
  const Mat joint = kron(rho, sigma);
  const Mat kept = partial_trace(joint, FactorShape::qubits(2), {0});
  CHECK(max_abs_diff(kept, Mat(rho * sigma.trace())) < 1e-12);
}

TEST_CASE("partial_trace keep {0,2} matches explicit index-summation oracle") {
  SplitMix64 rng(14);
  const Mat rho = random_density(rng, 8);
  const Mat got = partial_trace(rho, FactorShape::qubits(3), {0, 2});

  // Big-endian index (a,b,c) -> 4a + 2b + c; sum over the middle factor.
  Mat oracle = Mat::Zero(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c)
      for (int ap = 0; ap < 2; ++ap)
        for (int cp = 0; cp < 2; ++cp)
          for (int b = 0; b < 2; ++b)
            oracle(2 * a + c, 2 * ap + cp) +=
                rho(4 * a + 2 * b + c, 4 * ap + 2 * b + cp);
  CHECK(max_abs_diff(got, oracle) < 1e-12);
  CHECK(std::abs(got.trace() - rho.trace()) < 1e-12);
}

TEST_CASE("partial_trace over all factors equals the scalar trace") {
  SplitMix64 rng(15);
  const Mat rho = random_density(rng, 8);
  const Mat all = partial_trace(rho, FactorShape::qubits(3), {0, 1, 2});
  CHECK(max_abs_diff(all, rho) < 1e-14);
  const Mat none_kept = partial_trace(rho, FactorShape::qubits(3), {1});
  CHECK(std::abs(none_kept.trace() - rho.trace()) < 1e-12);
}

TEST_CASE("partial_trace rejects inconsistent shapes and bad keep sets") {
  const Mat rho = identity(4);
  CHECK_THROWS_AS(partial_trace(rho, FactorShape::qubits(3), {0}),
                  DimensionError);
  CHECK_THROWS_AS(partial_trace(rho, FactorShape::qubits(2), {}),
                  PreconditionError);
  CHECK_THROWS_AS(partial_trace(rho, FactorShape::qubits(2), {0, 0}),
                  PreconditionError);
  CHECK_THROWS_AS(partial_trace(rho, FactorShape::qubits(2), {2}),
                  PreconditionError);
}

TEST_CASE("herm_eig on Pauli-Z and the identity") {
  const auto [wz, vz] = herm_eig(pauli_z());
  CHECK(wz(0) == doctest::Approx(1.0));
  CHECK(wz(1) == doctest::Approx(-1.0));
  CHECK(max_abs_diff(Mat(vz * wz.cast<cxd>().asDiagonal() * dag(vz)),
                     pauli_z()) < 1e-12);

  const auto [wi, vi] = herm_eig(identity(4));
  for (int i = 0; i < 4; ++i) CHECK(wi(i) == doctest::Approx(1.0));
  (void)vi;
}

TEST_CASE("herm_eig matches the characteristic-polynomial root oracle") {
  SplitMix64 rng(16);
  for (int trial = 0; trial < 10; ++trial) {
    const Mat h = random_hermitian(rng, 4);
    const auto [w, v] = herm_eig(h);

    const Mat recon = v * w.cast<cxd>().asDiagonal() * dag(v);
    CHECK(max_abs_diff(recon, h) < 1e-9);
    CHECK(std::abs(w.sum() - h.trace().real()) < 1e-10);

    std::vector<double> roots;
    for (const cxd r : poly_roots(charpoly_coeffs(h)))
      roots.push_back(r.real());
    std::sort(roots.begin(), roots.end(), std::greater<double>());
    for (int i = 0; i < 4; ++i) CHECK(std::abs(w(i) - roots[i]) < 1e-7);
  }
}

TEST_CASE("herm_eig rejects non-Hermitian input") {
  Mat m = Mat::Zero(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(herm_eig(m), PreconditionError);
}

TEST_CASE("sqrt_psd closed-form and multiply-back cases") {
  CHECK(max_abs_diff(sqrt_psd(identity(2)), identity(2)) < 1e-12);

  Mat d = Mat::Zero(2, 2);
  d(0, 0) = 4.0;
  d(1, 1) = 1.0;
  Mat expect = Mat::Zero(2, 2);
  expect(0, 0) = 2.0;
  expect(1, 1) = 1.0;
  CHECK(max_abs_diff(sqrt_psd(d), expect) < 1e-12);

  SplitMix64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const Mat a = random_matrix(rng, 4);
    const Mat psd = a * dag(a);
    const Mat root = sqrt_psd(psd);
    CHECK(max_abs_diff(Mat(root * root), psd) < 1e-8);
    CHECK(is_hermitian(root, 1e-9));
  }
}

TEST_CASE("sqrt_psd rejects matrices with genuinely negative eigenvalues") {
  CHECK_THROWS_AS(sqrt_psd(pauli_z()), PreconditionError);
}

TEST_CASE("l2_distance cases and element-sum oracle") {
  const Mat zero = dm(basis_ket(2, 0));
  const Mat one = dm(basis_ket(2, 1));
  CHECK(l2_distance(zero, zero) == doctest::Approx(0.0));
  CHECK(l2_distance(zero, one) == doctest::Approx(std::sqrt(2.0)));

  SplitMix64 rng(18);
  const Mat a = random_matrix(rng, 4);
  const Mat b = random_matrix(rng, 4);
  double sum = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) sum += std::norm(a(i, j) - b(i, j));
  CHECK(l2_distance(a, b) == doctest::Approx(std::sqrt(sum)));
  CHECK(l2_distance(a, b) == doctest::Approx(l2_distance(b, a)));

  CHECK_THROWS_AS(l2_distance(identity(2), identity(4)), DimensionError);
}
