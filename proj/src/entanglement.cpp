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

#include "qhomog/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "qhomog/rng.hpp"
#include "qhomog/states.hpp"

namespace qhomog {

namespace {

void check_two_qubit(const Mat& rho, const char* who) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw DimensionError(std::string(who) + ": two-qubit state required");
}

double clamp01(double x) {
  if (x < 0.0) return 0.0;
  if (x > 1.0) return 1.0;
  return x;
}

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

// ad - bc of a two-qubit amplitude vector; p C(phi/sqrt(p)) = 2|det2(phi)|
// for subnormalized phi with p = <phi|phi>.
cxd det2(const Vec& phi) { return phi(0) * phi(3) - phi(1) * phi(2); }

struct SearchProblem {
  std::vector<Vec> sub;  // subnormalized eigenvectors sqrt(mu_k)|e_k>
  int rank = 0;
};

SearchProblem decompose_rank(const Mat& rho) {
  SearchProblem pr;
  auto [vals, vecs] = herm_eig(0.5 * (rho + rho.adjoint()));
  for (Eigen::Index k = 0; k < vals.size(); ++k) {
    if (vals(k) <= 1e-12) continue;
    pr.sub.push_back(std::sqrt(vals(k)) * Vec(vecs.col(k)));
  }
  pr.rank = static_cast<int>(pr.sub.size());
  return pr;
}

// Average concurrence of the ensemble generated by isometry rows:
// phi_j = sum_k W(j,k) sub_k; objective = 2 sum_j |det2(phi_j)|.
// det2 is quadratic, so work in the r x r Gram form:
// det2(phi_j) = sum_{k,l} W(j,k) W(j,l) t(k,l) with t(k,l) = part of the
// symmetric tau matrix; precomputing t makes each evaluation O(m r^2).
struct Objective {
  Mat tau;  // r x r symmetric: tau(k,l) = det2-bilinear form of sub vectors
  int rank;

  explicit Objective(const SearchProblem& pr) : rank(pr.rank) {
    tau = Mat::Zero(rank, rank);
    for (int k = 0; k < rank; ++k)
      for (int l = 0; l < rank; ++l) {
        const Vec &a = pr.sub[static_cast<size_t>(k)], &b = pr.sub[static_cast<size_t>(l)];
        tau(k, l) = 0.5 * (a(0) * b(3) + b(0) * a(3) - a(1) * b(2) - b(1) * a(2));
      }
  }

  double row_term(const Mat& w, int j) const {
    cxd d = 0.0;
    for (int k = 0; k < rank; ++k)
      for (int l = 0; l < rank; ++l) d += w(j, k) * w(j, l) * tau(k, l);
    return 2.0 * std::abs(d);
  }

  double total(const Mat& w) const {
    double s = 0.0;
    for (Eigen::Index j = 0; j < w.rows(); ++j)
      s += row_term(w, static_cast<int>(j));
    return s;
  }
};

Mat random_isometry(int m, int r, SplitMix64& rng) {
  Mat g(m, r);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < r; ++j)
      g(i, j) = cxd(rng.next_gaussian(), rng.next_gaussian());
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ() * Mat::Identity(m, r);
  return q;
}

// Hill-climb over the isometry manifold with random two-row rotations;
// left-multiplying by a unitary preserves W^dag W = I.
double climb(Mat& w, const Objective& obj, bool maximize, SplitMix64& rng) {
  const int m = static_cast<int>(w.rows());
  const double sign = maximize ? 1.0 : -1.0;
  double best = sign * obj.total(w);
  double step = 0.6;
  const int sweeps = 60;
  const int tries_per_sweep = 4 * m;
  const double two_pi = 6.283185307179586476925286766559;
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    bool improved = false;
    for (int t = 0; t < tries_per_sweep; ++t) {
      int i = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(m));
      int j = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(m));
      if (i == j) continue;
      const double theta = step * (rng.next_double() - 0.5) * 2.0;
      const double phase = two_pi * rng.next_double();
      const cxd e(std::cos(phase), std::sin(phase));
      const double c = std::cos(theta), s = std::sin(theta);
      const Vec row_i = w.row(i).transpose();
      const Vec row_j = w.row(j).transpose();
      const double before =
          sign * (obj.row_term(w, i) + obj.row_term(w, j));
      w.row(i) = (c * row_i + s * e * row_j).transpose();
      w.row(j) = (-s * std::conj(e) * row_i + c * row_j).transpose();
      const double after = sign * (obj.row_term(w, i) + obj.row_term(w, j));
      if (after > before + 1e-15) {
        best += after - before;
        improved = true;
      } else {
        w.row(i) = row_i.transpose();
        w.row(j) = row_j.transpose();
      }
    }
    if (!improved) step *= 0.5;
    if (step < 1e-6) break;
  }
  (void)best;
  // Recompute from scratch so incremental drift cannot leak into the result.
  return obj.total(w);
}

std::pair<double, Decomposition> roof_search(const Mat& rho, int ensemble_size,
                                             int restarts, std::uint64_t seed,
                                             bool maximize) {
  check_two_qubit(rho, "eoa_search");
  if (restarts < 1) throw PreconditionError("eoa_search: restarts must be >= 1");
  const SearchProblem pr = decompose_rank(rho);
  if (pr.rank == 0) throw PreconditionError("eoa_search: zero-rank input");
  if (ensemble_size < pr.rank)
    throw PreconditionError("eoa_search: ensemble_size below rank");

  auto build_members = [&](const Mat& w) {
    Decomposition d;
    for (Eigen::Index j = 0; j < w.rows(); ++j) {
      Vec phi = Vec::Zero(4);
      for (int k = 0; k < pr.rank; ++k)
        phi += w(j, k) * pr.sub[static_cast<size_t>(k)];
      const double p = phi.squaredNorm();
      if (p > 1e-14) d.members.emplace_back(p, Vec(phi / std::sqrt(p)));
    }
    return d;
  };

  // Pure input: every isometry yields the same single-state ensemble.
  if (pr.rank == 1) {
    const Vec psi = pr.sub[0] / pr.sub[0].norm();
    Decomposition d;
    d.members.emplace_back(1.0, psi);
    return {pure_concurrence(psi), d};
  }

  const Objective obj(pr);
  double best_val = maximize ? -1.0 : 2.0;
  Mat best_w;
  for (int r = 0; r < restarts; ++r) {
    SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(r));
    Mat w = random_isometry(ensemble_size, pr.rank, rng);
    const double val = climb(w, obj, maximize, rng);
    const bool better = maximize ? val > best_val : val < best_val;
    if (better) {
      best_val = val;
      best_w = w;
    }
  }
  return {best_val, build_members(best_w)};
}

}  // namespace

std::array<double, 4> wootters_lambdas(const Mat& rho) {
  check_two_qubit(rho, "wootters_lambdas");
  const Mat prod = rho * spin_flip(rho);
  Eigen::ComplexEigenSolver<Mat> solver(prod);
  if (solver.info() != Eigen::Success)
    throw NumericalError("wootters_lambdas: eigensolver failed");
  std::array<double, 4> lams{};
  for (int i = 0; i < 4; ++i) {
    // Eigenvalues of rho rho~ are real and nonnegative up to round-off.
    const double re = solver.eigenvalues()(i).real();
    lams[static_cast<size_t>(i)] = re > 0.0 ? std::sqrt(re) : 0.0;
  }
  std::sort(lams.begin(), lams.end(), std::greater<double>());
  return lams;
}

double concurrence(const Mat& rho) {
  const auto l = wootters_lambdas(rho);
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

double concurrence_of_assistance(const Mat& rho) {
  const auto l = wootters_lambdas(rho);
  return clamp01(l[0] + l[1] + l[2] + l[3]);
}

double entanglement_of_formation(const Mat& rho) {
  const double c = concurrence(rho);
  return binary_entropy((1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))) / 2.0);
}

double pure_concurrence(const Vec& psi) {
  if (psi.size() != 4)
    throw DimensionError("pure_concurrence: two-qubit ket required");
  return clamp01(2.0 * std::abs(det2(psi)));
}

Mat Decomposition::reconstruct() const {
  Mat rho = Mat::Zero(4, 4);
  for (const auto& [p, psi] : members) rho += p * (psi * psi.adjoint());
  return rho;
}

std::pair<double, Decomposition> eoa_search(const Mat& rho, int ensemble_size,
                                            int restarts, std::uint64_t seed) {
  return roof_search(rho, ensemble_size, restarts, seed, /*maximize=*/true);
}

std::pair<double, Decomposition> roof_min_search(const Mat& rho,
                                                 int ensemble_size,
                                                 int restarts,
                                                 std::uint64_t seed) {
  return roof_search(rho, ensemble_size, restarts, seed, /*maximize=*/false);
}

}  // namespace qhomog
