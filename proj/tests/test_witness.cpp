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

#include <cmath>
#include <numbers>
#include <vector>

#include "qhomog/channels.hpp"
#include "qhomog/entanglement.hpp"
#include "qhomog/errors.hpp"
#include "qhomog/states.hpp"
#include "qhomog/tensor.hpp"
#include "qhomog/witness.hpp"
#include "test_util.hpp"

using namespace qhomog;
using namespace qhomog::testutil;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPiThird = 1.0471975511965977;

double min_gap(const GapCurve& curve) {
  double m = 1e300;
  for (const auto& s : curve.samples) m = std::min(m, s.gap);
  return m;
}

}  // namespace

TEST_CASE("step channels are the identity at eta = 0") {
  for (const auto& init :
       {ReservoirInit::bell(3), ReservoirInit::ghz(3), ReservoirInit::product(3)}) {
    CHECK(max_abs_diff(choi(step1_channel(init, 0.0)), dm(bell_phi_plus())) <
          1e-12);
    CHECK(max_abs_diff(choi(step2_channel(init, 0.0)), dm(bell_phi_plus())) <
          1e-12);
  }
}

TEST_CASE("step 1 at eta = pi/2 on a product reservoir is the reset channel") {
  const auto channel = step1_channel(ReservoirInit::product(3), kPi / 2);
  SplitMix64 rng(61);
  const Mat zero = dm(basis_ket(2, 0));
  for (int trial = 0; trial < 3; ++trial) {
    const Mat rho = random_density(rng, 2);
    CHECK(max_abs_diff(channel.apply(rho), zero) < 1e-12);
  }
}

TEST_CASE("step 1 Choi at pi/4 matches the full joint-unitary oracle") {
  const ReservoirInit init = ReservoirInit::bell(3);
  const double eta = kPi / 4;
  const Mat got = choi(step1_channel(init, eta));

  // Evolve the maximally entangled (S, ref) pair directly through the joint
  // step-1 unitary acting on S and the reservoir, reference untouched.
  const int total = 5;  // S, ref, 3 reservoir qubits
  Mat joint = kron(dm(bell_phi_plus()), build_reservoir(init));
  joint = apply_gate(joint, partial_swap(eta), {0, 2}, total);
  joint = apply_gate(joint, fredkin(), {2, 3, 4}, total);
  const Mat oracle = partial_trace(joint, FactorShape::qubits(total), {0, 1});

  CHECK(max_abs_diff(got, oracle) < 1e-11);
  CHECK(std::abs(got.trace() - cxd(1.0)) < 1e-11);
  CHECK(validate(got).pass);
}

TEST_CASE("step 2 on a product reservoir matches step 1 in law") {
  const ReservoirInit init = ReservoirInit::product(3);
  for (const double eta : {0.4, 1.0, 1.5}) {
    const Mat c1 = choi(step1_channel(init, eta));
    const Mat c2 = choi(step2_channel(init, eta));
    CHECK(max_abs_diff(c1, c2) < 1e-11);
  }
}

TEST_CASE("both step channels are CPTP across initializations and couplings") {
  const std::vector<ReservoirInit> inits = {
      ReservoirInit::bell(3), ReservoirInit::ghz(3), ReservoirInit::asym_ghz(),
      ReservoirInit::perturbed_ghz(0.3), ReservoirInit::product(3)};
  for (const auto& init : inits) {
    for (const double eta : {0.0, 0.5, 1.0, kPi / 2}) {
      const CptpReport r1 = is_cptp(step1_channel(init, eta));
      const CptpReport r2 = is_cptp(step2_channel(init, eta));
      CHECK(r1.ok);
      CHECK(r2.ok);
      CHECK(validate(choi(step1_channel(init, eta))).pass);
      CHECK(validate(choi(step2_channel(init, eta))).pass);
    }
  }
}

TEST_CASE("witness closed forms for the Bell initialization") {
  // c_assist is the assistance concurrence of the step-1 collision record,
  // sin(2 eta); for the Bell reservoir the formation side equals sin(eta).
  for (const double eta : {0.2, 0.7, kPiThird, 1.3}) {
    const MemoryGap g = memory_gap(ReservoirInit::bell(3), eta, {});
    // Rank-deficient Wootters spectra carry sqrt round-off near 1e-8.
    CHECK(std::abs(g.c_assist - std::sin(2 * eta)) < 1e-7);
    CHECK(std::abs(g.c_form - std::sin(eta)) < 1e-7);
    CHECK(g.gap == doctest::Approx(g.c_assist - g.c_form).epsilon(1e-12));
  }
}

TEST_CASE("gap vanishes at eta = 0 for every initialization") {
  const std::vector<ReservoirInit> inits = {
      ReservoirInit::product(3),        ReservoirInit::bell(3),
      ReservoirInit::ghz(3),            ReservoirInit::asym_ghz(),
      ReservoirInit::perturbed_ghz(.5), ReservoirInit::xerror_ghz(1, 3)};
  for (const auto& init : inits) {
    const MemoryGap g = memory_gap(init, 0.0, {});
    CHECK(std::abs(g.gap) < 1e-12);
  }
}

TEST_CASE("product initialization never develops a negative gap") {
  const GapCurve curve =
      gap_curve(ReservoirInit::product(3), uniform_eta_grid(60), {}, 1);
  CHECK(min_gap(curve) >= -1e-9);
  CHECK_FALSE(curve.crossing.has_value());
}

TEST_CASE("GHZ and x-error GHZ stay non-negative across the sweep") {
  for (const auto& init :
       {ReservoirInit::ghz(3), ReservoirInit::xerror_ghz(1, 3)}) {
    const GapCurve curve = gap_curve(init, uniform_eta_grid(60), {}, 1);
    CHECK(min_gap(curve) >= -1e-9);
    CHECK_FALSE(curve.crossing.has_value());
  }
}

TEST_CASE("Bell crossing sits at pi/3 and matches the asymmetric GHZ") {
  const GapCurve bell =
      gap_curve(ReservoirInit::bell(3), uniform_eta_grid(60), {}, 1);
  REQUIRE(bell.crossing.has_value());
  CHECK(std::abs(*bell.crossing - kPiThird) < 1e-3);

  const GapCurve asym =
      gap_curve(ReservoirInit::asym_ghz(), uniform_eta_grid(60), {}, 1);
  REQUIRE(asym.crossing.has_value());
  CHECK(std::abs(*asym.crossing - *bell.crossing) < 1e-6);

  // Past the crossing the gap is negative.
  const MemoryGap g = memory_gap(ReservoirInit::bell(3), 1.2, {});
  CHECK(g.gap < 0.0);
}

TEST_CASE("perturbed GHZ crossings shift earlier as alpha grows") {
  const GapCurve a3 = gap_curve(ReservoirInit::perturbed_ghz(0.3),
                                uniform_eta_grid(60), {}, 1);
  const GapCurve a5 = gap_curve(ReservoirInit::perturbed_ghz(0.5),
                                uniform_eta_grid(60), {}, 1);
  REQUIRE(a3.crossing.has_value());
  REQUIRE(a5.crossing.has_value());
  CHECK(*a5.crossing < *a3.crossing);
  // Regression pins from the frozen reference sweep.
  CHECK(std::abs(*a3.crossing - 1.240803) < 2e-3);
  CHECK(std::abs(*a5.crossing - 1.209429) < 2e-3);
}

TEST_CASE("gap curves are continuous: no jump beyond 10x the local slope") {
  for (const auto& init :
       {ReservoirInit::bell(3), ReservoirInit::perturbed_ghz(0.3),
        ReservoirInit::ghz(3)}) {
    const GapCurve curve = gap_curve(init, uniform_eta_grid(60), {}, 1);
    std::vector<double> slope;
    for (size_t i = 0; i + 1 < curve.samples.size(); ++i) {
      const auto& a = curve.samples[i];
      const auto& b = curve.samples[i + 1];
      slope.push_back(std::abs((b.gap - a.gap) / (b.eta - a.eta)));
    }
    for (size_t i = 1; i < slope.size(); ++i) {
      const double local =
          std::max(slope[i - 1], i + 1 < slope.size() ? slope[i + 1] : 0.0);
      CHECK(slope[i] <= 10.0 * (local + 0.05));
    }
  }
}

TEST_CASE("gap_curve bookkeeping: strictly increasing grid, gap identity") {
  const GapCurve curve =
      gap_curve(ReservoirInit::bell(3), uniform_eta_grid(20), {}, 2);
  REQUIRE(curve.samples.size() == 20);
  for (size_t i = 0; i < curve.samples.size(); ++i) {
    const auto& s = curve.samples[i];
    CHECK(s.gap == doctest::Approx(s.c_assist - s.c_form).epsilon(1e-12));
    if (i > 0) CHECK(s.eta > curve.samples[i - 1].eta);
  }

  const GapCurve single = gap_curve(ReservoirInit::bell(3), {0.0}, {}, 1);
  REQUIRE(single.samples.size() == 1);
  CHECK(std::abs(single.samples[0].gap) < 1e-12);
  CHECK_FALSE(single.crossing.has_value());

  CHECK_THROWS_AS(gap_curve(ReservoirInit::bell(3), {0.5, 0.5}, {}, 1),
                  PreconditionError);
  CHECK_THROWS_AS(gap_curve(ReservoirInit::bell(3), {0.5, 2.0}, {}, 1),
                  PreconditionError);
}

TEST_CASE("gap_curve is invariant under the worker count") {
  const GapCurve serial =
      gap_curve(ReservoirInit::asym_ghz(), uniform_eta_grid(30), {}, 1);
  const GapCurve parallel =
      gap_curve(ReservoirInit::asym_ghz(), uniform_eta_grid(30), {}, 8);
  REQUIRE(serial.samples.size() == parallel.samples.size());
  for (size_t i = 0; i < serial.samples.size(); ++i) {
    CHECK(serial.samples[i].gap == parallel.samples[i].gap);
  }
}

TEST_CASE("find_crossing refines a synthetic linear gap to 1e-4") {
  GapCurve curve;
  curve.init = ReservoirInit::bell(3);
  for (const double eta : {0.2, 0.6, 0.9, 1.3, 1.5}) {
    curve.samples.push_back({eta, 0.0, 0.0, eta - 1.0});
  }
  WitnessOptions opts;
  const auto eta_star = find_crossing(
      curve, [](double eta) { return eta - 1.0; }, opts.bisect_tol,
      opts.sign_eps);
  REQUIRE(eta_star.has_value());
  CHECK(std::abs(*eta_star - 1.0) < 1e-4);

  GapCurve positive;
  positive.init = ReservoirInit::ghz(3);
  for (const double eta : {0.2, 0.9, 1.5}) {
    positive.samples.push_back({eta, 0.0, 0.0, 0.1});
  }
  CHECK_FALSE(find_crossing(
                  positive, [](double) { return 0.1; }, opts.bisect_tol,
                  opts.sign_eps)
                  .has_value());
}

TEST_CASE("step channels reject undersized reservoirs") {
  CHECK_THROWS_AS(step1_channel(ReservoirInit::product(2), 0.5),
                  PreconditionError);
  CHECK_THROWS_AS(step2_channel(ReservoirInit::product(2), 0.5),
                  PreconditionError);
}
