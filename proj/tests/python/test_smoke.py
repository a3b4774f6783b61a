# Copyright 2026 The qhomog Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""End-to-end smoke tests for the pybind11 module."""

import math

import numpy as np
import pytest

import qhomog


def test_partial_swap_limits():
    assert np.allclose(qhomog.partial_swap(0.0), np.eye(4))
    assert np.allclose(qhomog.partial_swap(math.pi / 2), 1j * qhomog.swap())
    with pytest.raises(qhomog.QhomogError):
        qhomog.partial_swap(-0.5)


def test_kron_and_partial_trace():
    x = np.array([[0, 1], [1, 0]], dtype=complex)
    z = np.diag([1, -1]).astype(complex)
    assert np.allclose(qhomog.kron(x, z), np.kron(x, z))

    bell = np.zeros((4, 4), dtype=complex)
    for i in (0, 3):
        for j in (0, 3):
            bell[i, j] = 0.5
    marg = qhomog.partial_trace(bell, 2, [0])
    assert np.allclose(marg, np.eye(2) / 2)


def test_entanglement_monotones():
    bell = np.zeros((4, 4), dtype=complex)
    for i in (0, 3):
        for j in (0, 3):
            bell[i, j] = 0.5
    assert qhomog.concurrence(bell) == pytest.approx(1.0)
    assert qhomog.concurrence_of_assistance(bell) == pytest.approx(1.0)
    assert qhomog.entanglement_of_formation(bell) == pytest.approx(1.0)

    value, members = qhomog.eoa_search(np.eye(4, dtype=complex) / 4, 4, 10, 3)
    assert value >= 0.99
    probs = [p for p, _ in members]
    assert sum(probs) == pytest.approx(1.0)


def test_reservoir_builders_validate():
    for kwargs in (
        dict(kind="product", n_qubits=4),
        dict(kind="bell"),
        dict(kind="ghz"),
        dict(kind="asym_ghz"),
        dict(kind="perturbed_ghz", alpha=0.3),
        dict(kind="xerror_ghz", site=2),
    ):
        rho = qhomog.build_reservoir(**kwargs)
        report = qhomog.validate(rho)
        assert report["pass"], kwargs


def test_homogenizer_convergence():
    one = np.diag([0, 1]).astype(complex)
    zero = np.diag([1, 0]).astype(complex)
    rows = qhomog.homogenize(one, zero, 10, eta=math.pi / 4)
    dists = [dist for _, _, dist, _ in rows]
    assert all(b <= a + 1e-12 for a, b in zip(dists, dists[1:]))
    assert dists[-1] < 0.05

    comp = qhomog.evolve_composite(one, "product", 4, 10, eta=math.pi / 4)
    assert abs(comp[-1][2] - dists[-1]) < 1e-10


def test_memory_witness_gap():
    c_assist, c_form, gap = qhomog.memory_gap("bell", 1.2)
    assert gap < 0.0
    # Rank-deficient Wootters spectra carry sqrt round-off near 1e-8.
    assert c_assist == pytest.approx(math.sin(2.4), abs=1e-7)
    assert c_form == pytest.approx(math.sin(1.2), abs=1e-7)

    curve = qhomog.gap_curve("bell")
    assert curve["eta_star"] == pytest.approx(1.047, abs=0.02)

    ghz = qhomog.gap_curve("ghz")
    assert ghz["eta_star"] is None
    assert min(ghz["gap"]) >= -1e-9


def test_step_channels_are_cptp():
    for step in (1, 2):
        rep = qhomog.step_is_cptp(step, "asym_ghz", 0.9)
        assert rep["ok"]
    choi = qhomog.step_choi(1, "bell", 0.0)
    expect = np.zeros((4, 4), dtype=complex)
    for i in (0, 3):
        for j in (0, 3):
            expect[i, j] = 0.5
    assert np.allclose(choi, expect)


def test_operator_sum_boundaries():
    one = np.diag([0, 1]).astype(complex)
    assert np.allclose(qhomog.operator_sum_evolution(one, 0.0, 5), one)
    assert np.allclose(
        qhomog.operator_sum_evolution(one, 1.0, 5), np.diag([1, 0])
    )
