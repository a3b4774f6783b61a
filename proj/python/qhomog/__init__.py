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

"""Python bindings for the qhomog collision-model simulator."""

from qhomog._core import (
    ConfigError,
    QhomogError,
    apply_gate,
    build_reservoir,
    collision_map,
    concurrence,
    concurrence_of_assistance,
    entanglement_of_formation,
    eoa_search,
    evolve_composite,
    fredkin,
    gap_curve,
    homogenize,
    kron,
    memory_gap,
    operator_sum_evolution,
    partial_swap,
    partial_trace,
    spin_flip,
    step_choi,
    step_is_cptp,
    swap,
    validate,
)

__all__ = [
    "ConfigError",
    "QhomogError",
    "apply_gate",
    "build_reservoir",
    "collision_map",
    "concurrence",
    "concurrence_of_assistance",
    "entanglement_of_formation",
    "eoa_search",
    "evolve_composite",
    "fredkin",
    "gap_curve",
    "homogenize",
    "kron",
    "memory_gap",
    "operator_sum_evolution",
    "partial_swap",
    "partial_trace",
    "spin_flip",
    "step_choi",
    "step_is_cptp",
    "swap",
    "validate",
]

__version__ = "1.0.0"
