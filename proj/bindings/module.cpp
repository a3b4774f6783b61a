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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qhomog/channels.hpp"
#include "qhomog/dynamics.hpp"
#include "qhomog/entanglement.hpp"
#include "qhomog/experiments.hpp"
#include "qhomog/states.hpp"
#include "qhomog/tensor.hpp"
#include "qhomog/witness.hpp"

namespace py = pybind11;
using namespace qhomog;

namespace {

ReservoirInit make_init(const std::string& kind, int n_qubits, double alpha,
                        int site) {
  if (kind == "product") return ReservoirInit::product(n_qubits);
  if (kind == "bell") return ReservoirInit::bell(n_qubits);
  if (kind == "ghz") return ReservoirInit::ghz(n_qubits);
  if (kind == "asym_ghz") return ReservoirInit::asym_ghz();
  if (kind == "perturbed_ghz") return ReservoirInit::perturbed_ghz(alpha);
  if (kind == "xerror_ghz") return ReservoirInit::xerror_ghz(site, n_qubits);
  throw PreconditionError("unknown reservoir kind '" + kind + "'");
}

WitnessOptions make_opts(const Mat& fiducial) {
  WitnessOptions opts;
  if (fiducial.size() != 0) opts.fiducial = fiducial;
  return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Dense-matrix simulator of the non-Markovian quantum homogenizer: "
      "partial-SWAP collisions, Fredkin-mediated reservoir memory, and the "
      "entanglement witness for classical vs quantum memory.";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<Error>(m, "QhomogError", PyExc_RuntimeError);

  m.def("partial_swap", [](double eta) { return Mat(partial_swap(eta).op); },
        py::arg("eta"), "cos(eta) I + i sin(eta) SWAP");
  m.def("swap", [] { return Mat(swap_gate().op); });
  m.def("fredkin", [] { return Mat(fredkin().op); },
        "Controlled-SWAP; control is qubit 0");
  m.def("kron", [](const Mat& a, const Mat& b) { return kron(a, b); },
        py::arg("a"), py::arg("b"));
  m.def(
      "partial_trace",
      [](const Mat& rho, int n_qubits, const std::vector<int>& keep) {
        return partial_trace(rho, FactorShape::qubits(n_qubits), keep);
      },
      py::arg("rho"), py::arg("n_qubits"), py::arg("keep"));
  m.def(
      "apply_gate",
      [](const Mat& state, const Mat& gate, const std::vector<int>& wires,
         int n_qubits) {
        int arity = 0;
        while ((1 << arity) < gate.rows()) ++arity;
        return apply_gate(state, Gate{gate, arity}, wires, n_qubits);
      },
      py::arg("state"), py::arg("gate"), py::arg("wires"), py::arg("n_qubits"));

  m.def(
      "build_reservoir",
      [](const std::string& kind, int n_qubits, double alpha, int site) {
        return build_reservoir(make_init(kind, n_qubits, alpha, site));
      },
      py::arg("kind"), py::arg("n_qubits") = 3, py::arg("alpha") = 0.0,
      py::arg("site") = 1);
  m.def("spin_flip", &spin_flip, py::arg("rho"));
  m.def(
      "validate",
      [](const Mat& rho) {
        const ValidationReport rep = validate(rho);
        py::dict d;
        d["herm_dev"] = rep.herm_dev;
        d["trace_dev"] = rep.trace_dev;
        d["min_eigenvalue"] = rep.min_eigenvalue;
        d["pass"] = rep.pass;
        return d;
      },
      py::arg("rho"));

  m.def("concurrence", &concurrence, py::arg("rho"));
  m.def("concurrence_of_assistance", &concurrence_of_assistance,
        py::arg("rho"));
  m.def("entanglement_of_formation", &entanglement_of_formation,
        py::arg("rho"));
  m.def(
      "eoa_search",
      [](const Mat& rho, int ensemble_size, int restarts, std::uint64_t seed) {
        auto [value, decomp] = eoa_search(rho, ensemble_size, restarts, seed);
        std::vector<std::pair<double, Vec>> members(decomp.members.begin(),
                                                    decomp.members.end());
        return py::make_tuple(value, members);
      },
      py::arg("rho"), py::arg("ensemble_size") = 8, py::arg("restarts") = 20,
      py::arg("seed") = 0);

  m.def(
      "collision_map",
      [](const Mat& rho, const Mat& xi, double eta) {
        return collision_map(rho, xi, eta);
      },
      py::arg("rho"), py::arg("xi"), py::arg("eta"));
  m.def(
      "step_choi",
      [](int step, const std::string& kind, double eta, int n_qubits,
         double alpha, int site) {
        const ReservoirInit init = make_init(kind, n_qubits, alpha, site);
        if (step == 1) return choi(step1_channel(init, eta));
        if (step == 2) return choi(step2_channel(init, eta));
        throw PreconditionError("step must be 1 or 2");
      },
      py::arg("step"), py::arg("kind"), py::arg("eta"), py::arg("n_qubits") = 3,
      py::arg("alpha") = 0.0, py::arg("site") = 1,
      "Choi state of the step-1 or step-2 reduced channel");
  m.def(
      "step_is_cptp",
      [](int step, const std::string& kind, double eta, int n_qubits,
         double alpha, int site) {
        const ReservoirInit init = make_init(kind, n_qubits, alpha, site);
        const CptpReport rep =
            step == 1 ? is_cptp(step1_channel(init, eta))
                      : is_cptp(step2_channel(init, eta));
        py::dict d;
        d["ok"] = rep.ok;
        d["min_choi_eigenvalue"] = rep.min_choi_eigenvalue;
        d["tp_deviation"] = rep.tp_deviation;
        return d;
      },
      py::arg("step"), py::arg("kind"), py::arg("eta"), py::arg("n_qubits") = 3,
      py::arg("alpha") = 0.0, py::arg("site") = 1);

  m.def(
      "memory_gap",
      [](const std::string& kind, double eta, int n_qubits, double alpha,
         int site, const Mat& fiducial) {
        const MemoryGap g = memory_gap(make_init(kind, n_qubits, alpha, site),
                                       eta, make_opts(fiducial));
        return py::make_tuple(g.c_assist, g.c_form, g.gap);
      },
      py::arg("kind"), py::arg("eta"), py::arg("n_qubits") = 3,
      py::arg("alpha") = 0.0, py::arg("site") = 1, py::arg("fiducial") = Mat(),
      "(c_assist, c_form, gap) of the two-step memory witness");
  m.def(
      "gap_curve",
      [](const std::string& kind, const std::vector<double>& grid,
         int n_qubits, double alpha, int site, const Mat& fiducial, int jobs) {
        const GapCurve curve =
            gap_curve(make_init(kind, n_qubits, alpha, site),
                      grid.empty() ? uniform_eta_grid(60) : grid,
                      make_opts(fiducial), jobs);
        py::dict d;
        std::vector<double> etas, ca, cf, gaps;
        for (const auto& s : curve.samples) {
          etas.push_back(s.eta);
          ca.push_back(s.c_assist);
          cf.push_back(s.c_form);
          gaps.push_back(s.gap);
        }
        d["eta"] = etas;
        d["c_assist"] = ca;
        d["c_form"] = cf;
        d["gap"] = gaps;
        d["eta_star"] = curve.crossing ? py::object(py::float_(*curve.crossing))
                                       : py::object(py::none());
        return d;
      },
      py::arg("kind"), py::arg("grid") = std::vector<double>(),
      py::arg("n_qubits") = 3, py::arg("alpha") = 0.0, py::arg("site") = 1,
      py::arg("fiducial") = Mat(), py::arg("jobs") = 1);

  m.def(
      "homogenize",
      [](const Mat& rho_s, const Mat& xi, int n, double eta,
         std::uint64_t seed, const std::string& schedule) {
        EtaSchedule sched = schedule == "fixed" ? EtaSchedule::fixed(eta)
                                                : EtaSchedule::uniform(seed);
        const Trajectory traj = homogenize(rho_s, xi, n, sched);
        std::vector<py::tuple> rows;
        for (const auto& s : traj.steps)
          rows.push_back(py::make_tuple(s.step, s.eta, s.dist, Mat(s.rho_s)));
        return rows;
      },
      py::arg("rho_s"), py::arg("xi"), py::arg("n"), py::arg("eta") = 0.0,
      py::arg("seed") = 0, py::arg("schedule") = "fixed");
  m.def(
      "evolve_composite",
      [](const Mat& rho_s, const std::string& kind, int n_qubits, int n,
         double eta, std::uint64_t seed, const std::string& schedule,
         double alpha, int site) {
        EtaSchedule sched = schedule == "fixed" ? EtaSchedule::fixed(eta)
                                                : EtaSchedule::uniform(seed);
        const Trajectory traj =
            evolve_composite(rho_s, make_init(kind, n_qubits, alpha, site), n,
                             sched, CollisionPlan::odd_targets(n));
        std::vector<py::tuple> rows;
        for (const auto& s : traj.steps)
          rows.push_back(py::make_tuple(s.step, s.eta, s.dist, Mat(s.rho_s)));
        return rows;
      },
      py::arg("rho_s"), py::arg("kind"), py::arg("n_qubits"), py::arg("n"),
      py::arg("eta") = 0.0, py::arg("seed") = 0, py::arg("schedule") = "fixed",
      py::arg("alpha") = 0.0, py::arg("site") = 1);
  m.def("operator_sum_evolution",
        [](const Mat& rho_s, double p, int n) {
          return operator_sum_evolution(rho_s, p, n);
        },
        py::arg("rho_s"), py::arg("p"), py::arg("n"));
}
