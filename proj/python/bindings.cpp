// Copyright 2026 The approxdd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "approxdd/approximation.hpp"
#include "approxdd/errors.hpp"
#include "approxdd/generators.hpp"
#include "approxdd/oracle.hpp"
#include "approxdd/qasm.hpp"
#include "approxdd/report.hpp"
#include "approxdd/state.hpp"
#include "approxdd/strategies.hpp"

namespace py = pybind11;

namespace approxdd {
namespace {

constexpr std::size_t kMaxDenseQubits = 20;

Placement parse_placement(const std::string& name) {
  if (name == "markers") {
    return Placement::kMarkers;
  }
  if (name == "even") {
    return Placement::kEven;
  }
  throw InputError("placement must be \"markers\" or \"even\", got \"" + name + "\"");
}

PackageConfig package_config(std::optional<std::size_t> node_limit) {
  PackageConfig config = PackageConfig::from_environment();
  if (node_limit) {
    config.node_limit = *node_limit;
  }
  return config;
}

std::size_t qubits_of(const DenseState& amplitudes) {
  const std::size_t size = amplitudes.size();
  if (size < 2 || (size & (size - 1)) != 0) {
    throw InputError("amplitude vector length must be a power of two >= 2, got " +
                     std::to_string(size));
  }
  return static_cast<std::size_t>(std::countr_zero(size));
}

// Returns the stats document as JSON text and, when requested, the dense
// final state.
std::pair<std::string, std::optional<DenseState>> simulate(
    const Circuit& circuit, const std::string& mode, std::optional<std::size_t> threshold,
    std::optional<double> f_round, std::optional<double> f_final, const std::string& placement,
    bool amplitudes, std::optional<std::size_t> node_limit) {
  if (amplitudes && circuit.num_qubits() > kMaxDenseQubits) {
    throw CapacityError("dense amplitudes are limited to " + std::to_string(kMaxDenseQubits) +
                        " qubits");
  }
  RunReport report;
  report.benchmark = circuit.name();
  report.qubits = circuit.num_qubits();
  report.gates = circuit.size();
  report.mode = mode;
  Package package(package_config(node_limit));
  SimulationResult result;
  {
    py::gil_scoped_release release;
    if (mode == "exact") {
      result = simulate_exact(package, circuit);
    } else if (mode == "memory") {
      const MemoryDrivenConfig config{threshold.value_or(1024), f_round.value_or(0.99)};
      report.threshold = config.initial_threshold;
      report.f_round = config.f_round;
      result = simulate_memory_driven(package, circuit, config);
    } else if (mode == "fidelity") {
      const FidelityDrivenConfig config{f_final.value_or(0.5), f_round.value_or(0.9),
                                        parse_placement(placement)};
      report.f_final = config.f_final;
      report.f_round = config.f_round;
      report.placement = placement;
      report.planned_rounds = plan_rounds(circuit, config).rounds();
      result = simulate_fidelity_driven(package, circuit, config);
    } else {
      throw InputError("mode must be exact, memory or fidelity, got \"" + mode + "\"");
    }
  }
  report.stats = result.stats;
  std::optional<DenseState> dense;
  if (amplitudes) {
    dense = to_dense(result.state);
  }
  return {report_to_json(report), std::move(dense)};
}

py::dict plan(const Circuit& circuit, double f_final, double f_round,
              const std::string& placement) {
  const RoundPlan p = plan_rounds(circuit, {f_final, f_round, parse_placement(placement)});
  py::dict out;
  out["positions"] = p.positions;
  out["max_rounds"] = p.max_rounds;
  out["warnings"] = p.warnings;
  return out;
}

std::vector<std::pair<int, double>> contributions(const DenseState& amplitudes) {
  (void)qubits_of(amplitudes);
  Package package(package_config(std::nullopt));
  const StateDD state = from_dense(package, amplitudes);
  const ContributionMap map = node_contributions(state);
  std::vector<std::pair<int, double>> out;
  for (const auto& e : map.entries()) {
    out.emplace_back(e.level, e.contribution);
  }
  return out;
}

py::dict approximate(const DenseState& amplitudes, double f_round) {
  (void)qubits_of(amplitudes);
  Package package(package_config(std::nullopt));
  const StateDD state = from_dense(package, amplitudes);
  const RoundOutcome outcome = approximate_round(state, f_round);
  py::dict out;
  out["amplitudes"] = to_dense(outcome.state);
  out["fidelity"] = outcome.round_fidelity;
  out["nodes_before"] = outcome.nodes_before;
  out["nodes_after"] = outcome.nodes_after;
  out["nodes_removed"] = outcome.nodes_removed;
  return out;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> factor(const DenseState& amplitudes,
                                                              std::size_t work_qubits,
                                                              std::uint64_t modulus,
                                                              std::uint64_t base) {
  (void)qubits_of(amplitudes);
  return shor_postprocess(counting_distribution(amplitudes, work_qubits), modulus, base);
}

}  // namespace
}  // namespace approxdd

PYBIND11_MODULE(_core, m) {
  using namespace approxdd;
  m.doc() = "Approximating decision-diagram quantum circuit simulator";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);
  py::register_exception<TruncationError>(m, "TruncationError", PyExc_ArithmeticError);

  py::class_<Circuit>(m, "Circuit")
      .def(py::init<std::size_t, std::string>(), py::arg("num_qubits"), py::arg("name") = "")
      .def_property_readonly("num_qubits", &Circuit::num_qubits)
      .def_property("name", &Circuit::name, &Circuit::set_name)
      .def_property("initial_state", &Circuit::initial_state, &Circuit::set_initial_state)
      .def_property_readonly("markers", &Circuit::markers)
      .def("__len__", &Circuit::size)
      .def("h", &Circuit::h, py::arg("qubit"), py::return_value_policy::reference_internal)
      .def("x", &Circuit::x, py::arg("qubit"), py::return_value_policy::reference_internal)
      .def("cx", &Circuit::cx, py::arg("control"), py::arg("target"),
           py::return_value_policy::reference_internal)
      .def("cz", &Circuit::cz, py::arg("control"), py::arg("target"),
           py::return_value_policy::reference_internal)
      .def("cp", &Circuit::cp, py::arg("angle"), py::arg("control"), py::arg("target"),
           py::return_value_policy::reference_internal)
      .def("swap", &Circuit::swap, py::arg("a"), py::arg("b"),
           py::return_value_policy::reference_internal)
      .def("barrier", &Circuit::barrier, py::return_value_policy::reference_internal)
      .def("to_qasm", [](const Circuit& c) { return to_qasm(c); })
      .def("__repr__", [](const Circuit& c) {
        return "<Circuit " + c.name() + " qubits=" + std::to_string(c.num_qubits()) +
               " gates=" + std::to_string(c.size()) + ">";
      });

  m.def(
      "parse_qasm",
      [](const std::string& text) {
        std::vector<std::string> warnings;
        Circuit c = parse_qasm(text, &warnings);
        return std::make_pair(std::move(c), std::move(warnings));
      },
      py::arg("text"), "Parses OpenQASM 2.0 text into (circuit, warnings).");

  m.def("gen_ghz", &gen_ghz, py::arg("num_qubits"));
  m.def("gen_qft", &gen_qft, py::arg("num_qubits"), py::arg("inverse") = false);
  m.def("gen_supremacy", &gen_supremacy, py::arg("rows"), py::arg("cols"), py::arg("depth"),
        py::arg("seed") = 0);
  m.def("gen_shor_period", &gen_shor_period, py::arg("modulus"), py::arg("base"));
  m.def("gen_random", &gen_random, py::arg("num_qubits"), py::arg("num_gates"),
        py::arg("seed") = 0);

  m.def("plan_rounds", &plan, py::arg("circuit"), py::arg("f_final"), py::arg("f_round"),
        py::arg("placement") = "even");
  m.def("simulate", &approxdd::simulate, py::arg("circuit"), py::arg("mode") = "exact",
        py::arg("threshold") = py::none(), py::arg("f_round") = py::none(),
        py::arg("f_final") = py::none(), py::arg("placement") = "even",
        py::arg("amplitudes") = false, py::arg("node_limit") = py::none());

  m.def("contributions", &contributions, py::arg("amplitudes"),
        "(level, contribution) for every node of the state's diagram, root first.");
  m.def("approximate_round", &approximate, py::arg("amplitudes"), py::arg("f_round"));
  m.def("dense_simulate", &dense_simulate, py::arg("circuit"));
  m.def(
      "fidelity", [](const DenseState& a, const DenseState& b) { return dense_fidelity(a, b); },
      py::arg("a"), py::arg("b"));
  m.def("shor_postprocess", &factor, py::arg("amplitudes"), py::arg("work_qubits"),
        py::arg("modulus"), py::arg("base"));
}
