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

#include "approxdd/report.hpp"

#include <cmath>
#include <cstdio>

#include "approxdd/state.hpp"
#include "json.hpp"

namespace approxdd {
namespace {

using nlohmann::ordered_json;

template <class T>
ordered_json optional_value(const std::optional<T>& value) {
  return value ? ordered_json(*value) : ordered_json(nullptr);
}

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace

std::vector<AmplitudeEntry> nonzero_amplitudes(const StateDD& state) {
  const std::vector<Complex> dense = to_dense(state);
  std::vector<AmplitudeEntry> out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (std::abs(dense[i]) > 1e-15) {
      out.push_back({i, dense[i].real(), dense[i].imag()});
    }
  }
  return out;
}

std::string report_to_json(const RunReport& report) {
  const SimStats& s = report.stats;
  ordered_json doc;
  doc["benchmark"] = report.benchmark;
  doc["qubits"] = report.qubits;
  doc["gates"] = report.gates;
  doc["mode"] = report.mode;
  doc["max_dd_size"] = s.max_dd_size;
  doc["rounds"] = s.rounds_applied();
  doc["f_round"] = optional_value(report.f_round);
  doc["f_final"] = optional_value(report.f_final);
  doc["threshold"] = optional_value(report.threshold);
  doc["placement"] = optional_value(report.placement);
  doc["planned_rounds"] = optional_value(report.planned_rounds);
  doc["seed"] = optional_value(report.seed);
  doc["runtime_seconds"] = s.wall_time_seconds;
  doc["fidelity_lower_bound"] = s.fidelity_lower_bound;
  doc["oracle_fidelity"] = optional_value(report.oracle_fidelity);

  ordered_json rounds = ordered_json::array();
  for (const RoundRecord& r : s.rounds) {
    ordered_json rec;
    rec["position"] = r.position;
    rec["nodes_before"] = r.nodes_before;
    rec["nodes_after"] = r.nodes_after;
    rec["nodes_removed"] = r.nodes_removed;
    rec["fidelity"] = r.fidelity;
    if (report.mode == "memory") {
      rec["threshold"] = r.threshold;
    }
    rounds.push_back(std::move(rec));
  }
  doc["round_details"] = std::move(rounds);

  ordered_json trace = ordered_json::array();
  for (const auto& [position, count] : s.node_count_trace) {
    trace.push_back(ordered_json::array({position, count}));
  }
  doc["trace"] = std::move(trace);
  doc["warnings"] = s.warnings;

  if (report.amplitudes) {
    ordered_json amps = ordered_json::array();
    for (const AmplitudeEntry& a : *report.amplitudes) {
      amps.push_back(ordered_json::array({a.index, a.re, a.im}));
    }
    doc["amplitudes"] = std::move(amps);
  } else {
    doc["amplitudes"] = nullptr;
  }
  return doc.dump(2) + "\n";
}

std::string csv_header() {
  return "benchmark,qubits,max_dd_size,rounds,f_round,runtime_seconds,fidelity_lower_bound";
}

std::string csv_row(const RunReport& report) {
  const SimStats& s = report.stats;
  return report.benchmark + "," + std::to_string(report.qubits) + "," +
         std::to_string(s.max_dd_size) + "," + std::to_string(s.rounds_applied()) + "," +
         (report.f_round ? format_double(*report.f_round) : std::string{}) + "," +
         format_double(s.wall_time_seconds) + "," + format_double(s.fidelity_lower_bound);
}

}  // namespace approxdd
