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

#ifndef APPROXDD_REPORT_HPP
#define APPROXDD_REPORT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "approxdd/strategies.hpp"

namespace approxdd {

struct AmplitudeEntry {
  std::uint64_t index = 0;
  double re = 0.0;
  double im = 0.0;
};

/// Everything a run emits: the request parameters and the results.
struct RunReport {
  std::string benchmark;
  std::size_t qubits = 0;
  std::size_t gates = 0;
  std::string mode;
  std::optional<double> f_round;
  std::optional<double> f_final;
  std::optional<std::size_t> threshold;
  std::optional<std::string> placement;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> planned_rounds;
  SimStats stats;
  std::optional<double> oracle_fidelity;
  std::optional<std::vector<AmplitudeEntry>> amplitudes;
};

/// Nonzero amplitudes (|a| > 1e-15) in index order. Limited to 20 qubits.
[[nodiscard]] std::vector<AmplitudeEntry> nonzero_amplitudes(const StateDD& state);

/// The JSON stats document, pretty-printed with two-space indentation.
[[nodiscard]] std::string report_to_json(const RunReport& report);

/// Column names of csv_row, comma-separated.
[[nodiscard]] std::string csv_header();

/// benchmark, qubits, max_dd_size, rounds, f_round, runtime_seconds,
/// fidelity_lower_bound.
[[nodiscard]] std::string csv_row(const RunReport& report);

}  // namespace approxdd

#endif  // APPROXDD_REPORT_HPP
