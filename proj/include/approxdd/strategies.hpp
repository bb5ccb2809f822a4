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

#ifndef APPROXDD_STRATEGIES_HPP
#define APPROXDD_STRATEGIES_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "approxdd/circuit.hpp"
#include "approxdd/errors.hpp"
#include "approxdd/package.hpp"

namespace approxdd {

struct MemoryDrivenConfig {
  std::size_t initial_threshold = 1;
  double f_round = 0.99;
};

enum class Placement { kMarkers, kEven };

struct FidelityDrivenConfig {
  double f_final = 0.5;
  double f_round = 0.9;
  Placement placement = Placement::kEven;
};

/// Positions count applied gates: a round at position k runs after gate k - 1.
struct RoundPlan {
  std::vector<std::size_t> positions;
  /// floor(log_{f_round} f_final), the most rounds the budget allows.
  std::size_t max_rounds = 0;
  double f_round = 1.0;
  std::vector<std::string> warnings;

  [[nodiscard]] std::size_t rounds() const noexcept { return positions.size(); }
};

struct RoundRecord {
  std::size_t position = 0;
  std::size_t nodes_before = 0;
  std::size_t nodes_after = 0;
  std::size_t nodes_removed = 0;
  double fidelity = 1.0;
  /// Memory-driven only: the threshold that was exceeded.
  std::size_t threshold = 0;
};

struct SimStats {
  std::string mode;
  std::size_t max_dd_size = 0;
  /// (applied gate count, reachable nodes). Entry 0 is the initial state; a
  /// round adds a second entry at its position with the reduced size.
  std::vector<std::pair<std::size_t, std::size_t>> node_count_trace;
  std::vector<RoundRecord> rounds;
  double fidelity_lower_bound = 1.0;
  double wall_time_seconds = 0.0;
  std::size_t gates_applied = 0;
  std::vector<std::string> warnings;

  [[nodiscard]] std::size_t rounds_applied() const noexcept { return rounds.size(); }
  [[nodiscard]] std::vector<double> per_round_fidelities() const;
};

struct SimulationResult {
  StateDD state;
  SimStats stats;
};

/// Raised when the node budget runs out mid-simulation; carries the
/// statistics gathered up to that point.
class SimulationAborted : public ResourceError {
 public:
  SimulationAborted(const std::string& message, SimStats stats)
      : ResourceError(message), stats_(std::move(stats)) {}
  [[nodiscard]] const SimStats& stats() const noexcept { return stats_; }

 private:
  SimStats stats_;
};

[[nodiscard]] SimulationResult simulate_exact(Package& package, const Circuit& circuit);

/// After every gate, a round runs when the state exceeds the threshold,
/// which then doubles.
[[nodiscard]] SimulationResult simulate_memory_driven(Package& package, const Circuit& circuit,
                                                      const MemoryDrivenConfig& config);

/// "even": positions ceil(k G / (r + 1)) for k = 1..r over G gates,
/// deduplicated, never 0 or G. "markers": the circuit's barriers strictly
/// inside the gate list, the first r of them.
[[nodiscard]] RoundPlan plan_rounds(const Circuit& circuit, const FidelityDrivenConfig& config);

[[nodiscard]] SimulationResult simulate_fidelity_driven(Package& package, const Circuit& circuit,
                                                        const FidelityDrivenConfig& config);

}  // namespace approxdd

#endif  // APPROXDD_STRATEGIES_HPP
