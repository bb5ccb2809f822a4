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

#include "approxdd/strategies.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

#include "approxdd/approximation.hpp"
#include "approxdd/ops.hpp"
#include "approxdd/state.hpp"

namespace approxdd {
namespace {

constexpr std::size_t kMinCollectThreshold = std::size_t{1} << 16;

// Runs the gates, calling `after_gate(applied, state, stats)` after each one.
class Runner {
 public:
  using Hook = std::function<void(std::size_t, StateDD&, SimStats&)>;

  Runner(Package& pkg, const Circuit& circuit, std::string mode)
      : pkg_(pkg), circuit_(circuit) {
    stats_.mode = std::move(mode);
  }

  SimStats& stats() { return stats_; }

  SimulationResult run(const Hook& after_gate) {
    const auto start = std::chrono::steady_clock::now();
    StateDD state;
    try {
      state = make_basis_state(pkg_, circuit_.num_qubits(), circuit_.initial_state());
      record(0, node_count(state));
      for (std::size_t i = 0; i < circuit_.size(); ++i) {
        {
          const MatrixDD gate = gate_matrix_dd(pkg_, circuit_.ops()[i], circuit_.num_qubits());
          state = apply(gate, state);
        }
        stats_.gates_applied = i + 1;
        record(i + 1, node_count(state));
        if (after_gate) {
          after_gate(i + 1, state, stats_);
        }
        maybe_collect();
      }
    } catch (const ResourceError& e) {
      stats_.wall_time_seconds = elapsed(start);
      throw SimulationAborted(e.what(), stats_);
    }
    stats_.wall_time_seconds = elapsed(start);
    return {std::move(state), std::move(stats_)};
  }

  void record(std::size_t position, std::size_t count) {
    stats_.node_count_trace.emplace_back(position, count);
    stats_.max_dd_size = std::max(stats_.max_dd_size, count);
  }

 private:
  static double elapsed(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }

  void maybe_collect() {
    const std::size_t live = pkg_.live_vector_nodes() + pkg_.live_matrix_nodes();
    if (live > std::max(kMinCollectThreshold, 4 * survivors_)) {
      pkg_.collect_garbage();
      survivors_ = pkg_.live_vector_nodes() + pkg_.live_matrix_nodes();
    }
  }

  Package& pkg_;
  const Circuit& circuit_;
  SimStats stats_;
  std::size_t survivors_ = 0;
};

void run_round(std::size_t position, double f_round, std::size_t threshold, StateDD& state,
               SimStats& stats) {
  RoundOutcome outcome = approximate_round(state, f_round);
  RoundRecord rec;
  rec.position = position;
  rec.nodes_before = outcome.nodes_before;
  rec.nodes_after = outcome.nodes_after;
  rec.nodes_removed = outcome.nodes_removed;
  rec.fidelity = outcome.round_fidelity;
  rec.threshold = threshold;
  stats.rounds.push_back(rec);
  stats.fidelity_lower_bound *= outcome.round_fidelity;
  stats.node_count_trace.emplace_back(position, outcome.nodes_after);
  state = std::move(outcome.state);
}

void check_fraction(double value, const char* name, bool allow_one) {
  if (!(value > 0.0) || value > 1.0 || (!allow_one && value == 1.0)) {
    throw InputError(std::string(name) + " must lie in (0, 1" + (allow_one ? "]" : ")") +
                     ", got " + std::to_string(value));
  }
}

}  // namespace

std::vector<double> SimStats::per_round_fidelities() const {
  std::vector<double> out;
  out.reserve(rounds.size());
  for (const RoundRecord& r : rounds) {
    out.push_back(r.fidelity);
  }
  return out;
}

SimulationResult simulate_exact(Package& package, const Circuit& circuit) {
  Runner runner(package, circuit, "exact");
  return runner.run({});
}

SimulationResult simulate_memory_driven(Package& package, const Circuit& circuit,
                                        const MemoryDrivenConfig& config) {
  if (config.initial_threshold < 1) {
    throw InputError("the memory-driven threshold must be at least 1");
  }
  check_fraction(config.f_round, "f_round", true);
  Runner runner(package, circuit, "memory");
  std::size_t threshold = config.initial_threshold;
  return runner.run([&](std::size_t applied, StateDD& state, SimStats& stats) {
    const std::size_t count = stats.node_count_trace.back().second;
    if (count > threshold) {
      run_round(applied, config.f_round, threshold, state, stats);
      threshold = threshold > (std::size_t{1} << 62) ? threshold : 2 * threshold;
    }
  });
}

RoundPlan plan_rounds(const Circuit& circuit, const FidelityDrivenConfig& config) {
  check_fraction(config.f_final, "f_final", true);
  check_fraction(config.f_round, "f_round", false);
  RoundPlan plan;
  plan.f_round = config.f_round;
  if (config.f_final < 1.0) {
    auto r = static_cast<std::size_t>(
        std::floor(std::log(config.f_final) / std::log(config.f_round) + 1e-9));
    while (r > 0 && std::pow(config.f_round, static_cast<double>(r)) <
                        config.f_final * (1.0 - 1e-12)) {
      --r;
    }
    plan.max_rounds = r;
  }
  const std::size_t gates = circuit.size();
  const std::size_t r = plan.max_rounds;
  if (config.placement == Placement::kEven) {
    for (std::size_t k = 1; k <= r; ++k) {
      const std::size_t pos = (k * gates + r) / (r + 1);
      if (pos == 0 || pos >= gates || (!plan.positions.empty() && plan.positions.back() == pos)) {
        continue;
      }
      plan.positions.push_back(pos);
    }
    return plan;
  }
  std::vector<std::size_t> inside;
  for (std::size_t m : circuit.markers()) {
    if (m > 0 && m < gates) {
      inside.push_back(m);
    }
  }
  if (inside.size() > r) {
    plan.warnings.push_back(std::to_string(inside.size()) + " markers exceed the budget of " +
                            std::to_string(r) + " rounds; using the first " +
                            std::to_string(r));
    inside.resize(r);
  }
  plan.positions = std::move(inside);
  return plan;
}

SimulationResult simulate_fidelity_driven(Package& package, const Circuit& circuit,
                                          const FidelityDrivenConfig& config) {
  const RoundPlan plan = plan_rounds(circuit, config);
  Runner runner(package, circuit, "fidelity");
  runner.stats().warnings = plan.warnings;
  std::size_t next = 0;
  return runner.run([&](std::size_t applied, StateDD& state, SimStats& stats) {
    if (next < plan.positions.size() && plan.positions[next] == applied) {
      ++next;
      run_round(applied, config.f_round, 0, state, stats);
    }
  });
}

}  // namespace approxdd
