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

#ifndef APPROXDD_APPROXIMATION_HPP
#define APPROXDD_APPROXIMATION_HPP

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "approxdd/package.hpp"

namespace approxdd {

/// Norm contribution of every reachable node: the summed squared magnitude of
/// all amplitudes whose paths pass through it.
class ContributionMap {
 public:
  struct Entry {
    NodeId node = kTerminal;
    int level = kTerminalLevel;
    double contribution = 0.0;
  };

  ContributionMap() = default;
  explicit ContributionMap(std::vector<Entry> entries);

  /// Entries in reachable_nodes() order: root first, then by level and id.
  [[nodiscard]] const std::vector<Entry>& entries() const noexcept { return entries_; }
  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] bool contains(NodeId node) const { return index_.contains(node); }
  /// Throws InputError for nodes that are not in the map.
  [[nodiscard]] double at(NodeId node) const;
  /// Sum of contributions per level, indexed by level.
  [[nodiscard]] std::vector<double> level_sums() const;

 private:
  std::vector<Entry> entries_;
  std::unordered_map<NodeId, std::size_t> index_;
};

struct RoundOutcome {
  StateDD state;
  double removed_contribution = 0.0;
  double round_fidelity = 1.0;
  std::size_t nodes_removed = 0;
  std::size_t nodes_before = 0;
  std::size_t nodes_after = 0;
};

/// Prefix mass times subtree mass for each reachable node.
[[nodiscard]] ContributionMap node_contributions(const StateDD& state);

/// Replaces every edge into a victim by the zero edge, rebuilds the diagram
/// and rescales it to unit norm. The round fidelity is the exact retained
/// squared norm. `nodes_removed` counts the victims.
///
/// Throws InputError if a victim is the root or not reachable, and
/// TruncationError if nothing of the state survives.
[[nodiscard]] RoundOutcome remove_nodes(const StateDD& state, std::span<const NodeId> victims);

/// Greedy removal in ascending contribution order (ties: lower level, then
/// lower id). A candidate is charged the mass of its paths that avoid every
/// node accepted so far and is taken while the total stays within
/// 1 - f_round. Candidates whose paths are all gone already are skipped.
[[nodiscard]] std::vector<NodeId> select_victims(const StateDD& state, double f_round);

/// select_victims followed by remove_nodes. f_round = 1 returns the input.
[[nodiscard]] RoundOutcome approximate_round(const StateDD& state, double f_round);

}  // namespace approxdd

#endif  // APPROXDD_APPROXIMATION_HPP
