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

#include "approxdd/approximation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_set>
#include <utility>

#include "approxdd/errors.hpp"
#include "approxdd/state.hpp"

namespace approxdd {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);
constexpr double kBudgetSlack = 1e-12;

// Reachable nodes as an indexed graph with squared edge magnitudes.
struct Graph {
  struct Arc {
    std::size_t to = kNone;  // kNone: terminal
    double mass = 0.0;
  };

  std::vector<NodeId> ids;
  std::vector<int> levels;
  std::vector<std::array<Arc, 2>> children;
  std::vector<std::vector<Arc>> parents;
  std::unordered_map<NodeId, std::size_t> index;
  double root_mass = 0.0;

  explicit Graph(const StateDD& state) {
    const Package& pkg = state.package();
    ids = reachable_nodes(state);
    index.reserve(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      index.emplace(ids[i], i);
    }
    levels.resize(ids.size());
    children.resize(ids.size());
    parents.resize(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const VectorNode& node = pkg.vector_node(ids[i]);
      levels[i] = node.level;
      for (std::size_t k = 0; k < 2; ++k) {
        const Edge& e = node.succ[k];
        Arc& arc = children[i][k];
        arc.mass = std::norm(e.weight);
        if (e.is_zero()) {
          arc.mass = 0.0;
        } else if (!e.is_terminal()) {
          arc.to = index.at(e.node);
          parents[arc.to].push_back({i, arc.mass});
        }
      }
    }
    root_mass = std::norm(state.root().weight);
  }

  [[nodiscard]] std::size_t size() const noexcept { return ids.size(); }

  // Sum over root-to-node paths of the squared prefix products.
  [[nodiscard]] std::vector<double> prefix_mass() const {
    std::vector<double> prefix(size(), 0.0);
    if (size() == 0) {
      return prefix;
    }
    prefix[0] = root_mass;
    for (std::size_t i = 0; i < size(); ++i) {
      for (const Arc& arc : children[i]) {
        if (arc.to != kNone) {
          prefix[arc.to] += prefix[i] * arc.mass;
        }
      }
    }
    return prefix;
  }

  // Squared norm of the vector each node represents.
  [[nodiscard]] std::vector<double> subtree_mass() const {
    std::vector<double> subtree(size(), 0.0);
    for (std::size_t i = size(); i-- > 0;) {
      double total = 0.0;
      for (const Arc& arc : children[i]) {
        total += arc.mass * (arc.to == kNone ? 1.0 : subtree[arc.to]);
      }
      subtree[i] = total;
    }
    return subtree;
  }
};

Edge scale(const Edge& e, Complex factor) {
  const Complex w = e.weight * factor;
  if (e.is_zero() || approximately_zero(w)) {
    return Edge::zero();
  }
  return {e.node, w};
}

class Rebuilder {
 public:
  Rebuilder(Package& pkg, const std::unordered_set<NodeId>& victims)
      : pkg_(pkg), victims_(victims) {}

  Edge rebuild(NodeId id) {
    if (id == kTerminal) {
      return Edge::one();
    }
    if (victims_.contains(id)) {
      return Edge::zero();
    }
    if (const auto it = memo_.find(id); it != memo_.end()) {
      return it->second;
    }
    const VectorNode node = pkg_.vector_node(id);
    std::array<Edge, 2> succ{};
    for (std::size_t k = 0; k < 2; ++k) {
      if (!node.succ[k].is_zero()) {
        succ[k] = scale(rebuild(node.succ[k].node), node.succ[k].weight);
      }
    }
    const Edge result = pkg_.make_vector_node(node.level, succ);
    memo_.emplace(id, result);
    return result;
  }

 private:
  Package& pkg_;
  const std::unordered_set<NodeId>& victims_;
  std::unordered_map<NodeId, Edge> memo_;
};

}  // namespace

ContributionMap::ContributionMap(std::vector<Entry> entries) : entries_(std::move(entries)) {
  index_.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    index_.emplace(entries_[i].node, i);
  }
}

double ContributionMap::at(NodeId node) const {
  const auto it = index_.find(node);
  if (it == index_.end()) {
    throw InputError("node " + std::to_string(node) + " is not in the contribution map");
  }
  return entries_[it->second].contribution;
}

std::vector<double> ContributionMap::level_sums() const {
  int top = -1;
  for (const Entry& e : entries_) {
    top = std::max(top, e.level);
  }
  std::vector<double> sums(static_cast<std::size_t>(top + 1), 0.0);
  for (const Entry& e : entries_) {
    sums[static_cast<std::size_t>(e.level)] += e.contribution;
  }
  return sums;
}

ContributionMap node_contributions(const StateDD& state) {
  const Graph graph(state);
  const std::vector<double> prefix = graph.prefix_mass();
  const std::vector<double> subtree = graph.subtree_mass();
  std::vector<ContributionMap::Entry> entries(graph.size());
  for (std::size_t i = 0; i < graph.size(); ++i) {
    entries[i] = {graph.ids[i], graph.levels[i], prefix[i] * subtree[i]};
  }
  return ContributionMap(std::move(entries));
}

RoundOutcome remove_nodes(const StateDD& state, std::span<const NodeId> victims) {
  RoundOutcome outcome;
  outcome.nodes_before = node_count(state);
  if (victims.empty()) {
    outcome.state = state;
    outcome.nodes_after = outcome.nodes_before;
    return outcome;
  }
  const std::vector<NodeId> reachable = reachable_nodes(state);
  const std::unordered_set<NodeId> reachable_set(reachable.begin(), reachable.end());
  const std::unordered_set<NodeId> victim_set(victims.begin(), victims.end());
  for (NodeId v : victim_set) {
    if (v == state.root().node) {
      throw InputError("the root node cannot be removed");
    }
    if (!reachable_set.contains(v)) {
      throw InputError("node " + std::to_string(v) + " is not reachable from the root");
    }
  }

  Package& pkg = state.package();
  const double before = squared_norm(state);
  Rebuilder rebuilder(pkg, victim_set);
  const Edge truncated = scale(rebuilder.rebuild(state.root().node), state.root().weight);
  if (truncated.is_zero()) {
    throw TruncationError("removing the selected nodes leaves a zero vector");
  }
  const StateDD unnormalized(pkg, truncated, state.num_qubits());
  const double after = squared_norm(unnormalized);
  if (!(after > 0.0)) {
    throw TruncationError("removing the selected nodes leaves a zero vector");
  }
  outcome.state = StateDD(pkg, Edge{truncated.node, truncated.weight / std::sqrt(after)},
                          state.num_qubits());
  outcome.round_fidelity = std::min(1.0, after / before);
  outcome.removed_contribution = 1.0 - outcome.round_fidelity;
  outcome.nodes_removed = victim_set.size();
  outcome.nodes_after = node_count(outcome.state);
  return outcome;
}

std::vector<NodeId> select_victims(const StateDD& state, double f_round) {
  if (!(f_round > 0.0 && f_round <= 1.0)) {
    throw InputError("f_round must lie in (0, 1], got " + std::to_string(f_round));
  }
  std::vector<NodeId> victims;
  if (f_round == 1.0) {
    return victims;
  }
  const Graph graph(state);
  if (graph.size() <= 1) {
    return victims;
  }
  // Masses restricted to paths that avoid every accepted victim.
  std::vector<double> prefix = graph.prefix_mass();
  std::vector<double> subtree = graph.subtree_mass();
  const double total = prefix[0] * subtree[0];
  const double budget = (1.0 - f_round) * total + kBudgetSlack;

  std::vector<std::size_t> order(graph.size() - 1);
  std::iota(order.begin(), order.end(), std::size_t{1});
  std::vector<double> contribution(graph.size());
  for (std::size_t i = 0; i < graph.size(); ++i) {
    contribution[i] = prefix[i] * subtree[i];
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (contribution[a] != contribution[b]) {
      return contribution[a] < contribution[b];
    }
    if (graph.levels[a] != graph.levels[b]) {
      return graph.levels[a] < graph.levels[b];
    }
    return graph.ids[a] < graph.ids[b];
  });

  std::vector<double> delta(graph.size(), 0.0);
  std::vector<bool> queued(graph.size(), false);
  std::vector<bool> removed_node(graph.size(), false);
  const auto propagate_up = [&](std::size_t v, double lost) {
    // Ancestors lose the removed subtree mass; process lower levels first.
    using Item = std::pair<int, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> work;
    for (const Graph::Arc& p : graph.parents[v]) {
      if (removed_node[p.to]) {
        continue;
      }
      delta[p.to] += p.mass * lost;
      if (!queued[p.to]) {
        queued[p.to] = true;
        work.emplace(graph.levels[p.to], p.to);
      }
    }
    while (!work.empty()) {
      const std::size_t u = work.top().second;
      work.pop();
      queued[u] = false;
      const double d = std::exchange(delta[u], 0.0);
      subtree[u] = std::max(0.0, subtree[u] - d);
      for (const Graph::Arc& p : graph.parents[u]) {
        if (removed_node[p.to]) {
          continue;
        }
        delta[p.to] += p.mass * d;
        if (!queued[p.to]) {
          queued[p.to] = true;
          work.emplace(graph.levels[p.to], p.to);
        }
      }
    }
  };
  const auto propagate_down = [&](std::size_t v, double lost) {
    // Descendants lose the prefix mass arriving through v; higher levels first.
    using Item = std::pair<int, std::size_t>;
    std::priority_queue<Item> work;
    for (const Graph::Arc& c : graph.children[v]) {
      if (c.to == kNone || removed_node[c.to]) {
        continue;
      }
      delta[c.to] += c.mass * lost;
      if (!queued[c.to]) {
        queued[c.to] = true;
        work.emplace(graph.levels[c.to], c.to);
      }
    }
    while (!work.empty()) {
      const std::size_t u = work.top().second;
      work.pop();
      queued[u] = false;
      const double d = std::exchange(delta[u], 0.0);
      prefix[u] = std::max(0.0, prefix[u] - d);
      for (const Graph::Arc& c : graph.children[u]) {
        if (c.to == kNone || removed_node[c.to]) {
          continue;
        }
        delta[c.to] += c.mass * d;
        if (!queued[c.to]) {
          queued[c.to] = true;
          work.emplace(graph.levels[c.to], c.to);
        }
      }
    }
  };

  double removed = 0.0;
  for (const std::size_t v : order) {
    const double cost = prefix[v] * subtree[v];
    if (cost <= 0.0 || removed + cost > budget) {
      continue;
    }
    removed += cost;
    victims.push_back(graph.ids[v]);
    removed_node[v] = true;
    const double lost_subtree = subtree[v];
    const double lost_prefix = prefix[v];
    prefix[v] = 0.0;
    subtree[v] = 0.0;
    propagate_up(v, lost_subtree);
    propagate_down(v, lost_prefix);
  }
  return victims;
}

RoundOutcome approximate_round(const StateDD& state, double f_round) {
  const std::vector<NodeId> victims = select_victims(state, f_round);
  return remove_nodes(state, victims);
}

}  // namespace approxdd
