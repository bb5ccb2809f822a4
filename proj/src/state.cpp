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

#include "approxdd/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <unordered_set>

#include "approxdd/errors.hpp"

namespace approxdd {
namespace {

void check_bits(std::string_view bits, std::size_t num_qubits) {
  if (bits.size() != num_qubits) {
    throw InputError("bitstring '" + std::string(bits) + "' has length " +
                     std::to_string(bits.size()) + ", expected " +
                     std::to_string(num_qubits));
  }
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw InputError("bitstring '" + std::string(bits) + "' may only contain 0 and 1");
    }
  }
}

// Bit of qubit `level` in a b_{n-1}..b_0 string.
bool bit_at(std::string_view bits, int level) {
  return bits[bits.size() - 1 - static_cast<std::size_t>(level)] == '1';
}

}  // namespace

StateDD make_basis_state(Package& package, std::size_t num_qubits, std::string_view bits) {
  if (num_qubits == 0) {
    throw InputError("a state needs at least one qubit");
  }
  check_bits(bits, num_qubits);
  Edge edge = Edge::one();
  for (int level = 0; level < static_cast<int>(num_qubits); ++level) {
    std::array<Edge, 2> succ{Edge::zero(), Edge::zero()};
    succ[bit_at(bits, level) ? 1 : 0] = edge;
    edge = package.make_vector_node(level, succ);
  }
  return StateDD(package, edge, num_qubits);
}

Complex lookup_amplitude(const StateDD& state, std::string_view bits) {
  check_bits(bits, state.num_qubits());
  const Package& package = state.package();
  Edge edge = state.root();
  Complex amplitude = edge.weight;
  while (!edge.is_zero() && !edge.is_terminal()) {
    const VectorNode& node = package.vector_node(edge.node);
    edge = node.succ[bit_at(bits, node.level) ? 1 : 0];
    amplitude *= edge.weight;
  }
  return edge.is_zero() ? Complex{} : amplitude;
}

StateDD from_dense(Package& package, std::span<const Complex> amplitudes) {
  const std::size_t size = amplitudes.size();
  if (size < 2 || !std::has_single_bit(size)) {
    throw InputError("state vector length " + std::to_string(size) +
                     " is not a power of two >= 2");
  }
  double norm = 0.0;
  for (const Complex& a : amplitudes) {
    norm += std::norm(a);
  }
  if (std::abs(std::sqrt(norm) - 1.0) > 1e-10) {
    throw InputError("state vector is not normalized (norm " +
                     std::to_string(std::sqrt(norm)) + ")");
  }
  const auto num_qubits = static_cast<std::size_t>(std::countr_zero(size));
  auto build = [&](auto&& self, int level, std::size_t offset) -> Edge {
    if (level < 0) {
      const Complex a = amplitudes[offset];
      return approximately_zero(a) ? Edge::zero() : Edge{kTerminal, a};
    }
    const std::size_t half = std::size_t{1} << level;
    const Edge low = self(self, level - 1, offset);
    const Edge high = self(self, level - 1, offset + half);
    return package.make_vector_node(level, {low, high});
  };
  return StateDD(package, build(build, static_cast<int>(num_qubits) - 1, 0), num_qubits);
}

std::vector<Complex> to_dense(const StateDD& state) {
  const std::size_t n = state.num_qubits();
  if (n > kMaxDenseQubits) {
    throw CapacityError("to_dense is limited to " + std::to_string(kMaxDenseQubits) +
                        " qubits, state has " + std::to_string(n));
  }
  std::vector<Complex> dense(std::size_t{1} << n);
  const Package& package = state.package();
  auto fill = [&](auto&& self, const Edge& edge, Complex prefix, std::size_t index) -> void {
    if (edge.is_zero()) {
      return;
    }
    const Complex amplitude = prefix * edge.weight;
    if (edge.is_terminal()) {
      dense[index] = amplitude;
      return;
    }
    const VectorNode& node = package.vector_node(edge.node);
    const std::size_t high_bit = std::size_t{1} << node.level;
    self(self, node.succ[0], amplitude, index);
    self(self, node.succ[1], amplitude, index | high_bit);
  };
  fill(fill, state.root(), Complex{1.0, 0.0}, 0);
  return dense;
}

std::vector<NodeId> reachable_nodes(const StateDD& state) {
  const Package& package = state.package();
  std::vector<NodeId> order;
  std::unordered_set<NodeId> seen;
  std::vector<NodeId> stack;
  if (!state.root().is_zero() && !state.root().is_terminal()) {
    stack.push_back(state.root().node);
    seen.insert(state.root().node);
  }
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    order.push_back(id);
    for (const Edge& e : package.vector_node(id).succ) {
      if (!e.is_zero() && !e.is_terminal() && seen.insert(e.node).second) {
        stack.push_back(e.node);
      }
    }
  }
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    const int la = package.vector_node(a).level;
    const int lb = package.vector_node(b).level;
    return la != lb ? la > lb : a < b;
  });
  return order;
}

std::size_t node_count(const StateDD& state) {
  const Package& package = state.package();
  std::unordered_set<NodeId> seen;
  std::vector<NodeId> stack;
  if (!state.root().is_zero() && !state.root().is_terminal()) {
    stack.push_back(state.root().node);
    seen.insert(state.root().node);
  }
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    for (const Edge& e : package.vector_node(id).succ) {
      if (!e.is_zero() && !e.is_terminal() && seen.insert(e.node).second) {
        stack.push_back(e.node);
      }
    }
  }
  return seen.size();
}

double squared_norm(const StateDD& state) {
  return state.package().squared_norm(state.root());
}

}  // namespace approxdd
