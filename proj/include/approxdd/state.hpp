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

#ifndef APPROXDD_STATE_HPP
#define APPROXDD_STATE_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "approxdd/package.hpp"

namespace approxdd {

/// Bitstrings are written b_{n-1} ... b_0: the first character is the most
/// significant qubit, and the dense index of "011" is 3.

/// Largest qubit count to_dense() will expand.
inline constexpr std::size_t kMaxDenseQubits = 20;

[[nodiscard]] StateDD make_basis_state(Package& package, std::size_t num_qubits,
                                       std::string_view bits);

/// Product of the edge weights along the path selected by `bits`.
[[nodiscard]] Complex lookup_amplitude(const StateDD& state, std::string_view bits);

/// Builds the canonical diagram of a unit vector of length 2^n.
[[nodiscard]] StateDD from_dense(Package& package, std::span<const Complex> amplitudes);

[[nodiscard]] std::vector<Complex> to_dense(const StateDD& state);

/// Distinct non-terminal nodes reachable from the root.
[[nodiscard]] std::size_t node_count(const StateDD& state);

/// Reachable non-terminal nodes ordered by level, root first; nodes on the
/// same level are in ascending id order.
[[nodiscard]] std::vector<NodeId> reachable_nodes(const StateDD& state);

[[nodiscard]] double squared_norm(const StateDD& state);

}  // namespace approxdd

#endif  // APPROXDD_STATE_HPP
