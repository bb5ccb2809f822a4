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

#ifndef APPROXDD_OPS_HPP
#define APPROXDD_OPS_HPP

#include <cstddef>
#include <vector>

#include "approxdd/gate.hpp"
#include "approxdd/package.hpp"

namespace approxdd {

/// The gate's matrix on the qubits it touches, row-major, local index bit j
/// belonging to targets[j]. Controls are not part of it.
[[nodiscard]] std::vector<Complex> local_matrix(const GateSpec& gate);

/// Matrix diagram of `gate` on `num_qubits` qubits. Controls are built into
/// the structure (identity below a control's |0> branch), so the diagram has
/// at most a handful of nodes per level for the fixed-size gates.
[[nodiscard]] MatrixDD gate_matrix_dd(Package& package, const GateSpec& gate,
                                      std::size_t num_qubits);

[[nodiscard]] StateDD apply(const MatrixDD& matrix, const StateDD& state);

[[nodiscard]] Complex inner_product(const StateDD& a, const StateDD& b);

/// |<a|b>|^2.
[[nodiscard]] double fidelity(const StateDD& a, const StateDD& b);

/// Dense row-major expansion; test helper, limited to 12 qubits.
[[nodiscard]] std::vector<Complex> to_dense_matrix(const MatrixDD& matrix);

}  // namespace approxdd

#endif  // APPROXDD_OPS_HPP
