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

#ifndef APPROXDD_QASM_HPP
#define APPROXDD_QASM_HPP

#include <string>
#include <string_view>
#include <vector>

#include "approxdd/circuit.hpp"

namespace approxdd {

/// Parses the OpenQASM 2.0 subset: a single qreg; gates h x y z s sdg t tdg
/// rx ry rz u1 p sx sy cx cz cp cu1 ccx swap; barrier; `//` comments. The
/// OPENQASM header and include lines are optional. creg and measure lines are
/// skipped, with a message appended to `warnings` when it is non-null.
/// Single-qubit gates accept a whole register and are broadcast over it.
///
/// Parameters are arithmetic over decimal literals and `pi` (+ - * / ^,
/// unary minus, parentheses).
///
/// Throws ParseError carrying the 1-based line and column of the problem.
[[nodiscard]] Circuit parse_qasm(std::string_view text,
                                 std::vector<std::string>* warnings = nullptr);

/// Serializes to the same subset. A non-zero initial state becomes leading x
/// gates. Permutation gates have no QASM form and raise InputError.
[[nodiscard]] std::string to_qasm(const Circuit& circuit);

}  // namespace approxdd

#endif  // APPROXDD_QASM_HPP
