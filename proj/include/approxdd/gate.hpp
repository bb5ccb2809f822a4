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

#ifndef APPROXDD_GATE_HPP
#define APPROXDD_GATE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace approxdd {

using Qubit = std::size_t;

enum class GateKind : std::uint8_t {
  kH,
  kX,
  kY,
  kZ,
  kS,
  kSdg,
  kT,
  kTdg,
  kRX,
  kRY,
  kRZ,
  kPhase,
  kSqrtX,
  kSqrtY,
  kCX,
  kCZ,
  kCPhase,
  kCCX,
  kSwap,
  kPermutation,
};

[[nodiscard]] std::string_view gate_name(GateKind kind) noexcept;
[[nodiscard]] std::optional<GateKind> gate_kind_from_name(std::string_view name);

[[nodiscard]] bool has_angle(GateKind kind) noexcept;

/// One circuit operation. Controls are positive (the gate acts when every
/// control qubit is |1>). For kPermutation, `targets[j]` is bit j of the local
/// index and `permutation[x]` is the image of local basis index x.
struct GateSpec {
  GateKind kind = GateKind::kH;
  double angle = 0.0;
  std::vector<Qubit> targets;
  std::vector<Qubit> controls;
  std::vector<std::uint64_t> permutation;

  friend bool operator==(const GateSpec&, const GateSpec&) = default;

  static GateSpec single(GateKind kind, Qubit target, double angle = 0.0);
  static GateSpec controlled(GateKind kind, Qubit control, Qubit target,
                             double angle = 0.0);
  static GateSpec ccx(Qubit control0, Qubit control1, Qubit target);
  static GateSpec swap(Qubit a, Qubit b);
  static GateSpec permutation_gate(std::vector<Qubit> targets,
                                   std::vector<std::uint64_t> table,
                                   std::vector<Qubit> controls = {});
};

/// Throws InputError unless the gate is well-formed on `num_qubits` qubits:
/// arity matches the kind, indices in range, targets and controls disjoint,
/// permutation table a bijection of the right size.
void validate_gate(const GateSpec& gate, std::size_t num_qubits);

[[nodiscard]] std::string describe(const GateSpec& gate);

}  // namespace approxdd

#endif  // APPROXDD_GATE_HPP
