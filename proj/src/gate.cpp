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

#include "approxdd/gate.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <utility>

#include "approxdd/errors.hpp"

namespace approxdd {
namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 20> kNames{{
    {GateKind::kH, "h"},        {GateKind::kX, "x"},
    {GateKind::kY, "y"},        {GateKind::kZ, "z"},
    {GateKind::kS, "s"},        {GateKind::kSdg, "sdg"},
    {GateKind::kT, "t"},        {GateKind::kTdg, "tdg"},
    {GateKind::kRX, "rx"},      {GateKind::kRY, "ry"},
    {GateKind::kRZ, "rz"},      {GateKind::kPhase, "p"},
    {GateKind::kSqrtX, "sx"},   {GateKind::kSqrtY, "sy"},
    {GateKind::kCX, "cx"},      {GateKind::kCZ, "cz"},
    {GateKind::kCPhase, "cp"},  {GateKind::kCCX, "ccx"},
    {GateKind::kSwap, "swap"},  {GateKind::kPermutation, "perm"},
}};

struct Arity {
  std::size_t targets;
  std::size_t controls;
};

Arity arity_of(GateKind kind) {
  switch (kind) {
    case GateKind::kCX:
    case GateKind::kCZ:
    case GateKind::kCPhase:
      return {1, 1};
    case GateKind::kCCX:
      return {1, 2};
    case GateKind::kSwap:
      return {2, 0};
    default:
      return {1, 0};
  }
}

}  // namespace

std::string_view gate_name(GateKind kind) noexcept {
  for (const auto& [k, name] : kNames) {
    if (k == kind) {
      return name;
    }
  }
  return "?";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) {
      return k;
    }
  }
  return std::nullopt;
}

bool has_angle(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::kRX:
    case GateKind::kRY:
    case GateKind::kRZ:
    case GateKind::kPhase:
    case GateKind::kCPhase:
      return true;
    default:
      return false;
  }
}

GateSpec GateSpec::single(GateKind kind, Qubit target, double angle) {
  return GateSpec{kind, angle, {target}, {}, {}};
}

GateSpec GateSpec::controlled(GateKind kind, Qubit control, Qubit target,
                              double angle) {
  return GateSpec{kind, angle, {target}, {control}, {}};
}

GateSpec GateSpec::ccx(Qubit control0, Qubit control1, Qubit target) {
  return GateSpec{GateKind::kCCX, 0.0, {target}, {control0, control1}, {}};
}

GateSpec GateSpec::swap(Qubit a, Qubit b) {
  return GateSpec{GateKind::kSwap, 0.0, {a, b}, {}, {}};
}

GateSpec GateSpec::permutation_gate(std::vector<Qubit> targets,
                                    std::vector<std::uint64_t> table,
                                    std::vector<Qubit> controls) {
  return GateSpec{GateKind::kPermutation, 0.0, std::move(targets),
                  std::move(controls), std::move(table)};
}

void validate_gate(const GateSpec& gate, std::size_t num_qubits) {
  const auto fail = [&](const std::string& why) {
    throw InputError("invalid " + std::string(gate_name(gate.kind)) +
                     " gate: " + why);
  };
  if (gate.kind == GateKind::kPermutation) {
    if (gate.targets.empty() || gate.targets.size() > 20) {
      fail("permutation needs between 1 and 20 target qubits");
    }
    const std::uint64_t dim = std::uint64_t{1} << gate.targets.size();
    if (gate.permutation.size() != dim) {
      fail("permutation table has " + std::to_string(gate.permutation.size()) +
           " entries, expected " + std::to_string(dim));
    }
    std::vector<bool> seen(dim, false);
    for (std::uint64_t image : gate.permutation) {
      if (image >= dim || seen[image]) {
        fail("permutation table is not a bijection");
      }
      seen[image] = true;
    }
  } else {
    const Arity arity = arity_of(gate.kind);
    if (gate.targets.size() != arity.targets ||
        gate.controls.size() != arity.controls) {
      fail("expected " + std::to_string(arity.targets) + " target(s) and " +
           std::to_string(arity.controls) + " control(s)");
    }
    if (!gate.permutation.empty()) {
      fail("only permutation gates carry a table");
    }
  }
  std::vector<Qubit> touched = gate.targets;
  touched.insert(touched.end(), gate.controls.begin(), gate.controls.end());
  for (Qubit q : touched) {
    if (q >= num_qubits) {
      fail("qubit " + std::to_string(q) + " out of range for " +
           std::to_string(num_qubits) + " qubits");
    }
  }
  std::sort(touched.begin(), touched.end());
  if (std::adjacent_find(touched.begin(), touched.end()) != touched.end()) {
    fail("targets and controls must be distinct qubits");
  }
}

std::string describe(const GateSpec& gate) {
  std::ostringstream out;
  out << gate_name(gate.kind);
  if (has_angle(gate.kind)) {
    out << '(' << gate.angle << ')';
  }
  const char* sep = " ";
  for (Qubit c : gate.controls) {
    out << sep << "c" << c;
    sep = ",";
  }
  for (Qubit t : gate.targets) {
    out << sep << "q" << t;
    sep = ",";
  }
  return out.str();
}

}  // namespace approxdd
