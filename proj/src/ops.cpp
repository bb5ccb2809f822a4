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

#include "approxdd/ops.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <tuple>

#include "approxdd/errors.hpp"

namespace approxdd {
namespace {

using std::numbers::pi;
using std::numbers::sqrt2;

constexpr Complex kI{0.0, 1.0};

std::vector<Complex> one_qubit_matrix(GateKind kind, double angle) {
  const double h = 1.0 / sqrt2;
  switch (kind) {
    case GateKind::kH:
      return {h, h, h, -h};
    case GateKind::kX:
    case GateKind::kCX:
    case GateKind::kCCX:
      return {0, 1, 1, 0};
    case GateKind::kY:
      return {0, -kI, kI, 0};
    case GateKind::kZ:
    case GateKind::kCZ:
      return {1, 0, 0, -1};
    case GateKind::kS:
      return {1, 0, 0, kI};
    case GateKind::kSdg:
      return {1, 0, 0, -kI};
    case GateKind::kT:
      return {1, 0, 0, std::polar(1.0, pi / 4)};
    case GateKind::kTdg:
      return {1, 0, 0, std::polar(1.0, -pi / 4)};
    case GateKind::kRX: {
      const double c = std::cos(angle / 2);
      const double s = std::sin(angle / 2);
      return {c, -kI * s, -kI * s, c};
    }
    case GateKind::kRY: {
      const double c = std::cos(angle / 2);
      const double s = std::sin(angle / 2);
      return {c, -s, s, c};
    }
    case GateKind::kRZ:
      return {std::polar(1.0, -angle / 2), 0, 0, std::polar(1.0, angle / 2)};
    case GateKind::kPhase:
    case GateKind::kCPhase:
      return {1, 0, 0, std::polar(1.0, angle)};
    case GateKind::kSqrtX:
      return {Complex{0.5, 0.5}, Complex{0.5, -0.5}, Complex{0.5, -0.5}, Complex{0.5, 0.5}};
    case GateKind::kSqrtY:
      return {Complex{0.5, 0.5}, Complex{-0.5, -0.5}, Complex{0.5, 0.5}, Complex{0.5, 0.5}};
    default:
      throw InputError("no single-qubit matrix for gate " + std::string(gate_name(kind)));
  }
}

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw InputError(std::string(what) + ": qubit counts differ (" + std::to_string(a) +
                     " vs " + std::to_string(b) + ")");
  }
}

// Builds the matrix diagram level by level from the top. The recursion state
// is the set of target bits fixed so far (as partial local row/column
// indices) and whether every control seen so far sits on its |1> branch.
class GateBuilder {
 public:
  GateBuilder(Package& package, const GateSpec& gate, std::size_t num_qubits)
      : package_(package), gate_(gate), role_(num_qubits, Role{}) {
    for (std::size_t j = 0; j < gate.targets.size(); ++j) {
      role_[gate.targets[j]] = Role{Role::kTarget, j};
    }
    for (Qubit c : gate.controls) {
      role_[c] = Role{Role::kControl, 0};
    }
    if (gate.kind != GateKind::kPermutation) {
      dense_ = local_matrix(gate);
    }
  }

  Edge build(int level, std::uint64_t row, std::uint64_t col, bool active) {
    if (level < 0) {
      const Complex value = active ? entry(row, col) : Complex(row == col ? 1.0 : 0.0);
      return value == Complex{} ? Edge::zero() : Edge{kTerminal, value};
    }
    const auto key = std::make_tuple(level, row, col, active);
    if (auto it = memo_.find(key); it != memo_.end()) {
      return it->second;
    }
    const Role role = role_[static_cast<std::size_t>(level)];
    std::array<Edge, 4> succ{};
    switch (role.kind) {
      case Role::kTarget:
        for (std::uint64_t r = 0; r < 2; ++r) {
          for (std::uint64_t c = 0; c < 2; ++c) {
            succ[2 * r + c] =
                build(level - 1, row | (r << role.bit), col | (c << role.bit), active);
          }
        }
        break;
      case Role::kControl:
        succ[0] = build(level - 1, row, col, false);
        succ[3] = build(level - 1, row, col, active);
        break;
      case Role::kIdle:
        succ[0] = build(level - 1, row, col, active);
        succ[3] = succ[0];
        break;
    }
    const Edge result = package_.make_matrix_node(level, succ);
    memo_.emplace(key, result);
    return result;
  }

 private:
  struct Role {
    enum Kind { kIdle, kTarget, kControl } kind = kIdle;
    std::size_t bit = 0;
  };

  Complex entry(std::uint64_t row, std::uint64_t col) const {
    if (gate_.kind == GateKind::kPermutation) {
      return gate_.permutation[col] == row ? Complex{1.0, 0.0} : Complex{};
    }
    const std::uint64_t dim = std::uint64_t{1} << gate_.targets.size();
    return dense_[row * dim + col];
  }

  Package& package_;
  const GateSpec& gate_;
  std::vector<Role> role_;
  std::vector<Complex> dense_;
  std::map<std::tuple<int, std::uint64_t, std::uint64_t, bool>, Edge> memo_;
};

}  // namespace

std::vector<Complex> local_matrix(const GateSpec& gate) {
  switch (gate.kind) {
    case GateKind::kSwap:
      return {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1};
    case GateKind::kPermutation: {
      const std::size_t dim = gate.permutation.size();
      std::vector<Complex> m(dim * dim);
      for (std::size_t col = 0; col < dim; ++col) {
        m[gate.permutation[col] * dim + col] = 1.0;
      }
      return m;
    }
    default:
      return one_qubit_matrix(gate.kind, gate.angle);
  }
}

MatrixDD gate_matrix_dd(Package& package, const GateSpec& gate, std::size_t num_qubits) {
  if (num_qubits == 0) {
    throw InputError("gate_matrix_dd needs at least one qubit");
  }
  validate_gate(gate, num_qubits);
  GateBuilder builder(package, gate, num_qubits);
  const Edge root = builder.build(static_cast<int>(num_qubits) - 1, 0, 0, true);
  return MatrixDD(package, root, num_qubits);
}

StateDD apply(const MatrixDD& matrix, const StateDD& state) {
  require_same_size(matrix.num_qubits(), state.num_qubits(), "apply");
  if (&matrix.package() != &state.package()) {
    throw InputError("apply: operands belong to different packages");
  }
  Package& package = state.package();
  return StateDD(package, package.multiply(matrix.root(), state.root()),
                 state.num_qubits());
}

Complex inner_product(const StateDD& a, const StateDD& b) {
  require_same_size(a.num_qubits(), b.num_qubits(), "inner_product");
  if (&a.package() != &b.package()) {
    throw InputError("inner_product: operands belong to different packages");
  }
  return a.package().inner_product(a.root(), b.root());
}

double fidelity(const StateDD& a, const StateDD& b) {
  return std::norm(inner_product(a, b));
}

std::vector<Complex> to_dense_matrix(const MatrixDD& matrix) {
  const std::size_t n = matrix.num_qubits();
  if (n > 12) {
    throw CapacityError("to_dense_matrix is limited to 12 qubits");
  }
  const std::size_t dim = std::size_t{1} << n;
  std::vector<Complex> dense(dim * dim);
  const Package& package = matrix.package();
  auto fill = [&](auto&& self, const Edge& e, Complex prefix, std::size_t row,
                  std::size_t col) -> void {
    if (e.is_zero()) {
      return;
    }
    const Complex value = prefix * e.weight;
    if (e.is_terminal()) {
      dense[row * dim + col] = value;
      return;
    }
    const MatrixNode& node = package.matrix_node(e.node);
    const std::size_t bit = std::size_t{1} << node.level;
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) {
        self(self, node.succ[2 * r + c], value, row | (r * bit), col | (c * bit));
      }
    }
  };
  fill(fill, matrix.root(), Complex{1.0, 0.0}, 0, 0);
  return dense;
}

}  // namespace approxdd
