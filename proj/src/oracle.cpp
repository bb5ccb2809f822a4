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

#include "approxdd/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>

#include "approxdd/errors.hpp"

namespace approxdd {
namespace {

using Mat2 = std::array<Complex, 4>;  // row-major

constexpr Complex kI{0.0, 1.0};

// Single-qubit matrices built from Pauli expansions and phases.
Mat2 rotation(double theta, const Mat2& pauli) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return {c - kI * s * pauli[0], -kI * s * pauli[1], -kI * s * pauli[2], c - kI * s * pauli[3]};
}

Mat2 phase(double theta) { return {1.0, 0.0, 0.0, std::polar(1.0, theta)}; }

Mat2 times(Complex f, const Mat2& m) { return {f * m[0], f * m[1], f * m[2], f * m[3]}; }

Mat2 oracle_matrix(const GateSpec& gate) {
  using std::numbers::pi;
  static const Mat2 kPauliX{0.0, 1.0, 1.0, 0.0};
  static const Mat2 kPauliY{0.0, -kI, kI, 0.0};
  static const Mat2 kPauliZ{1.0, 0.0, 0.0, -1.0};
  const double r = 1.0 / std::sqrt(2.0);
  switch (gate.kind) {
    case GateKind::kH:
      return {r, r, r, -r};
    case GateKind::kX:
    case GateKind::kCX:
    case GateKind::kCCX:
      return kPauliX;
    case GateKind::kY:
      return kPauliY;
    case GateKind::kZ:
    case GateKind::kCZ:
      return kPauliZ;
    case GateKind::kS:
      return phase(pi / 2);
    case GateKind::kSdg:
      return phase(-pi / 2);
    case GateKind::kT:
      return phase(pi / 4);
    case GateKind::kTdg:
      return phase(-pi / 4);
    case GateKind::kRX:
      return rotation(gate.angle, kPauliX);
    case GateKind::kRY:
      return rotation(gate.angle, kPauliY);
    case GateKind::kRZ:
      return rotation(gate.angle, kPauliZ);
    case GateKind::kPhase:
    case GateKind::kCPhase:
      return phase(gate.angle);
    case GateKind::kSqrtX:
      return times(std::polar(1.0, pi / 4), rotation(pi / 2, kPauliX));
    case GateKind::kSqrtY:
      return times(std::polar(1.0, pi / 4), rotation(pi / 2, kPauliY));
    case GateKind::kSwap:
    case GateKind::kPermutation:
      break;
  }
  throw InputError("no 2x2 matrix for " + std::string(gate_name(gate.kind)));
}

std::size_t qubit_count(std::size_t length) {
  if (length == 0 || !std::has_single_bit(length)) {
    throw InputError("dense state length " + std::to_string(length) + " is not a power of two");
  }
  return static_cast<std::size_t>(std::countr_zero(length));
}

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;

// Moduli stay below 2^32, so the product of two residues fits.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return ((a % m) * (b % m)) % m;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  for (; exp > 0; exp >>= 1U) {
    if (exp & 1U) {
      result = mulmod(result, base, m);
    }
    base = mulmod(base, base, m);
  }
  return result;
}

}  // namespace

DenseState dense_basis_state(std::size_t num_qubits, std::string_view bits) {
  if (num_qubits == 0 || num_qubits > kMaxOracleQubits) {
    throw CapacityError("the dense oracle supports 1 to " + std::to_string(kMaxOracleQubits) +
                        " qubits, got " + std::to_string(num_qubits));
  }
  if (bits.size() != num_qubits || bits.find_first_not_of("01") != std::string_view::npos) {
    throw InputError("'" + std::string(bits) + "' is not a " + std::to_string(num_qubits) +
                     "-bit string");
  }
  std::size_t index = 0;
  for (char b : bits) {
    index = (index << 1U) | static_cast<std::size_t>(b == '1');
  }
  DenseState state(std::size_t{1} << num_qubits);
  state[index] = 1.0;
  return state;
}

void dense_apply(DenseState& state, const GateSpec& gate) {
  const std::size_t n = qubit_count(state.size());
  validate_gate(gate, n);
  std::size_t control_mask = 0;
  for (Qubit c : gate.controls) {
    control_mask |= std::size_t{1} << c;
  }
  const auto active = [control_mask](std::size_t i) {
    return (i & control_mask) == control_mask;
  };

  if (gate.kind == GateKind::kSwap) {
    const std::size_t a = std::size_t{1} << gate.targets[0];
    const std::size_t b = std::size_t{1} << gate.targets[1];
    for (std::size_t i = 0; i < state.size(); ++i) {
      if ((i & a) != 0 && (i & b) == 0 && active(i)) {
        std::swap(state[i], state[(i & ~a) | b]);
      }
    }
    return;
  }

  if (gate.kind == GateKind::kPermutation) {
    std::size_t target_mask = 0;
    for (Qubit t : gate.targets) {
      target_mask |= std::size_t{1} << t;
    }
    DenseState out(state.size());
    for (std::size_t i = 0; i < state.size(); ++i) {
      if (!active(i)) {
        out[i] += state[i];
        continue;
      }
      std::uint64_t local = 0;
      for (std::size_t j = 0; j < gate.targets.size(); ++j) {
        local |= static_cast<std::uint64_t>((i >> gate.targets[j]) & 1U) << j;
      }
      const std::uint64_t image = gate.permutation[local];
      std::size_t dest = i & ~target_mask;
      for (std::size_t j = 0; j < gate.targets.size(); ++j) {
        dest |= static_cast<std::size_t>((image >> j) & 1U) << gate.targets[j];
      }
      out[dest] += state[i];
    }
    state = std::move(out);
    return;
  }

  const Mat2 u = oracle_matrix(gate);
  const std::size_t t = std::size_t{1} << gate.targets[0];
  for (std::size_t i = 0; i < state.size(); ++i) {
    if ((i & t) != 0 || !active(i)) {
      continue;
    }
    const Complex a = state[i];
    const Complex b = state[i | t];
    state[i] = u[0] * a + u[1] * b;
    state[i | t] = u[2] * a + u[3] * b;
  }
}

void dense_run(DenseState& state, const Circuit& circuit) {
  if (state.size() != (std::size_t{1} << circuit.num_qubits())) {
    throw InputError("state length does not match the circuit width");
  }
  for (const GateSpec& gate : circuit.ops()) {
    dense_apply(state, gate);
  }
}

DenseState dense_simulate(const Circuit& circuit) {
  DenseState state = dense_basis_state(circuit.num_qubits(), circuit.initial_state());
  dense_run(state, circuit);
  return state;
}

DenseState dense_truncate(std::span<const Complex> state, std::span<const std::size_t> kept) {
  DenseState out(state.size());
  for (std::size_t i : kept) {
    if (i >= state.size()) {
      throw InputError("kept index " + std::to_string(i) + " is out of range");
    }
    out[i] = state[i];
  }
  const double norm2 = dense_squared_norm(out);
  if (!(norm2 > 0.0)) {
    throw TruncationError("the truncation removes the whole state");
  }
  // A projection of an already normalized vector onto its support is left
  // untouched, so truncating twice is exact.
  if (std::abs(norm2 - 1.0) > 4.0 * std::numeric_limits<double>::epsilon()) {
    const double scale = 1.0 / std::sqrt(norm2);
    for (Complex& a : out) {
      a *= scale;
    }
  }
  return out;
}

Complex dense_inner(std::span<const Complex> v, std::span<const Complex> w) {
  if (v.size() != w.size()) {
    throw InputError("dense states have different lengths: " + std::to_string(v.size()) +
                     " and " + std::to_string(w.size()));
  }
  Complex sum{};
  for (std::size_t i = 0; i < v.size(); ++i) {
    sum += std::conj(v[i]) * w[i];
  }
  return sum;
}

double dense_fidelity(std::span<const Complex> v, std::span<const Complex> w) {
  return std::norm(dense_inner(v, w));
}

double dense_squared_norm(std::span<const Complex> v) {
  double sum = 0.0;
  for (const Complex& a : v) {
    sum += std::norm(a);
  }
  return sum;
}

DenseState random_dense_state(std::size_t num_qubits, std::uint64_t seed) {
  if (num_qubits == 0 || num_qubits > kMaxOracleQubits) {
    throw CapacityError("random states support 1 to " + std::to_string(kMaxOracleQubits) +
                        " qubits");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  DenseState state(std::size_t{1} << num_qubits);
  for (Complex& a : state) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    a = {re, im};
  }
  const double scale = 1.0 / std::sqrt(dense_squared_norm(state));
  for (Complex& a : state) {
    a *= scale;
  }
  return state;
}

ContributionMap path_contributions(std::span<const Complex> amplitudes, const StateDD& dd) {
  const std::size_t n = dd.num_qubits();
  if (n > kMaxPathQubits) {
    throw CapacityError("path enumeration supports at most " + std::to_string(kMaxPathQubits) +
                        " qubits");
  }
  if (amplitudes.size() != (std::size_t{1} << n)) {
    throw InputError("amplitude vector does not match the diagram width");
  }
  const Package& pkg = dd.package();
  std::unordered_map<NodeId, double> sums;
  std::unordered_map<NodeId, int> levels;
  std::vector<NodeId> first_seen;
  for (std::size_t index = 0; index < amplitudes.size(); ++index) {
    const double mass = std::norm(amplitudes[index]);
    Edge e = dd.root();
    while (!e.is_zero() && !e.is_terminal()) {
      const VectorNode& node = pkg.vector_node(e.node);
      if (levels.emplace(e.node, node.level).second) {
        first_seen.push_back(e.node);
      }
      sums[e.node] += mass;
      e = node.succ[(index >> static_cast<std::size_t>(node.level)) & 1U];
    }
  }
  std::vector<ContributionMap::Entry> entries;
  entries.reserve(first_seen.size());
  for (NodeId id : first_seen) {
    entries.push_back({id, levels[id], sums[id]});
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return a.level != b.level ? a.level > b.level : a.node < b.node;
  });
  return ContributionMap(std::move(entries));
}

std::vector<double> counting_distribution(std::span<const Complex> state,
                                          std::size_t work_qubits) {
  const std::size_t n = qubit_count(state.size());
  if (work_qubits >= n) {
    throw InputError("the work register must leave at least one counting qubit");
  }
  std::vector<double> dist(std::size_t{1} << (n - work_qubits), 0.0);
  for (std::size_t i = 0; i < state.size(); ++i) {
    dist[i >> work_qubits] += std::norm(state[i]);
  }
  return dist;
}

std::uint64_t classical_order(std::uint64_t base, std::uint64_t modulus) {
  if (modulus < 2 || modulus > kMaxModulus || std::gcd(base, modulus) != 1) {
    throw InputError("order is undefined unless gcd(base, modulus) = 1 and modulus > 1");
  }
  std::uint64_t x = base % modulus;
  for (std::uint64_t r = 1; r <= modulus; ++r) {
    if (x == 1) {
      return r;
    }
    x = mulmod(x, base, modulus);
  }
  throw InputError("no order found");
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> shor_postprocess(
    std::span<const double> distribution, std::uint64_t modulus, std::uint64_t base) {
  const std::size_t m = distribution.size();
  if (m < 2 || !std::has_single_bit(m)) {
    throw InputError("the counting distribution must have a power-of-two length");
  }
  if (modulus < 3 || modulus > kMaxModulus || base < 2 || base >= modulus) {
    throw InputError("need 1 < base < modulus < 2^32");
  }
  if (const std::uint64_t g = std::gcd(base, modulus); g != 1) {
    return std::make_pair(std::min(g, modulus / g), std::max(g, modulus / g));
  }
  const double uniform = 1.0 / static_cast<double>(m);
  std::vector<std::size_t> outcomes;
  for (std::size_t y = 1; y < m; ++y) {
    if (distribution[y] > uniform * (1.0 + 1e-9)) {
      outcomes.push_back(y);
    }
  }
  std::stable_sort(outcomes.begin(), outcomes.end(), [&](std::size_t a, std::size_t b) {
    return distribution[a] > distribution[b];
  });
  if (outcomes.size() > 16) {
    outcomes.resize(16);
  }

  const auto try_period = [&](std::uint64_t r) -> std::optional<std::pair<std::uint64_t, std::uint64_t>> {
    if (r == 0 || r % 2 != 0 || powmod(base, r, modulus) != 1) {
      return std::nullopt;
    }
    const std::uint64_t half = powmod(base, r / 2, modulus);
    if (half == modulus - 1) {
      return std::nullopt;
    }
    for (std::uint64_t candidate : {std::gcd(half + modulus - 1, modulus),
                                    std::gcd(half + 1, modulus)}) {
      if (candidate > 1 && candidate < modulus) {
        const std::uint64_t other = modulus / candidate;
        return std::make_pair(std::min(candidate, other), std::max(candidate, other));
      }
    }
    return std::nullopt;
  };

  std::vector<std::uint64_t> denominators;
  for (std::size_t y : outcomes) {
    // Denominators of the convergents of y / m that stay below the modulus.
    std::uint64_t num = y;
    std::uint64_t den = m;
    std::uint64_t q_prev = 1;
    std::uint64_t q_cur = 0;
    while (den != 0) {
      const std::uint64_t a = num / den;
      const std::uint64_t q_next = a * q_cur + q_prev;
      if (q_next >= modulus) {
        break;
      }
      q_prev = q_cur;
      q_cur = q_next;
      if (q_cur >= 2) {
        if (auto factors = try_period(q_cur)) {
          return factors;
        }
        denominators.push_back(q_cur);
      }
      const std::uint64_t rem = num % den;
      num = den;
      den = rem;
    }
  }
  // Outcomes y = k m / r with gcd(k, r) > 1 only reveal divisors of r; the
  // least common multiple of two such divisors often recovers r.
  for (std::size_t i = 0; i < denominators.size(); ++i) {
    for (std::size_t j = i + 1; j < denominators.size(); ++j) {
      const std::uint64_t r = std::lcm(denominators[i], denominators[j]);
      if (r < modulus) {
        if (auto factors = try_period(r)) {
          return factors;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace approxdd
