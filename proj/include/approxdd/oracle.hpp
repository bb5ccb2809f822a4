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

#ifndef APPROXDD_ORACLE_HPP
#define APPROXDD_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "approxdd/approximation.hpp"
#include "approxdd/circuit.hpp"
#include "approxdd/weights.hpp"

namespace approxdd {

/// Dense statevector reference. Shares only the circuit IR with the decision
/// diagram code: gate matrices and update kernels are its own.
inline constexpr std::size_t kMaxOracleQubits = 14;
inline constexpr std::size_t kMaxPathQubits = 10;

using DenseState = std::vector<Complex>;

[[nodiscard]] DenseState dense_basis_state(std::size_t num_qubits, std::string_view bits);

/// Applies one gate in place by strided updates over index pairs.
void dense_apply(DenseState& state, const GateSpec& gate);

/// Throws CapacityError above kMaxOracleQubits.
[[nodiscard]] DenseState dense_simulate(const Circuit& circuit);

/// Applies the circuit's gates to `state` (ignores its initial state).
void dense_run(DenseState& state, const Circuit& circuit);

/// Keeps the amplitudes at `kept` and renormalizes. Throws TruncationError if
/// the projection is zero, InputError for out-of-range indices.
[[nodiscard]] DenseState dense_truncate(std::span<const Complex> state,
                                        std::span<const std::size_t> kept);

/// <v|w>, conjugating v.
[[nodiscard]] Complex dense_inner(std::span<const Complex> v, std::span<const Complex> w);

/// |<v|w>|^2. Throws InputError on a length mismatch.
[[nodiscard]] double dense_fidelity(std::span<const Complex> v, std::span<const Complex> w);

[[nodiscard]] double dense_squared_norm(std::span<const Complex> v);

/// Normalized complex Gaussian vector of length 2^n.
[[nodiscard]] DenseState random_dense_state(std::size_t num_qubits, std::uint64_t seed);

/// Contribution of each node of `dd` by walking the diagram along every one
/// of the 2^n basis indices and charging |amplitudes[index]|^2 to each node
/// on the path. Throws CapacityError above kMaxPathQubits.
[[nodiscard]] ContributionMap path_contributions(std::span<const Complex> amplitudes,
                                                 const StateDD& dd);

/// Marginal distribution of the register above the low `work_qubits` bits.
[[nodiscard]] std::vector<double> counting_distribution(std::span<const Complex> state,
                                                        std::size_t work_qubits);

/// Classical part of period finding. Outcomes y != 0 more likely than the
/// uniform 1/M are tried in decreasing probability (at most 16). Each
/// continued-fraction convergent denominator q < N and its multiples are
/// tested as the period r: a^r = 1 mod N, r even, a^(r/2) != -1 mod N.
/// Returns the factor pair (smaller first) or nullopt.
[[nodiscard]] std::optional<std::pair<std::uint64_t, std::uint64_t>> shor_postprocess(
    std::span<const double> distribution, std::uint64_t modulus, std::uint64_t base);

/// Smallest r > 0 with base^r = 1 mod modulus, by iteration.
[[nodiscard]] std::uint64_t classical_order(std::uint64_t base, std::uint64_t modulus);

}  // namespace approxdd

#endif  // APPROXDD_ORACLE_HPP
