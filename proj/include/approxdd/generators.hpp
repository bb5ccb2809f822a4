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

#ifndef APPROXDD_GENERATORS_HPP
#define APPROXDD_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "approxdd/circuit.hpp"

namespace approxdd {

/// H on the top qubit followed by a CX ladder down to qubit 0.
[[nodiscard]] Circuit gen_ghz(std::size_t num_qubits);

/// Textbook QFT (qubit j weighs 2^j), including the final qubit reversal.
/// The inverse runs the adjoint gates in reverse order. A marker follows each
/// block of controlled rotations.
[[nodiscard]] Circuit gen_qft(std::size_t num_qubits, bool inverse = false);

/// Appends a (inverse) QFT on qubits [first, first + count) of `circuit`.
void append_qft(Circuit& circuit, Qubit first, std::size_t count, bool inverse);

/// Grid circuit in the style of the Google supremacy benchmarks: an H layer,
/// then `depth` cycles, each with one of eight cycling CZ patterns. A qubit
/// that was in a CZ in the previous cycle and is idle now receives a
/// single-qubit gate: T the first time, afterwards a uniformly random pick
/// from {sqrt(X), sqrt(Y), T} other than its previous one. Qubit (r, c) is
/// index r * cols + c. A marker follows every cycle.
[[nodiscard]] Circuit gen_supremacy(std::size_t rows, std::size_t cols, std::size_t depth,
                                    std::uint64_t seed);

/// The CZ pairs of cycle `cycle` on a rows x cols grid.
[[nodiscard]] std::vector<std::pair<Qubit, Qubit>> supremacy_cz_layer(std::size_t rows,
                                                                     std::size_t cols,
                                                                     std::size_t cycle);

/// Order-finding circuit for a modulo `modulus` with n = bit width of the
/// modulus: work register on qubits [0, n) initialized to |1>, counting
/// register on [n, 3n). Counting qubit n + k controls the permutation
/// x -> a^(2^k) x mod N (identity for x >= N). An inverse QFT on the
/// counting register follows. Markers come after every modular
/// multiplication and after every controlled-rotation block.
[[nodiscard]] Circuit gen_shor_period(std::uint64_t modulus, std::uint64_t base);

/// Permutation table of x -> multiplier * x mod modulus on `bits` bits.
[[nodiscard]] std::vector<std::uint64_t> modular_multiplication_table(std::uint64_t multiplier,
                                                                      std::uint64_t modulus,
                                                                      std::size_t bits);

/// Uniformly drawn gates from the supported set (no permutations), for
/// property and acceptance testing.
[[nodiscard]] Circuit gen_random(std::size_t num_qubits, std::size_t num_gates,
                                 std::uint64_t seed);

}  // namespace approxdd

#endif  // APPROXDD_GENERATORS_HPP
