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

#include "approxdd/generators.hpp"

#include <array>
#include <bit>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "approxdd/errors.hpp"

namespace approxdd {
namespace {

using std::numbers::pi;

// Moduli stay far below 2^32, so the product of two residues fits.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return ((a % m) * (b % m)) % m;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

Circuit gen_ghz(std::size_t num_qubits) {
  Circuit c(num_qubits, "ghz_" + std::to_string(num_qubits));
  c.h(num_qubits - 1);
  for (std::size_t q = num_qubits - 1; q > 0; --q) {
    c.cx(q, q - 1);
  }
  return c;
}

void append_qft(Circuit& circuit, Qubit first, std::size_t count, bool inverse) {
  if (first + count > circuit.num_qubits()) {
    throw InputError("QFT register exceeds the circuit");
  }
  const auto q = [first](std::size_t j) { return first + j; };
  if (!inverse) {
    for (std::size_t j = count; j-- > 0;) {
      circuit.h(q(j));
      for (std::size_t i = j; i-- > 0;) {
        circuit.cp(pi / static_cast<double>(std::uint64_t{1} << (j - i)), q(i), q(j));
      }
      if (j > 0) {
        circuit.barrier();
      }
    }
    for (std::size_t j = 0; j < count / 2; ++j) {
      circuit.swap(q(j), q(count - 1 - j));
    }
    return;
  }
  for (std::size_t j = 0; j < count / 2; ++j) {
    circuit.swap(q(j), q(count - 1 - j));
  }
  for (std::size_t j = 0; j < count; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      circuit.cp(-pi / static_cast<double>(std::uint64_t{1} << (j - i)), q(i), q(j));
    }
    if (j > 0) {
      circuit.barrier();
    }
    circuit.h(q(j));
  }
}

Circuit gen_qft(std::size_t num_qubits, bool inverse) {
  Circuit c(num_qubits, (inverse ? "iqft_" : "qft_") + std::to_string(num_qubits));
  append_qft(c, 0, num_qubits, inverse);
  return c;
}

std::vector<std::pair<Qubit, Qubit>> supremacy_cz_layer(std::size_t rows, std::size_t cols,
                                                        std::size_t cycle) {
  // Cycles alternate between horizontal and vertical couplers; within a
  // direction a coupler is active when its staggered offset matches.
  static constexpr std::array<std::size_t, 8> kOrder{0, 3, 2, 1, 4, 7, 6, 5};
  const std::size_t layer = kOrder[cycle % 8];
  const std::size_t down = layer % 2;
  const std::size_t right = 1 - down;
  const std::size_t shift = (layer >> 1U) % 4;
  std::vector<std::pair<Qubit, Qubit>> pairs;
  for (std::size_t r = 0; r + down < rows; ++r) {
    for (std::size_t c = 0; c + right < cols; ++c) {
      if ((r * (2 - down) + c * (2 - right)) % 4 != shift) {
        continue;
      }
      pairs.emplace_back(r * cols + c, (r + down) * cols + (c + right));
    }
  }
  return pairs;
}

Circuit gen_supremacy(std::size_t rows, std::size_t cols, std::size_t depth,
                      std::uint64_t seed) {
  if (rows == 0 || cols == 0 || rows * cols > 25) {
    throw InputError("supremacy grid must have between 1 and 25 qubits, got " +
                     std::to_string(rows) + "x" + std::to_string(cols));
  }
  if (depth == 0) {
    throw InputError("supremacy depth must be at least 1");
  }
  const std::size_t n = rows * cols;
  Circuit c(n, "qsup_" + std::to_string(rows) + "x" + std::to_string(cols) + "_" +
                   std::to_string(depth) + "_" + std::to_string(seed));
  for (Qubit q = 0; q < n; ++q) {
    c.h(q);
  }
  c.barrier();

  std::mt19937_64 rng(seed);
  std::vector<bool> in_cz_before(n, false);
  std::vector<GateKind> last(n, GateKind::kH);
  for (std::size_t cycle = 0; cycle < depth; ++cycle) {
    std::vector<bool> in_cz(n, false);
    for (const auto& [a, b] : supremacy_cz_layer(rows, cols, cycle)) {
      c.cz(a, b);
      in_cz[a] = true;
      in_cz[b] = true;
    }
    for (Qubit q = 0; q < n; ++q) {
      if (in_cz[q] || !in_cz_before[q]) {
        continue;
      }
      GateKind kind = GateKind::kT;
      if (last[q] != GateKind::kH) {
        std::array<GateKind, 2> options{};
        std::size_t k = 0;
        for (GateKind option : {GateKind::kSqrtX, GateKind::kSqrtY, GateKind::kT}) {
          if (option != last[q]) {
            options[k++] = option;
          }
        }
        kind = options[rng() % 2];
      }
      c.add(GateSpec::single(kind, q));
      last[q] = kind;
    }
    in_cz_before = in_cz;
    c.barrier();
  }
  return c;
}

std::vector<std::uint64_t> modular_multiplication_table(std::uint64_t multiplier,
                                                        std::uint64_t modulus,
                                                        std::size_t bits) {
  const std::uint64_t dim = std::uint64_t{1} << bits;
  if (modulus > dim) {
    throw InputError("modulus does not fit the register");
  }
  if (std::gcd(multiplier, modulus) != 1) {
    throw InputError("multiplier must be coprime to the modulus");
  }
  std::vector<std::uint64_t> table(dim);
  for (std::uint64_t x = 0; x < dim; ++x) {
    table[x] = x < modulus ? mulmod(multiplier % modulus, x, modulus) : x;
  }
  return table;
}

Circuit gen_shor_period(std::uint64_t modulus, std::uint64_t base) {
  if (modulus < 9 || modulus > 64 || modulus % 2 == 0 || is_prime(modulus)) {
    throw InputError("modulus must be an odd composite between 9 and 64, got " +
                     std::to_string(modulus));
  }
  if (base < 2 || base >= modulus || std::gcd(base, modulus) != 1) {
    throw InputError("base must satisfy 1 < a < N and gcd(a, N) = 1, got a = " +
                     std::to_string(base));
  }
  const auto n = static_cast<std::size_t>(std::bit_width(modulus));
  Circuit c(3 * n, "shor_" + std::to_string(modulus) + "_" + std::to_string(base));
  std::string init(3 * n, '0');
  init.back() = '1';
  c.set_initial_state(init);

  std::vector<Qubit> work(n);
  std::iota(work.begin(), work.end(), Qubit{0});
  for (std::size_t k = 0; k < 2 * n; ++k) {
    c.h(n + k);
  }
  std::uint64_t multiplier = base % modulus;
  for (std::size_t k = 0; k < 2 * n; ++k) {
    c.add(GateSpec::permutation_gate(work, modular_multiplication_table(multiplier, modulus, n),
                                     {n + k}));
    c.barrier();
    multiplier = mulmod(multiplier, multiplier, modulus);
  }
  append_qft(c, n, 2 * n, true);
  return c;
}

Circuit gen_random(std::size_t num_qubits, std::size_t num_gates, std::uint64_t seed) {
  Circuit c(num_qubits, "random_" + std::to_string(num_qubits) + "_" +
                            std::to_string(num_gates) + "_" + std::to_string(seed));
  std::mt19937_64 rng(seed);
  const auto pick = [&](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };
  const auto angle = [&] {
    return 2.0 * pi * static_cast<double>(rng() >> 11U) * 0x1.0p-53;
  };
  static constexpr std::array<GateKind, 10> kSingle{
      GateKind::kH,  GateKind::kX,  GateKind::kT,     GateKind::kS,     GateKind::kRX,
      GateKind::kRY, GateKind::kRZ, GateKind::kSqrtX, GateKind::kSqrtY, GateKind::kY};
  static constexpr std::array<GateKind, 5> kMulti{GateKind::kCX, GateKind::kCZ,
                                                  GateKind::kCPhase, GateKind::kSwap,
                                                  GateKind::kCCX};
  for (std::size_t i = 0; i < num_gates; ++i) {
    const bool multi = num_qubits >= 2 && pick(3) == 0;
    if (!multi) {
      const GateKind kind = kSingle[pick(kSingle.size())];
      c.add(GateSpec::single(kind, pick(num_qubits), has_angle(kind) ? angle() : 0.0));
      continue;
    }
    GateKind kind = kMulti[pick(kMulti.size())];
    if (kind == GateKind::kCCX && num_qubits < 3) {
      kind = GateKind::kCX;
    }
    const Qubit a = pick(num_qubits);
    Qubit b = pick(num_qubits - 1);
    b += b >= a ? 1 : 0;
    switch (kind) {
      case GateKind::kSwap:
        c.swap(a, b);
        break;
      case GateKind::kCCX: {
        Qubit t = pick(num_qubits);
        while (t == a || t == b) {
          t = pick(num_qubits);
        }
        c.add(GateSpec::ccx(a, b, t));
        break;
      }
      default:
        c.add(GateSpec::controlled(kind, a, b, has_angle(kind) ? angle() : 0.0));
        break;
    }
  }
  return c;
}

}  // namespace approxdd
