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

#include "approxdd/circuit.hpp"

#include <algorithm>

#include "approxdd/errors.hpp"

namespace approxdd {

Circuit::Circuit(std::size_t num_qubits, std::string name)
    : num_qubits_(num_qubits), name_(std::move(name)), initial_state_(num_qubits, '0') {
  if (num_qubits == 0) {
    throw InputError("a circuit needs at least one qubit");
  }
}

void Circuit::set_initial_state(std::string bits) {
  if (bits.size() != num_qubits_ ||
      bits.find_first_not_of("01") != std::string::npos) {
    throw InputError("initial state '" + bits + "' is not a " +
                     std::to_string(num_qubits_) + "-bit string");
  }
  initial_state_ = std::move(bits);
}

Circuit& Circuit::add(GateSpec gate) {
  validate_gate(gate, num_qubits_);
  ops_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::barrier() {
  if (markers_.empty() || markers_.back() != ops_.size()) {
    markers_.push_back(ops_.size());
  }
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.num_qubits_ != num_qubits_) {
    throw InputError("cannot append a " + std::to_string(other.num_qubits_) +
                     "-qubit circuit to a " + std::to_string(num_qubits_) +
                     "-qubit circuit");
  }
  const std::size_t offset = ops_.size();
  ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
  for (std::size_t m : other.markers_) {
    markers_.push_back(m + offset);
  }
  std::sort(markers_.begin(), markers_.end());
  markers_.erase(std::unique(markers_.begin(), markers_.end()), markers_.end());
  return *this;
}

}  // namespace approxdd
