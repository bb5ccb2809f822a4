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

#ifndef APPROXDD_CIRCUIT_HPP
#define APPROXDD_CIRCUIT_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "approxdd/gate.hpp"

namespace approxdd {

/// An ordered gate list with block markers. A marker at position p sits
/// after the first p gates (0 = before any gate).
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t num_qubits, std::string name = {});

  [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// b_{n-1} ... b_0, all zeros unless set.
  [[nodiscard]] const std::string& initial_state() const noexcept { return initial_state_; }
  void set_initial_state(std::string bits);

  [[nodiscard]] const std::vector<GateSpec>& ops() const noexcept { return ops_; }
  [[nodiscard]] std::size_t size() const noexcept { return ops_.size(); }
  [[nodiscard]] bool empty() const noexcept { return ops_.empty(); }

  /// Sorted, without duplicates.
  [[nodiscard]] const std::vector<std::size_t>& markers() const noexcept { return markers_; }

  /// Validates against num_qubits() before appending.
  Circuit& add(GateSpec gate);
  /// Marks the current end of the gate list as a block boundary.
  Circuit& barrier();

  Circuit& h(Qubit q) { return add(GateSpec::single(GateKind::kH, q)); }
  Circuit& x(Qubit q) { return add(GateSpec::single(GateKind::kX, q)); }
  Circuit& cx(Qubit control, Qubit target) {
    return add(GateSpec::controlled(GateKind::kCX, control, target));
  }
  Circuit& cz(Qubit control, Qubit target) {
    return add(GateSpec::controlled(GateKind::kCZ, control, target));
  }
  Circuit& cp(double angle, Qubit control, Qubit target) {
    return add(GateSpec::controlled(GateKind::kCPhase, control, target, angle));
  }
  Circuit& swap(Qubit a, Qubit b) { return add(GateSpec::swap(a, b)); }

  /// Appends all of `other`'s gates and markers (shifted). Qubit counts must match.
  Circuit& append(const Circuit& other);

  friend bool operator==(const Circuit& a, const Circuit& b) {
    return a.num_qubits_ == b.num_qubits_ && a.initial_state_ == b.initial_state_ &&
           a.ops_ == b.ops_ && a.markers_ == b.markers_;
  }

 private:
  std::size_t num_qubits_ = 0;
  std::string name_;
  std::string initial_state_;
  std::vector<GateSpec> ops_;
  std::vector<std::size_t> markers_;
};

}  // namespace approxdd

#endif  // APPROXDD_CIRCUIT_HPP
