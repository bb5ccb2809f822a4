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

#ifndef APPROXDD_WEIGHTS_HPP
#define APPROXDD_WEIGHTS_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <unordered_map>

namespace approxdd {

using Complex = std::complex<double>;

/// Component-wise tolerance under which two edge weights are the same value.
inline constexpr double kWeightTolerance = 1e-13;

[[nodiscard]] inline bool approximately_zero(const Complex& w) noexcept {
  return std::abs(w.real()) <= kWeightTolerance &&
         std::abs(w.imag()) <= kWeightTolerance;
}

/// Interns real numbers so that values within kWeightTolerance of an already
/// stored value resolve to that value. Buckets are kWeightTolerance wide, so
/// any two values sharing a bucket are already within tolerance and one
/// representative per bucket suffices.
class RealTable {
 public:
  RealTable();

  [[nodiscard]] double canonical(double value);
  [[nodiscard]] Complex canonical(const Complex& value) {
    return {canonical(value.real()), canonical(value.imag())};
  }

  [[nodiscard]] std::size_t size() const noexcept { return table_.size(); }

  /// Drops every representative; the seeded constants are re-inserted.
  void clear();

 private:
  void seed();

  std::unordered_map<std::int64_t, double> table_;
};

}  // namespace approxdd

#endif  // APPROXDD_WEIGHTS_HPP
