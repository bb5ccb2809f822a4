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

#include "approxdd/weights.hpp"

#include <cmath>
#include <numbers>

namespace approxdd {
namespace {

// Beyond this magnitude bucket keys would overflow; such values only appear
// transiently and are left as they are.
constexpr double kMaxInterned = 1e5;

std::int64_t bucket_of(double value) {
  return static_cast<std::int64_t>(std::floor(value / kWeightTolerance));
}

}  // namespace

RealTable::RealTable() { seed(); }

void RealTable::seed() {
  for (double v : {1.0, 0.5, std::numbers::sqrt2 / 2.0}) {
    (void)canonical(v);
    (void)canonical(-v);
  }
}

void RealTable::clear() {
  table_.clear();
  seed();
}

double RealTable::canonical(double value) {
  if (std::abs(value) <= kWeightTolerance) {
    return 0.0;
  }
  if (std::abs(value) > kMaxInterned) {
    return value;
  }
  const std::int64_t key = bucket_of(value);
  if (auto it = table_.find(key); it != table_.end()) {
    return it->second;
  }
  for (std::int64_t neighbour : {key - 1, key + 1}) {
    if (auto it = table_.find(neighbour);
        it != table_.end() && std::abs(it->second - value) <= kWeightTolerance) {
      return it->second;
    }
  }
  table_.emplace(key, value);
  return value;
}

}  // namespace approxdd
