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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "approxdd/errors.hpp"
#include "approxdd/oracle.hpp"
#include "approxdd/package.hpp"
#include "approxdd/state.hpp"
#include "approxdd/weights.hpp"
#include "test_util.hpp"

namespace approxdd {
namespace {

using testing::bits_of;
using testing::build_sample;
using testing::sample_vector;
using testing::max_abs_diff;
using testing::small_config;

TEST(RealTable, MergesValuesWithinTolerance) {
  RealTable table;
  const double a = table.canonical(0.123456789);
  const double b = table.canonical(0.123456789 + 0.5e-13);
  EXPECT_EQ(a, b);
  const double c = table.canonical(0.123456789 + 1e-11);
  EXPECT_NE(a, c);
}

TEST(RealTable, SeededConstantsAreExact) {
  RealTable table;
  EXPECT_EQ(table.canonical(1.0 / std::sqrt(2.0) + 1e-15), std::sqrt(0.5));
  EXPECT_EQ(table.canonical(-1.0 + 1e-14), -1.0);
  EXPECT_EQ(table.canonical(0.0), 0.0);
  EXPECT_EQ(table.canonical(1e-14), 0.0);
}

TEST(RealTable, ClearKeepsSeeds) {
  RealTable table;
  const std::size_t seeded = table.size();
  (void)table.canonical(0.3);
  EXPECT_GT(table.size(), seeded);
  table.clear();
  EXPECT_EQ(table.size(), seeded);
}

TEST(BasisState, TwoQubitZero) {
  Package pkg(small_config());
  const StateDD s = make_basis_state(pkg, 2, "00");
  const std::vector<Complex> expected{1.0, 0.0, 0.0, 0.0};
  EXPECT_EQ(to_dense(s), expected);
  EXPECT_EQ(node_count(s), 2U);
}

TEST(BasisState, SingleQubitOne) {
  Package pkg(small_config());
  const std::vector<Complex> expected{0.0, 1.0};
  EXPECT_EQ(to_dense(make_basis_state(pkg, 1, "1")), expected);
}

TEST(BasisState, IndexIsBinaryValue) {
  Package pkg(small_config());
  const std::vector<Complex> dense = to_dense(make_basis_state(pkg, 3, "011"));
  for (std::size_t i = 0; i < dense.size(); ++i) {
    EXPECT_EQ(dense[i], Complex(i == 3 ? 1.0 : 0.0)) << i;
  }
}

TEST(BasisState, OneNodePerLevel) {
  Package pkg(small_config());
  for (std::size_t n = 1; n <= 9; ++n) {
    const StateDD s = make_basis_state(pkg, n, bits_of(n * 37 % (1U << n), n));
    EXPECT_EQ(node_count(s), n);
    EXPECT_EQ(lookup_amplitude(s, bits_of(n * 37 % (1U << n), n)), Complex(1.0));
  }
}

TEST(BasisState, RejectsLengthMismatch) {
  Package pkg(small_config());
  EXPECT_THROW((void)make_basis_state(pkg, 3, "01"), InputError);
  EXPECT_THROW((void)make_basis_state(pkg, 2, "0a"), InputError);
  const StateDD s = make_basis_state(pkg, 2, "01");
  EXPECT_THROW((void)lookup_amplitude(s, "011"), InputError);
}

TEST(SampleState, LookupAlongBoldPath) {
  Package pkg(small_config());
  const auto f = build_sample(pkg);
  EXPECT_NEAR(std::abs(lookup_amplitude(f.state, "011") - Complex(-1.0 / std::sqrt(10.0))), 0.0,
              1e-15);
  EXPECT_EQ(lookup_amplitude(f.state, "001"), Complex(0.0));
}

TEST(SampleState, UnsharedLayoutHasSixNodes) {
  Package pkg(small_config());
  const auto f = build_sample(pkg);
  EXPECT_EQ(node_count(f.state), 6U);
  EXPECT_LT(max_abs_diff(to_dense(f.state), sample_vector()), 1e-15);
}

TEST(SampleState, CanonicalFormSharesTheEqualLevelZeroNodes) {
  Package pkg(small_config());
  const std::vector<Complex> v = sample_vector();
  const StateDD s = from_dense(pkg, v);
  // The two [0, 1] sub-vectors at level 0 are identical, so a reduced
  // diagram stores them once.
  EXPECT_EQ(node_count(s), 5U);
  EXPECT_LT(max_abs_diff(to_dense(s), v), 1e-15);
}

TEST(FromDense, BasisStateIsAChain) {
  Package pkg(small_config());
  const std::vector<Complex> v{1.0, 0.0, 0.0, 0.0};
  EXPECT_EQ(node_count(from_dense(pkg, v)), 2U);
}

TEST(FromDense, RandomRoundTrip) {
  Package pkg(small_config());
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const DenseState v = random_dense_state(6, seed);
    const StateDD s = from_dense(pkg, v);
    EXPECT_LT(max_abs_diff(to_dense(s), v), 1e-12) << seed;
    EXPECT_NEAR(squared_norm(s), 1.0, 1e-10);
    EXPECT_LE(node_count(s), 63U);
  }
}

TEST(FromDense, IsCanonical) {
  Package pkg(small_config());
  const DenseState v = random_dense_state(5, 11);
  const StateDD a = from_dense(pkg, v);
  const StateDD b = from_dense(pkg, v);
  EXPECT_EQ(a.root().node, b.root().node);
  EXPECT_EQ(a.root().weight, b.root().weight);
}

TEST(FromDense, RejectsBadInput) {
  Package pkg(small_config());
  const std::vector<Complex> three{1.0, 0.0, 0.0};
  EXPECT_THROW((void)from_dense(pkg, three), InputError);
  const std::vector<Complex> long_vec{1.0, 1.0};
  EXPECT_THROW((void)from_dense(pkg, long_vec), InputError);
  const std::vector<Complex> empty;
  EXPECT_THROW((void)from_dense(pkg, empty), InputError);
}

TEST(ToDense, PathSemanticsHoldExactly) {
  Package pkg(small_config());
  const auto f = build_sample(pkg);
  const std::vector<Complex> dense = to_dense(f.state);
  for (std::size_t i = 0; i < dense.size(); ++i) {
    EXPECT_EQ(dense[i], lookup_amplitude(f.state, bits_of(i, 3))) << i;
  }
  const StateDD r = from_dense(pkg, random_dense_state(7, 3));
  const std::vector<Complex> rd = to_dense(r);
  for (std::size_t i = 0; i < rd.size(); ++i) {
    ASSERT_EQ(rd[i], lookup_amplitude(r, bits_of(i, 7))) << i;
  }
}

TEST(ToDense, CapacityGuard) {
  Package pkg(small_config());
  const StateDD s = make_basis_state(pkg, 21, std::string(21, '0'));
  EXPECT_THROW((void)to_dense(s), CapacityError);
  EXPECT_EQ(node_count(s), 21U);
}

TEST(Normalization, LargestWeightIsOneTiesToLow) {
  Package pkg(small_config());
  const StateDD s = from_dense(pkg, random_dense_state(6, 5));
  for (NodeId id : reachable_nodes(s)) {
    const VectorNode& node = pkg.vector_node(id);
    const double m0 = std::abs(node.succ[0].weight);
    const double m1 = std::abs(node.succ[1].weight);
    const Complex top = m0 >= m1 - 1e-13 ? node.succ[0].weight : node.succ[1].weight;
    EXPECT_EQ(top, Complex(1.0)) << id;
  }
  // Equal magnitudes: the low edge carries the 1.
  const Edge e = pkg.make_vector_node(0, {Edge{kTerminal, {0.0, 0.5}}, Edge{kTerminal, {0.5, 0.0}}});
  EXPECT_EQ(pkg.vector_node(e.node).succ[0].weight, Complex(1.0));
  EXPECT_NEAR(std::abs(pkg.vector_node(e.node).succ[1].weight - Complex(0.0, -1.0)), 0.0, 1e-15);
}

TEST(Normalization, ZeroWeightPointsToTerminal) {
  Package pkg(small_config());
  const StateDD s = make_basis_state(pkg, 3, "101");
  for (NodeId id : reachable_nodes(s)) {
    for (const Edge& e : pkg.vector_node(id).succ) {
      if (e.weight == Complex(0.0)) {
        EXPECT_EQ(e.node, kTerminal);
      }
    }
  }
  const Edge z = pkg.make_vector_node(0, {Edge::zero(), Edge::zero()});
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.is_terminal());
}

TEST(Garbage, CollectFreesUnreferencedNodes) {
  Package pkg(small_config());
  {
    const StateDD s = from_dense(pkg, random_dense_state(6, 9));
    EXPECT_GT(pkg.live_vector_nodes(), 0U);
    pkg.collect_garbage();
    EXPECT_EQ(pkg.live_vector_nodes(), node_count(s));
  }
  pkg.collect_garbage();
  EXPECT_EQ(pkg.live_vector_nodes(), 0U);
}

TEST(Garbage, ReusesIdsDeterministically) {
  const auto run = [] {
    Package pkg(small_config());
    std::vector<NodeId> ids;
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      { const StateDD tmp = from_dense(pkg, random_dense_state(5, seed)); }
      pkg.collect_garbage();
      const StateDD s = from_dense(pkg, random_dense_state(5, seed + 10));
      ids.push_back(s.root().node);
    }
    return ids;
  };
  EXPECT_EQ(run(), run());
}

TEST(Handles, CopiesShareAndOutliveOriginal) {
  Package pkg(small_config());
  StateDD copy;
  {
    const StateDD s = make_basis_state(pkg, 4, "1010");
    copy = s;
  }
  pkg.collect_garbage();
  EXPECT_EQ(node_count(copy), 4U);
  EXPECT_EQ(lookup_amplitude(copy, "1010"), Complex(1.0));
}

}  // namespace
}  // namespace approxdd
