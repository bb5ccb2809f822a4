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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "approxdd/approximation.hpp"
#include "approxdd/errors.hpp"
#include "approxdd/generators.hpp"
#include "approxdd/ops.hpp"
#include "approxdd/oracle.hpp"
#include "approxdd/state.hpp"
#include "approxdd/strategies.hpp"
#include "test_util.hpp"

namespace approxdd {
namespace {

using testing::build_sample;
using testing::sample_vector;
using testing::max_abs_diff;
using testing::small_config;

std::vector<Complex> pruned_sample_vector() {
  const double r = 1.0 / std::sqrt(2.0);
  return {0.0, 0.0, 0.0, 0.0, 0.0, r, 0.0, r};
}

// A moderately sized state with plenty of sharing: a random circuit.
StateDD random_circuit_state(Package& pkg, std::size_t n, std::uint64_t seed) {
  return simulate_exact(pkg, gen_random(n, 12 * n, seed)).state;
}

TEST(Contributions, SampleValues) {
  Package pkg(small_config());
  const auto f = build_sample(pkg);
  const ContributionMap map = node_contributions(f.state);
  EXPECT_EQ(map.size(), 6U);
  EXPECT_NEAR(map.at(f.root), 1.0, 1e-12);
  EXPECT_NEAR(map.at(f.right_q1), 0.8, 1e-12);
  EXPECT_NEAR(map.at(f.right_q0), 0.8, 1e-12);
  EXPECT_NEAR(map.at(f.left_q1), 0.2, 1e-12);
  EXPECT_NEAR(map.at(f.left_q0), 0.1, 1e-12);
  EXPECT_NEAR(map.at(f.mid_q0), 0.1, 1e-12);
  EXPECT_THROW((void)map.at(987654), InputError);
}

TEST(Contributions, SampleMatchesPathEnumeration) {
  Package pkg(small_config());
  const auto f = build_sample(pkg);
  const ContributionMap fast = node_contributions(f.state);
  const ContributionMap slow = path_contributions(sample_vector(), f.state);
  for (const auto& e : fast.entries()) {
    EXPECT_NEAR(e.contribution, slow.at(e.node), 1e-12) << e.node;
  }
}

TEST(Contributions, BasisStateIsAllOnes) {
  Package pkg(small_config());
  const StateDD s = make_basis_state(pkg, 7, "0110101");
  const ContributionMap map = node_contributions(s);
  EXPECT_EQ(map.size(), 7U);
  for (const auto& e : map.entries()) {
    EXPECT_NEAR(e.contribution, 1.0, 1e-15);
  }
}

TEST(Contributions, LevelSumsAreOne) {
  Package pkg(small_config());
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const StateDD s = from_dense(pkg, random_dense_state(8, seed));
    const ContributionMap map = node_contributions(s);
    const std::vector<double> sums = map.level_sums();
    ASSERT_EQ(sums.size(), 8U);
    for (double x : sums) {
      EXPECT_NEAR(x, 1.0, 1e-9) << seed;
    }
    EXPECT_NEAR(map.at(s.root().node), 1.0, 1e-12);
  }
}

TEST(Contributions, AgreeWithPathOracleOnRandomStates) {
  Package pkg(small_config());
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const DenseState v = random_dense_state(6, 1000 + seed);
    const StateDD s = from_dense(pkg, v);
    const ContributionMap fast = node_contributions(s);
    const ContributionMap slow = path_contributions(v, s);
    ASSERT_EQ(fast.size(), slow.size());
    for (const auto& e : fast.entries()) {
      worst = std::max(worst, std::abs(e.contribution - slow.at(e.node)));
    }
  }
  EXPECT_LT(worst, 1e-9);
}

TEST(Contributions, AgreeWithPathOracleOnSharedDiagrams) {
  Package pkg(small_config());
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const StateDD s = random_circuit_state(pkg, 7, seed);
    const std::vector<Complex> v = to_dense(s);
    const ContributionMap fast = node_contributions(s);
    const ContributionMap slow = path_contributions(v, s);
    for (const auto& e : fast.entries()) {
      ASSERT_NEAR(e.contribution, slow.at(e.node), 1e-9) << seed;
    }
  }
}

TEST(RemoveNodes, LeftBranchGivesPrunedSample) {
  Package pkg(small_config());
  const auto f = build_sample(pkg);
  const std::vector<NodeId> victims{f.left_q1};
  const RoundOutcome out = remove_nodes(f.state, victims);
  EXPECT_NEAR(out.round_fidelity, 0.8, 1e-12);
  EXPECT_NEAR(out.removed_contribution, 0.2, 1e-12);
  EXPECT_LT(max_abs_diff(to_dense(out.state), pruned_sample_vector()), 1e-12);
  EXPECT_EQ(out.nodes_before, 6U);
  EXPECT_EQ(out.nodes_after, 3U);
  EXPECT_EQ(out.nodes_removed, 1U);
  EXPECT_NEAR(fidelity(f.state, out.state), 0.8, 1e-12);
}

TEST(RemoveNodes, EmptyVictimsIsIdentity) {
  Package pkg(small_config());
  const auto f = build_sample(pkg);
  const RoundOutcome out = remove_nodes(f.state, {});
  EXPECT_EQ(out.round_fidelity, 1.0);
  EXPECT_EQ(out.removed_contribution, 0.0);
  EXPECT_EQ(out.nodes_removed, 0U);
  EXPECT_EQ(out.state.root(), f.state.root());
}

TEST(RemoveNodes, RejectsRootAndForeignNodes) {
  Package pkg(small_config());
  const auto f = build_sample(pkg);
  const std::vector<NodeId> root{f.root};
  EXPECT_THROW((void)remove_nodes(f.state, root), InputError);
  const StateDD other = make_basis_state(pkg, 3, "111");
  const std::vector<NodeId> foreign{other.root().node};
  EXPECT_THROW((void)remove_nodes(f.state, foreign), InputError);
}

TEST(RemoveNodes, RemovingAllMassFails) {
  Package pkg(small_config());
  const auto f = build_sample(pkg);
  const std::vector<NodeId> both{f.left_q1, f.right_q1};
  EXPECT_THROW((void)remove_nodes(f.state, both), TruncationError);
}

TEST(RemoveNodes, SingleNodeFidelityEqualsContribution) {
  Package pkg(small_config());
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const StateDD s = random_circuit_state(pkg, 6, seed);
    const ContributionMap map = node_contributions(s);
    for (const auto& e : map.entries()) {
      if (e.node == s.root().node || e.contribution > 1.0 - 1e-6) {
        continue;
      }
      const std::vector<NodeId> victim{e.node};
      const RoundOutcome out = remove_nodes(s, victim);
      ASSERT_NEAR(out.round_fidelity, 1.0 - e.contribution, 1e-9) << seed;
      ASSERT_NEAR(fidelity(s, out.state), 1.0 - e.contribution, 1e-9) << seed;
      ASSERT_LT(out.nodes_after, out.nodes_before);
    }
  }
}

TEST(RemoveNodes, RandomSameLevelVictimsMatchOracle) {
  Package pkg(small_config());
  std::mt19937_64 rng(42);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const DenseState v = random_dense_state(6, 77 + seed);
    const StateDD s = from_dense(pkg, v);
    const ContributionMap map = node_contributions(s);
    // Nodes on one level never lie below each other, so their losses add.
    const int level = static_cast<int>(rng() % 5);
    std::vector<NodeId> victims;
    double removed = 0.0;
    for (const auto& e : map.entries()) {
      if (e.level == level && rng() % 3 == 0) {
        victims.push_back(e.node);
        removed += e.contribution;
      }
    }
    if (victims.empty() || removed > 1.0 - 1e-6) {
      continue;
    }
    const RoundOutcome out = remove_nodes(s, victims);
    EXPECT_NEAR(out.round_fidelity, 1.0 - removed, 1e-9);
    EXPECT_NEAR(dense_fidelity(v, to_dense(out.state)), 1.0 - removed, 1e-9);
    EXPECT_NEAR(squared_norm(out.state), 1.0, 1e-10);
  }
}

TEST(RemoveNodes, NestedVictimsChargeTheUnion) {
  Package pkg(small_config());
  const auto f = build_sample(pkg);
  const std::vector<NodeId> nested{f.left_q1, f.left_q0};
  const RoundOutcome out = remove_nodes(f.state, nested);
  EXPECT_NEAR(out.removed_contribution, 0.2, 1e-12);
  EXPECT_NEAR(out.round_fidelity, 0.8, 1e-12);
}

TEST(RemoveNodes, MatchesDenseTruncationOfRemovedPaths) {
  Package pkg(small_config());
  const auto f = build_sample(pkg);
  // Dropping mid_q0 removes exactly the |011> path.
  const std::vector<NodeId> victims{f.mid_q0};
  const RoundOutcome out = remove_nodes(f.state, victims);
  const std::vector<std::size_t> kept{0, 5, 7};
  const DenseState expected = dense_truncate(sample_vector(), kept);
  EXPECT_LT(max_abs_diff(to_dense(out.state), expected), 1e-12);
  EXPECT_NEAR(out.round_fidelity, 0.9, 1e-12);
}

TEST(ApproximateRound, SampleAtPointEightReachesPrunedSample) {
  Package pkg(small_config());
  const auto f = build_sample(pkg);
  const RoundOutcome out = approximate_round(f.state, 0.8);
  EXPECT_NEAR(out.round_fidelity, 0.8, 1e-12);
  EXPECT_LT(max_abs_diff(to_dense(out.state), pruned_sample_vector()), 1e-12);
  EXPECT_EQ(out.nodes_after, 3U);
}

TEST(ApproximateRound, SampleGreedyPicksLowestContributionsFirst) {
  Package pkg(small_config());
  const auto f = build_sample(pkg);
  const std::vector<NodeId> victims = select_victims(f.state, 0.8);
  ASSERT_EQ(victims.size(), 2U);
  EXPECT_TRUE(std::ranges::find(victims, f.left_q0) != victims.end());
  EXPECT_TRUE(std::ranges::find(victims, f.mid_q0) != victims.end());
  // At 0.85 only one of the 0.1 leaves fits; the lower id goes first.
  const std::vector<NodeId> one = select_victims(f.state, 0.85);
  ASSERT_EQ(one.size(), 1U);
  EXPECT_EQ(one[0], std::min(f.left_q0, f.mid_q0));
}

TEST(ApproximateRound, FullFidelityRemovesNothing) {
  Package pkg(small_config());
  const StateDD s = random_circuit_state(pkg, 8, 5);
  const RoundOutcome out = approximate_round(s, 1.0);
  EXPECT_EQ(out.nodes_removed, 0U);
  EXPECT_EQ(out.round_fidelity, 1.0);
  EXPECT_EQ(out.state.root(), s.root());
}

TEST(ApproximateRound, RejectsInvalidTargets) {
  Package pkg(small_config());
  const StateDD s = make_basis_state(pkg, 2, "00");
  EXPECT_THROW((void)approximate_round(s, 0.0), InputError);
  EXPECT_THROW((void)approximate_round(s, 1.5), InputError);
  EXPECT_THROW((void)approximate_round(s, std::nan("")), InputError);
}

TEST(ApproximateRound, BudgetSafetyOnRandomStates) {
  Package pkg(small_config());
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const DenseState v = random_dense_state(10, 500 + seed);
    const StateDD s = from_dense(pkg, v);
    const RoundOutcome out = approximate_round(s, 0.95);
    const double achieved = dense_fidelity(v, to_dense(out.state));
    EXPECT_GE(achieved, 0.95 - 1e-9) << seed;
    EXPECT_LE(achieved, 1.0 + 1e-9);
    EXPECT_NEAR(achieved, out.round_fidelity, 1e-9);
    EXPECT_LE(out.nodes_after, out.nodes_before);
    EXPECT_GT(out.nodes_removed, 0U);
    pkg.collect_garbage();
  }
}

TEST(ApproximateRound, BudgetSafetyAcrossTargets) {
  Package pkg(small_config());
  for (double f : {0.5, 0.7, 0.9, 0.99, 0.999}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const StateDD s = random_circuit_state(pkg, 8, 40 + seed);
      const RoundOutcome out = approximate_round(s, f);
      EXPECT_GE(fidelity(s, out.state), f - 1e-9);
      EXPECT_GE(out.round_fidelity, f - 1e-9);
      if (out.nodes_removed > 0) {
        EXPECT_LT(out.nodes_after, out.nodes_before);
      } else {
        EXPECT_EQ(out.nodes_after, out.nodes_before);
      }
    }
  }
}

TEST(ApproximateRound, SecondRoundStaysWithinBudget) {
  Package pkg(small_config());
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const StateDD s = from_dense(pkg, random_dense_state(8, 900 + seed));
    const RoundOutcome first = approximate_round(s, 0.9);
    const RoundOutcome second = approximate_round(first.state, 0.9);
    EXPECT_LE(second.removed_contribution, 0.1 + 1e-12);
    EXPECT_NEAR(second.round_fidelity, 1.0 - second.removed_contribution, 1e-9);
  }
}

TEST(ApproximateRound, IsDeterministic) {
  const auto run = [] {
    Package pkg(small_config());
    const StateDD s = random_circuit_state(pkg, 9, 17);
    const RoundOutcome out = approximate_round(s, 0.9);
    return std::make_pair(to_dense(out.state), out.nodes_after);
  };
  EXPECT_EQ(run(), run());
}

TEST(ApproximateRound, GhzHasNothingCheapToRemove) {
  Package pkg(small_config());
  const StateDD s = simulate_exact(pkg, gen_ghz(10)).state;
  const RoundOutcome out = approximate_round(s, 0.9);
  EXPECT_EQ(out.nodes_removed, 0U);
  EXPECT_EQ(out.round_fidelity, 1.0);
}

}  // namespace
}  // namespace approxdd
