// Copyright 2026 The qreorder Authors
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

#include <numbers>

#include "qreorder/commutation.hpp"
#include "qreorder/simulator.hpp"
#include "support/oracles.hpp"

namespace qreorder {
namespace {

TEST(CommuteByRule, CxSharingControl) {
  EXPECT_EQ(commute_by_rule(Gate::cx(0, 1), Gate::cx(0, 2)), Commutation::Yes);
}

TEST(CommuteByRule, CxSharingTarget) {
  EXPECT_EQ(commute_by_rule(Gate::cx(0, 2), Gate::cx(1, 2)), Commutation::Yes);
}

TEST(CommuteByRule, RzOnControl) {
  EXPECT_EQ(commute_by_rule(Gate::rz(0, 0.7), Gate::cx(0, 1)), Commutation::Yes);
  EXPECT_EQ(commute_by_rule(Gate::cx(0, 1), Gate::rz(0, 0.7)), Commutation::Yes);
}

TEST(CommuteByRule, XFamilyOnTarget) {
  EXPECT_EQ(commute_by_rule(Gate::x(1), Gate::cx(0, 1)), Commutation::Yes);
  EXPECT_EQ(commute_by_rule(Gate::sx(1), Gate::cx(0, 1)), Commutation::Yes);
}

TEST(CommuteByRule, SameQubitSingles) {
  EXPECT_EQ(commute_by_rule(Gate::rz(0, 0.1), Gate::rz(0, 2.0)), Commutation::Yes);
  EXPECT_EQ(commute_by_rule(Gate::h(0), Gate::h(0)), Commutation::Yes);
  EXPECT_EQ(commute_by_rule(Gate::h(0), Gate::x(0)), Commutation::Unknown);
}

TEST(CommuteByRule, DisjointSupports) {
  EXPECT_EQ(commute_by_rule(Gate::h(0), Gate::cx(1, 2)), Commutation::Yes);
}

TEST(CommuteByRule, ChainedCxDeferredThenRejected) {
  EXPECT_EQ(commute_by_rule(Gate::cx(0, 1), Gate::cx(1, 2)), Commutation::Unknown);
  EXPECT_FALSE(commute_by_matrix(Gate::cx(0, 1), Gate::cx(1, 2), 1e-12));
  EXPECT_FALSE(gates_commute(Gate::cx(0, 1), Gate::cx(1, 2)));
}

TEST(CommuteByRule, NonUnitaryNeverCommutes) {
  EXPECT_EQ(commute_by_rule(Gate::measure(0, 0), Gate::h(1)), Commutation::No);
  EXPECT_EQ(commute_by_rule(Gate::barrier({0, 1}), Gate::h(0)), Commutation::No);
}

TEST(CommuteByMatrix, GateWithItself) {
  for (const Gate &g : {Gate::h(0), Gate::x(1), Gate::sx(2), Gate::rz(0, 1.3), Gate::cx(2, 0)})
    EXPECT_TRUE(commute_by_matrix(g, g, 0.0));
}

TEST(CommuteByMatrix, HAndXDoNotCommute) { EXPECT_FALSE(commute_by_matrix(Gate::h(0), Gate::x(0), 1e-12)); }

TEST(CommuteByMatrix, XOnTargetCommutes) { EXPECT_TRUE(commute_by_matrix(Gate::cx(0, 1), Gate::x(1), 1e-12)); }

TEST(CommuteByMatrix, Errors) {
  EXPECT_THROW(commute_by_matrix(Gate::cx(0, 1), Gate::cx(2, 3), 1e-12), InputError);
  EXPECT_THROW(commute_by_matrix(Gate::measure(0, 0), Gate::h(0), 1e-12), InputError);
  EXPECT_THROW(commute_by_matrix(Gate::h(0), Gate::barrier({0}), 1e-12), InputError);
}

// Every gate of every kind placed on qubits {0,1,2}, with rz at 16 angles.
std::vector<Gate> gate_universe() {
  std::vector<Gate> out;
  for (int q = 0; q < 3; ++q) {
    out.push_back(Gate::h(q));
    out.push_back(Gate::x(q));
    out.push_back(Gate::sx(q));
    for (int k = 0; k < 16; ++k) out.push_back(Gate::rz(q, -std::numbers::pi + k * std::numbers::pi / 8 + 0.1));
  }
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (a != b) out.push_back(Gate::cx(a, b));
    }
  }
  return out;
}

TEST(CommuteByRule, SoundAgainstMatrix) {
  const auto gates = gate_universe();
  std::size_t yes = 0;
  for (const Gate &a : gates) {
    for (const Gate &b : gates) {
      if (commute_by_rule(a, b) != Commutation::Yes) continue;
      ++yes;
      EXPECT_TRUE(commute_by_matrix(a, b, 1e-12)) << describe(a) << " / " << describe(b);
    }
  }
  EXPECT_GT(yes, 1000u);
}

TEST(CommuteByRule, SymmetricInArguments) {
  const auto gates = gate_universe();
  for (const Gate &a : gates) {
    for (const Gate &b : gates) EXPECT_EQ(commute_by_rule(a, b), commute_by_rule(b, a));
  }
}

TEST(CanSwap, SharedControlIdlePartners) {
  const Circuit c(3, 0, {Gate::cx(0, 1), Gate::cx(0, 2)});
  EXPECT_TRUE(can_swap_preserving_depth(c, 0, 1));
  const auto s = evaluate_swap(c, 0, 1);
  EXPECT_TRUE(s.commutes);
  EXPECT_TRUE(s.depth_safe);
  EXPECT_EQ(s.shared_qubits, (std::vector<int>{0}));
}

TEST(CanSwap, PartnerQubitBusyAtEarlierLayer) {
  const Circuit c(3, 0, {Gate::cx(0, 1), Gate::h(2), Gate::cx(0, 2)});
  ASSERT_EQ(c.layer_of(2), 1);
  EXPECT_FALSE(can_swap_preserving_depth(c, 0, 2));
}

TEST(CanSwap, IntermediateOccupancyBlocksLongExchange) {
  // cx(0,1) at layer 0, cx(0,2) at layer 3, q1 busy at layers 1 and 2.
  const Circuit c(3, 0, {Gate::cx(0, 1), Gate::h(2), Gate::h(2), Gate::h(2), Gate::x(1), Gate::x(1), Gate::cx(0, 2)});
  ASSERT_EQ(c.layer_of(6), 3);
  EXPECT_FALSE(can_swap_preserving_depth(c, 0, 6));
}

TEST(CanSwap, RejectsExchangeThatWouldShrinkDepth) {
  // Both idle conditions hold, yet relayering would pull h(0) forward.
  const Circuit c(3, 0, {Gate::h(1), Gate::cx(0, 1), Gate::cx(0, 2), Gate::h(0)});
  ASSERT_EQ(depth(c), 4);
  EXPECT_FALSE(can_swap_preserving_depth(c, 1, 2));
}

TEST(CanSwap, NotImmediateDependentThrows) {
  const Circuit c(3, 0, {Gate::cx(0, 1), Gate::cx(1, 2), Gate::cx(0, 2)});
  // Gate 2 follows gate 0 directly on qubit 0, but qubit 1 is busy in between.
  EXPECT_FALSE(can_swap_preserving_depth(c, 0, 2));
  EXPECT_THROW(can_swap_preserving_depth(c, 2, 0), InputError);
  EXPECT_THROW(can_swap_preserving_depth(c, 1, 0), InputError);
  EXPECT_THROW(can_swap_preserving_depth(c, 0, 9), InputError);
}

TEST(CanSwap, FenceBetweenBlocksExchange) {
  const Circuit c(3, 0, {Gate::cx(0, 1), Gate::barrier({0, 1, 2}), Gate::cx(0, 2)});
  EXPECT_THROW(can_swap_preserving_depth(c, 0, 2), InputError);
}

TEST(SwapSafety, AcceptedExchangesPreserveEverything) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    testing::RandomCircuitOptions opt;
    opt.num_qubits = 2 + static_cast<int>(seed % 5);
    opt.num_gates = 24;
    opt.measure_all = false;
    const Circuit c = testing::random_circuit(seed, opt);
    const auto graph = build_dependency_graph(c);
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j : immediate_dependents(graph, i)) {
        const auto s = evaluate_swap(c, i, j);
        if (!s.commutes || !s.depth_safe) continue;
        const auto out = try_exchange(c, i, j);
        ASSERT_TRUE(out.has_value());
        EXPECT_EQ(depth(*out), depth(c));
        EXPECT_EQ(operation_multiset(*out), operation_multiset(c));
        EXPECT_LE(unitary_distance(*out, c), 1e-10) << "seed " << seed;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 100u);
}

}  // namespace
}  // namespace qreorder
