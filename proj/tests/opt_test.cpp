// Copyright 2026 The faultex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include "faultex/faultex.hpp"
#include "support.hpp"

namespace faultex {
namespace {

std::optional<std::pair<std::size_t, std::size_t>> as_pair(const RingScenario& s) {
  if (const auto* f = std::get_if<FaultyRing>(&s)) return std::pair{f->x, f->y};
  return std::nullopt;
}

TEST(OptRing, ClosedFormValues) {
  EXPECT_EQ(opt_ring(6, FaultyRing{2, 3}).cost, 7u);
  EXPECT_EQ(opt_ring(24, EmptyRing{}).cost, 23u);
  EXPECT_EQ(opt_ring(9, FaultyRing{0, 0}).cost, 0u);
  EXPECT_EQ(opt_ring(9, FaultyRing{0, 5}).cost, 5u);
  EXPECT_THROW(opt_ring(5, FaultyRing{3, 3}), Error);
}

TEST(OptRing, MatchesIntervalWalkOracle) {
  for (std::size_t n = 3; n <= 16; ++n)
    for (const auto& s : all_ring_scenarios(n))
      EXPECT_EQ(opt_ring(n, s).cost, testing::interval_walk_opt(n, as_pair(s))) << n << " " << to_string(s);
}

bool is_covering_walk(const PortLabeledGraph& g, const FaultConfiguration& f, NodeId v,
                      const std::vector<NodeId>& walk) {
  if (walk.empty() || walk.front() != v) return false;
  std::set<NodeId> seen(walk.begin(), walk.end());
  for (std::size_t i = 0; i + 1 < walk.size(); ++i)
    if (!g.has_edge(walk[i], walk[i + 1]) || f.contains(Edge(walk[i], walk[i + 1]))) return false;
  const auto target = testing::reachable(g, f, v);
  return std::vector<NodeId>(seen.begin(), seen.end()) == target;
}

TEST(CoveringWalk, AgreesWithRingClosedFormAndReturnsAWitness) {
  for (std::size_t n = 3; n <= 10; ++n) {
    const auto g = build_ring(n);
    for (NodeId v : {NodeId{0}, static_cast<NodeId>(n / 2)})
      for (const auto& s : all_ring_scenarios(n)) {
        const auto f = ring_faults(g, v, s);
        const auto r = opt_covering_walk(g, f, v);
        EXPECT_EQ(r.cost, opt_ring(n, s).cost);
        ASSERT_TRUE(r.walk.has_value());
        EXPECT_EQ(r.walk->size(), r.cost + 1);
        EXPECT_TRUE(is_covering_walk(g, f, v, *r.walk));
      }
  }
}

TEST(CoveringWalk, AgreesWithHeldKarpOnRandomGraphs) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = testing::random_connected_graph(rng, testing::uniform(rng, 2, 9), testing::uniform(rng, 0, 10));
    const auto f = testing::random_faults(rng, g, 0.3);
    const auto v = static_cast<NodeId>(testing::uniform(rng, 0, g.node_count() - 1));
    const auto r = opt_covering_walk(g, f, v);
    EXPECT_EQ(r.cost, testing::held_karp_opt(g, f, v));
    ASSERT_TRUE(r.walk.has_value());
    EXPECT_TRUE(is_covering_walk(g, f, v, *r.walk));
  }
}

TEST(CoveringWalk, PathInsideK4) {
  const auto g = build_complete(4);
  // Only the path 0-1-2-3 survives.
  const FaultConfiguration f({Edge(0, 2), Edge(0, 3), Edge(1, 3)});
  EXPECT_EQ(opt_covering_walk(g, f, 0).cost, 3u);
  EXPECT_EQ(opt_covering_walk(g, f, 1).cost, 4u);
}

TEST(CoveringWalk, IsolatedStartCostsNothing) {
  const auto g = build_ring(5);
  const auto r = opt_covering_walk(g, FaultConfiguration({Edge(0, 1), Edge(0, 4)}), 0);
  EXPECT_EQ(r.cost, 0u);
}

TEST(CoveringWalk, EnforcesTheComponentBudget) {
  const auto g = build_ring(12);
  try {
    opt_covering_walk(g, {}, 0, OptBudget{10});
    FAIL() << "expected a budget error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBudgetExceeded);
  }
  EXPECT_EQ(opt_covering_walk(g, {}, 0, OptBudget{12}).cost, 11u);
}

}  // namespace
}  // namespace faultex
