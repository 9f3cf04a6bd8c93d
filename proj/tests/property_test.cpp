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


// Randomized and exhaustive properties over small instances.

#include <gtest/gtest.h>

#include "faultex/faultex.hpp"
#include "support.hpp"

namespace faultex {
namespace {

using R = ExactRatio;

Direction direction_of(const StrategySpec& s) {
  return std::visit(
      [](const auto& v) -> Direction {
        if constexpr (requires { v.direction; }) {
          return v.direction;
        } else {
          return Direction::kLeft;
        }
      },
      s);
}

StrategySpec mirrored(const StrategySpec& s) {
  return std::visit(
      [](auto v) -> StrategySpec {
        if constexpr (requires { v.direction; }) v.direction = opposite(v.direction);
        return v;
      },
      s);
}

std::vector<StrategySpec> directional_ring_strategies(std::size_t n) {
  std::vector<StrategySpec> out;
  for (auto d : {Direction::kLeft, Direction::kRight}) {
    out.push_back(strategy::ClassA0{d});
    for (std::size_t i = 1; i + 2 <= n; ++i) out.push_back(strategy::IStepA1{i, d});
    out.push_back(strategy::GeneralAk{{1, 1}, d});
    if (n >= 5) out.push_back(strategy::GeneralAk{{2, 1, 3}, d});
  }
  return out;
}

TEST(Properties, RandomInstancesProduceValidTraces) {
  testing::Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const bool ring = trial % 3 == 0;
    const auto n = testing::uniform(rng, ring ? 3 : 2, 10);
    const auto g = ring ? build_ring(n) : testing::random_connected_graph(rng, n, testing::uniform(rng, 0, 12));
    const auto f = testing::random_faults(rng, g, 0.35);
    const auto v = static_cast<NodeId>(testing::uniform(rng, 0, n - 1));
    const auto spec = ring && trial % 2 ? normalize(testing::random_ring_strategy(rng, n), n)
                                        : StrategySpec(strategy::DfsAlpha{testing::random_orders(rng, g)});
    const auto t = execute(g, f, v, spec);
    const auto check = validate_trace(g, f, v, t);
    ASSERT_TRUE(check.ok) << to_string(spec) << ": " << check.reason;
    ASSERT_TRUE(t.completed);
    const auto opt = testing::held_karp_opt(g, f, v);
    EXPECT_GE(t.cost, opt);
    const auto m = testing::reachable(g, f, v).size();
    if (std::holds_alternative<strategy::DfsAlpha>(spec) && m >= 2) {
      EXPECT_LE(t.cost, 2 * m - 3);
    }
    EXPECT_TRUE(check_observation_discipline(g, f, v, spec, t).ok);
  }
}

TEST(Properties, RingTracesAreMirrorSymmetric) {
  for (std::size_t n = 3; n <= 10; ++n) {
    const auto g = build_ring(n);
    for (const auto& spec : directional_ring_strategies(n))
      for (const auto& s : all_ring_scenarios(n)) {
        const auto f = ring_faults(g, 0, s);
        const auto t = execute(g, f, 0, spec);
        const auto m = execute(g, testing::reflect(n, f), 0, mirrored(spec));
        ASSERT_EQ(t.moves.size(), m.moves.size()) << to_string(spec) << " " << to_string(s);
        for (std::size_t i = 0; i < t.moves.size(); ++i) {
          EXPECT_EQ(m.moves[i].to, testing::reflect(n, t.moves[i].to));
          EXPECT_NE(m.moves[i].port, t.moves[i].port);
        }
      }
    for (const auto& spec : directional_ring_strategies(n)) {
      if (direction_of(spec) != Direction::kLeft) continue;
      EXPECT_EQ(overhead(g, 0, spec, family::RingScenarios{}).overhead,
                overhead(g, 0, mirrored(spec), family::RingScenarios{}).overhead);
    }
  }
}

// Algorithm Ring behaves as the left-first class strategy of its size band:
// one sweep each way up to n = 5, then one or two probing steps.
TEST(Properties, AlgorithmRingMatchesItsClassStrategy) {
  for (std::size_t n = 3; n <= 30; ++n) {
    const auto g = build_ring(n);
    const StrategySpec twin = n <= 5    ? StrategySpec(strategy::ClassA0{Direction::kLeft})
                              : n <= 19 ? StrategySpec(strategy::IStepA1{1, Direction::kLeft})
                                        : StrategySpec(strategy::IStepA1{2, Direction::kLeft});
    for (const auto& s : all_ring_scenarios(n)) {
      const auto f = ring_faults(g, 0, s);
      const auto a = execute(g, f, 0, strategy::RingAlgorithm{});
      const auto b = execute(g, f, 0, twin);
      ASSERT_EQ(a.moves.size(), b.moves.size()) << n << " " << to_string(s);
      for (std::size_t i = 0; i < a.moves.size(); ++i) EXPECT_TRUE(a.moves[i] == b.moves[i]);
    }
  }
}

TEST(Properties, RingScenariosSufficeOnSmallRings) {
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto g = build_ring(n);
    auto specs = directional_ring_strategies(n);
    specs.push_back(strategy::RingAlgorithm{});
    specs.push_back(strategy::DfsAlpha{});
    for (const auto& spec : specs) {
      const auto full = overhead(g, 0, spec, family::FullPowerset{});
      const auto ring = overhead(g, 0, spec, family::RingScenarios{});
      EXPECT_EQ(full.overhead, ring.overhead) << n << " " << to_string(spec);
      EXPECT_EQ(full.configs_evaluated, std::size_t{1} << n);
    }
  }
}

TEST(Properties, TwoTurnStrategiesNeverBeatTheSimpleClasses) {
  for (std::size_t n = 4; n <= 10; ++n) {
    const auto g = build_ring(n);
    auto ov = [&](const StrategySpec& s) { return overhead(g, 0, s, family::RingScenarios{}).overhead; };
    for (auto d : {Direction::kLeft, Direction::kRight}) {
      auto best = min(ov(strategy::ClassA0{d}), ov(strategy::IStepA1{1, d}));
      best = min(best, ov(normalize(strategy::IStepA1{2, d}, n)));
      for (std::size_t z1 = 1; z1 + 2 <= n; ++z1)
        for (std::size_t z2 = 1; z2 + 2 <= n; ++z2)
          EXPECT_GE(ov(strategy::GeneralAk{{z1, z2}, d}), best) << n << " z=(" << z1 << "," << z2 << ")";
    }
  }
}

TEST(Properties, LongFirstStepsDoNotHelp) {
  for (std::size_t n = 5; n <= 14; ++n) {
    const auto small = min(closed_form::istep_a1(n, 1), closed_form::istep_a1(n, 2));
    for (std::size_t i = 3; i + 2 <= n; ++i) EXPECT_GE(closed_form::istep_a1(n, i), small) << n << " " << i;
  }
}

TEST(Properties, WitnessesReproduceAndOverheadsAreAtLeastOne) {
  testing::Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = testing::uniform(rng, 3, 7);
    const bool ring = trial % 2 == 0;
    const auto g = ring ? build_ring(n) : testing::random_connected_graph(rng, n, testing::uniform(rng, 0, 6));
    const auto v = static_cast<NodeId>(testing::uniform(rng, 0, n - 1));
    const auto spec = ring ? normalize(testing::random_ring_strategy(rng, n), n)
                           : StrategySpec(strategy::DfsAlpha{testing::random_orders(rng, g)});
    const auto rep = overhead(g, v, spec, family::FullPowerset{});
    EXPECT_GE(rep.overhead, R(1));
    const auto again = evaluate_config(g, v, spec, rep.witness.faults, OptMethod::kCoveringWalk, {});
    EXPECT_EQ(again.ratio, rep.overhead);
    EXPECT_EQ(again.cost, rep.witness.cost);
  }
}

TEST(Properties, GraphJsonRoundTripsRandomGraphs) {
  testing::Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testing::random_connected_graph(rng, testing::uniform(rng, 1, 15), testing::uniform(rng, 0, 20));
    EXPECT_TRUE(io::parse_graph(io::serialize_graph(g)) == g);
  }
}

}  // namespace
}  // namespace faultex
