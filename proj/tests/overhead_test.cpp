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

using R = ExactRatio;

R ring_overhead_of(std::size_t n, const StrategySpec& s) {
  return overhead(build_ring(n), 0, s, family::RingScenarios{}).overhead;
}

TEST(Overhead, AlgorithmRingOnRings) {
  EXPECT_EQ(ring_overhead_of(10, strategy::RingAlgorithm{}), R(18, 11));
  EXPECT_EQ(ring_overhead_of(24, strategy::RingAlgorithm{}), R(47, 26));
  EXPECT_EQ(ring_overhead_of(30, strategy::RingAlgorithm{}), R(59, 32));
}

TEST(Overhead, ClassA0EitherDirection) {
  EXPECT_EQ(ring_overhead_of(7, strategy::ClassA0{Direction::kLeft}), R(11, 7));
  EXPECT_EQ(ring_overhead_of(7, strategy::ClassA0{Direction::kRight}), R(11, 7));
}

TEST(Overhead, CompleteGraphDfs) {
  const auto rep = overhead(build_complete(5), 0, strategy::DfsAlpha{}, family::FullPowerset{});
  EXPECT_EQ(rep.overhead, R(3, 2));
  EXPECT_EQ(rep.configs_evaluated, 1024u);
  EXPECT_EQ(rep.family, "powerset");
}

TEST(Overhead, HypercubeDfsStaysUnderTheBound) {
  const auto rep = overhead(build_hypercube(3), 0, strategy::DfsAlpha{}, family::FullPowerset{});
  EXPECT_LE(rep.overhead, R(12, 7));
  EXPECT_GE(rep.overhead, R(1));
  const auto again = evaluate_config(build_hypercube(3), 0, strategy::DfsAlpha{}, rep.witness.faults,
                                     OptMethod::kCoveringWalk, {});
  EXPECT_EQ(again.ratio, rep.overhead);
}

TEST(Overhead, BudgetsAreExplicit) {
  OverheadOptions small;
  small.max_powerset_edges = 20;
  try {
    overhead(build_complete(7), 0, strategy::DfsAlpha{}, family::FullPowerset{}, small);
    FAIL() << "21 edges must exceed a budget of 20";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBudgetExceeded);
    EXPECT_NE(std::string(e.what()).find("ring-scenarios"), std::string::npos);
  }
  EXPECT_THROW(overhead(build_complete(4), 0, strategy::DfsAlpha{}, family::RingScenarios{}), Error);
  EXPECT_THROW(overhead(build_complete(4), 0, strategy::DfsAlpha{}, family::ExplicitList{}), Error);
}

TEST(Overhead, ExplicitListAndPerConfigRows) {
  const auto g = build_ring(8);
  family::ExplicitList list;
  for (const auto& s : all_ring_scenarios(8)) list.configs.push_back(ring_faults(g, 0, s));
  OverheadOptions keep;
  keep.keep_per_config = true;
  const auto rep = overhead(g, 0, strategy::RingAlgorithm{}, list, keep);
  EXPECT_EQ(rep.overhead, ring_overhead_of(8, strategy::RingAlgorithm{}));
  ASSERT_TRUE(rep.per_config.has_value());
  ASSERT_EQ(rep.per_config->size(), list.configs.size());
  bool hit = false;
  for (const auto& row : *rep.per_config) {
    EXPECT_LE(row.ratio, rep.overhead);
    EXPECT_EQ(row.ratio, exploration_ratio(row.cost, row.opt));
    hit = hit || row.ratio == rep.overhead;
  }
  EXPECT_TRUE(hit);
}

TEST(Overhead, IndependentOfWorkerCount) {
  const auto g = build_complete(5);
  OverheadOptions one, four;
  one.workers = 1;
  four.workers = 4;
  const auto a = overhead(g, 2, strategy::DfsAlpha{}, family::FullPowerset{}, one);
  const auto b = overhead(g, 2, strategy::DfsAlpha{}, family::FullPowerset{}, four);
  EXPECT_EQ(a.overhead, b.overhead);
  EXPECT_EQ(a.witness.faults, b.witness.faults);
  EXPECT_EQ(io::report_to_json(a).dump(), io::report_to_json(b).dump());
}

TEST(Overhead, ReportJsonCarriesExactValues) {
  const auto rep = overhead(build_ring(10), 0, strategy::RingAlgorithm{}, family::RingScenarios{});
  const auto j = io::report_to_json(rep);
  EXPECT_EQ(j["overhead"]["num"], "18");
  EXPECT_EQ(j["overhead"]["den"], "11");
  EXPECT_EQ(j["family"], "ring-scenarios");
  EXPECT_EQ(j["strategy"]["kind"], "ring");
  EXPECT_TRUE(j["witness"]["faulty"].is_array());
  EXPECT_FALSE(j.contains("perConfig"));
}

TEST(Adversary, FiveNodeConstruction) {
  const auto g = build_complete(5);
  const auto f = adversarial_complete(g, 0);
  // w = 1, u' = 2, u'' = 3; surviving path 0-4-2-1-3 plus the chord 0-1.
  EXPECT_EQ(f, FaultConfiguration({Edge(0, 2), Edge(0, 3), Edge(1, 4), Edge(2, 3), Edge(3, 4)}));
  EXPECT_EQ(f.size(), 5u);
  const auto t = execute(g, f, 0, strategy::DfsAlpha{});
  EXPECT_EQ(t.cost, 6u);
  EXPECT_EQ(opt_covering_walk(g, f, 0).cost, 4u);
}

TEST(Adversary, ForcesTheBoundForAnyPortOrder) {
  testing::Rng rng(17);
  for (std::size_t n = 4; n <= 8; ++n) {
    const auto g = build_complete(n);
    for (int k = 0; k < 6; ++k) {
      const auto orders = k == 0 ? increasing_orders(g) : testing::random_orders(rng, g);
      const auto v = static_cast<NodeId>(testing::uniform(rng, 0, n - 1));
      const auto f = adversarial_complete(g, orders, v);
      EXPECT_EQ(f.size(), n * (n - 1) / 2 - n);
      const auto cost = execute(g, f, v, strategy::DfsAlpha{orders}).cost;
      const auto opt = opt_covering_walk(g, f, v).cost;
      EXPECT_EQ(cost, 2 * n - 4);
      EXPECT_EQ(opt, n - 1);
      EXPECT_EQ(exploration_ratio(cost, opt), closed_form::dfs_bound(n));
    }
  }
}

TEST(Adversary, Preconditions) {
  EXPECT_EQ([] {
    try {
      adversarial_complete(build_complete(3), 0);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kParse;
  }(), ErrorKind::kInvalidSize);
  EXPECT_THROW(adversarial_complete(build_ring(6), 0), Error);
}

TEST(DfsBoundCheck, CompleteGraphReachesTheBound) {
  const auto g = build_complete(5);
  const auto rep = dfs_bound_check(g, 0, {strategy::DfsAlpha{}}, family::FullPowerset{});
  EXPECT_TRUE(rep.within_bound);
  EXPECT_EQ(rep.max_observed, closed_form::dfs_bound(5));
}

TEST(DfsBoundCheck, RingsStayStrictlyBelow) {
  for (std::size_t n = 4; n <= 8; ++n) {
    const auto rep = dfs_bound_check(build_ring(n), 0, {strategy::DfsAlpha{}}, family::FullPowerset{});
    EXPECT_TRUE(rep.within_bound);
    EXPECT_EQ(rep.max_observed, closed_form::class_a0(n));
    EXPECT_LT(rep.max_observed, rep.bound);
  }
}

TEST(DfsBoundCheck, RejectsNonHamiltonianGraphs) {
  const auto star = from_edge_list(4, {Edge(0, 1), Edge(0, 2), Edge(0, 3)});
  try {
    dfs_bound_check(star, 0, {strategy::DfsAlpha{}}, family::FullPowerset{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidGraph);
  }
}

TEST(Minimax, MatchesTheLowerBoundTable) {
  EXPECT_EQ(minimax_lower_bound(4).value, R(5, 4));
  EXPECT_EQ(minimax_lower_bound(6).value, R(3, 2));
  EXPECT_EQ(minimax_lower_bound(10).value, R(18, 11));
  for (std::size_t n = 3; n <= 12; ++n) EXPECT_EQ(minimax_lower_bound(n).value, closed_form::lower_bound(n)) << n;
}

TEST(Minimax, RespectsItsBudget) {
  try {
    minimax_lower_bound(15);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBudgetExceeded);
  }
  EXPECT_EQ(minimax_lower_bound(16, {16}).value, R(30, 17));
  EXPECT_THROW(minimax_lower_bound(2), Error);
}

}  // namespace
}  // namespace faultex
