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

#pragma once

// Reference implementations used only by the tests. None of them calls into
// the search or simulation code they are compared against.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "faultex/faultex.hpp"

namespace faultex::testing {

inline bool edge_free(const FaultConfiguration& f, NodeId a, NodeId b) { return !f.contains(Edge(a, b)); }

// Nodes reachable from v over free edges, by plain flood fill.
inline std::vector<NodeId> reachable(const PortLabeledGraph& g, const FaultConfiguration& f, NodeId v) {
  std::vector<char> seen(g.node_count(), 0);
  std::vector<NodeId> out{v}, stack{v};
  seen[v] = 1;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (Port p = 1; p <= g.degree(u); ++p) {
      const auto w = g.follow(u, p).to;
      if (!seen[w] && edge_free(f, u, w)) {
        seen[w] = 1;
        out.push_back(w);
        stack.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Shortest covering walk on a ring as a shortest path over explored
// intervals: state (left extent, right extent, which end the agent is at).
// Empty ring: any split with a + b = n - 1 finishes.
inline std::size_t interval_walk_opt(std::size_t n, std::optional<std::pair<std::size_t, std::size_t>> xy) {
  const bool empty = !xy;
  const std::size_t X = empty ? n - 1 : xy->first;
  const std::size_t Y = empty ? n - 1 : xy->second;
  auto done = [&](std::size_t a, std::size_t b) { return empty ? a + b == n - 1 : (a == X && b == Y); };
  using State = std::tuple<std::size_t, std::size_t, std::size_t, int>;  // cost, a, b, side
  std::priority_queue<State, std::vector<State>, std::greater<>> pq;
  std::set<std::tuple<std::size_t, std::size_t, int>> closed;
  pq.push({0, 0, 0, 0});
  while (!pq.empty()) {
    auto [c, a, b, side] = pq.top();
    pq.pop();
    if (done(a, b)) return c;
    if (!closed.insert({a, b, side}).second) continue;
    const bool room = !empty || a + b < n - 1;
    if (room && a < X) pq.push({c + (side == 0 ? 1 : a + b + 1), a + 1, b, 0});
    if (room && b < Y) pq.push({c + (side == 1 ? 1 : a + b + 1), a, b + 1, 1});
  }
  return std::numeric_limits<std::size_t>::max();
}

// Held-Karp over the metric closure of the fault-free component: cheapest
// path from v through every component node.
inline std::size_t held_karp_opt(const PortLabeledGraph& g, const FaultConfiguration& f, NodeId v) {
  const auto nodes = reachable(g, f, v);
  const std::size_t k = nodes.size();
  if (k == 1) return 0;
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;
  std::vector<std::size_t> local(g.node_count(), kInf);
  for (std::size_t i = 0; i < k; ++i) local[nodes[i]] = i;
  std::vector<std::vector<std::size_t>> d(k, std::vector<std::size_t>(k, kInf));
  for (std::size_t i = 0; i < k; ++i) {
    d[i][i] = 0;
    const auto u = nodes[i];
    for (Port p = 1; p <= g.degree(u); ++p) {
      const auto w = g.follow(u, p).to;
      if (local[w] != kInf && edge_free(f, u, w)) d[i][local[w]] = 1;
    }
  }
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);

  const std::size_t full = (std::size_t{1} << k) - 1;
  std::vector<std::vector<std::size_t>> dp(full + 1, std::vector<std::size_t>(k, kInf));
  const auto s = local[v];
  dp[std::size_t{1} << s][s] = 0;
  for (std::size_t mask = 1; mask <= full; ++mask)
    for (std::size_t j = 0; j < k; ++j) {
      if (dp[mask][j] >= kInf || !(mask >> j & 1)) continue;
      for (std::size_t t = 0; t < k; ++t) {
        if (mask >> t & 1) continue;
        auto& slot = dp[mask | std::size_t{1} << t][t];
        slot = std::min(slot, dp[mask][j] + d[j][t]);
      }
    }
  return *std::min_element(dp[full].begin(), dp[full].end());
}

// Recursive Explore: try free ports in order, descend into unvisited
// neighbours, walk back afterwards. Cost is counted up to the last first visit.
inline std::size_t recursive_dfs_cost(const PortLabeledGraph& g, const FaultConfiguration& f, NodeId v,
                                      const PortOrders& orders) {
  std::vector<char> visited(g.node_count(), 0);
  std::size_t moves = 0, last_new = 0;
  auto explore = [&](auto&& self, NodeId u) -> void {
    visited[u] = 1;
    for (Port p : orders[u]) {
      const auto w = g.follow(u, p).to;
      if (visited[w] || !edge_free(f, u, w)) continue;
      ++moves;
      last_new = moves;
      self(self, w);
      ++moves;
    }
  };
  explore(explore, v);
  return last_new;
}

// Mirror image of a ring: the reflection u -> -u mod n, which swaps the roles
// of the two ports everywhere.
inline NodeId reflect(std::size_t n, NodeId u) { return static_cast<NodeId>((n - u) % n); }

inline FaultConfiguration reflect(std::size_t n, const FaultConfiguration& f) {
  std::vector<Edge> out;
  for (const auto& e : f.edges()) out.emplace_back(reflect(n, e.u), reflect(n, e.v));
  return FaultConfiguration(std::move(out));
}

// Generators.

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Connected graph on n nodes: a random spanning tree plus `extra` chords,
// with every node's ports shuffled.
inline PortLabeledGraph random_connected_graph(Rng& rng, std::size_t n, std::size_t extra) {
  std::set<Edge> edges;
  for (NodeId u = 1; u < n; ++u) edges.emplace(u, static_cast<NodeId>(uniform(rng, 0, u - 1)));
  const std::size_t max_edges = n * (n - 1) / 2;
  while (extra > 0 && edges.size() < max_edges) {
    const auto a = static_cast<NodeId>(uniform(rng, 0, n - 1));
    const auto b = static_cast<NodeId>(uniform(rng, 0, n - 1));
    if (a != b && edges.emplace(a, b).second) --extra;
  }
  std::vector<std::vector<NodeId>> nb(n);
  for (const auto& e : edges) {
    nb[e.u].push_back(e.v);
    nb[e.v].push_back(e.u);
  }
  for (auto& row : nb) std::shuffle(row.begin(), row.end(), rng);
  return from_neighbor_lists(nb, "random(" + std::to_string(n) + ")");
}

inline FaultConfiguration random_faults(Rng& rng, const PortLabeledGraph& g, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> out;
  for (const auto& e : g.edges())
    if (coin(rng)) out.push_back(e);
  return FaultConfiguration(std::move(out));
}

inline PortOrders random_orders(Rng& rng, const PortLabeledGraph& g) {
  auto orders = increasing_orders(g);
  for (auto& row : orders) std::shuffle(row.begin(), row.end(), rng);
  return orders;
}

inline Direction random_direction(Rng& rng) { return uniform(rng, 0, 1) ? Direction::kRight : Direction::kLeft; }

// Any complete ring strategy valid for an n-node ring (a lone GO-FIRM sweep
// is not one).
inline StrategySpec random_ring_strategy(Rng& rng, std::size_t n) {
  const auto d = random_direction(rng);
  switch (uniform(rng, 0, 4)) {
    case 0:
      return strategy::RingAlgorithm{};
    case 1:
      return strategy::GeneralAk{{uniform(rng, 1, n - 2)}, d};
    case 2:
      return strategy::ClassA0{d};
    case 3:
      return strategy::IStepA1{uniform(rng, 1, n - 2), d};
    default: {
      const auto z1 = uniform(rng, 1, n - 2);
      const auto z2 = uniform(rng, 1, n - 2);
      const auto z3 = uniform(rng, z1 + 1, z1 + 3);
      return strategy::GeneralAk{{z1, z2, z3}, d};
    }
  }
}

}  // namespace faultex::testing
