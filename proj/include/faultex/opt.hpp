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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "faultex/error.hpp"
#include "faultex/faults.hpp"
#include "faultex/graph.hpp"

namespace faultex {

struct OptResult {
  std::size_t cost = 0;
  std::optional<std::vector<NodeId>> walk;  // cost + 1 nodes, starting at v
};

// Go to the closer fault, then turn back until the other one.
inline OptResult opt_ring(std::size_t n, const RingScenario& scenario) {
  check_scenario(n, scenario);
  if (std::holds_alternative<EmptyRing>(scenario)) return {n - 1, std::nullopt};
  const auto& s = std::get<FaultyRing>(scenario);
  return {std::min(2 * s.x + s.y, 2 * s.y + s.x), std::nullopt};
}

struct OptBudget {
  std::size_t max_component = 20;
};

// Exact shortest covering walk by breadth-first search over
// (position, visited subset) states of the fault-free component.
inline OptResult opt_covering_walk(const PortLabeledGraph& g, const FaultConfiguration& f, NodeId v,
                                   OptBudget budget = {}) {
  const auto component = fault_free_component(g, f, v);
  const std::size_t m = component.size();
  if (m > budget.max_component || m > 24) {
    throw Error(ErrorKind::kBudgetExceeded,
                "component of size " + std::to_string(m) + " exceeds the covering-walk budget of " +
                    std::to_string(std::min<std::size_t>(budget.max_component, 24)));
  }
  if (m == 1) return {0, std::vector<NodeId>{v}};

  // Local indices 0..m-1 with free adjacency.
  std::vector<std::uint32_t> local(g.node_count(), UINT32_MAX);
  for (std::uint32_t i = 0; i < m; ++i) local[component.nodes[i]] = i;
  std::vector<std::vector<std::uint32_t>> adj(m);
  for (const auto& e : component.free_edges) {
    adj[local[e.u]].push_back(local[e.v]);
    adj[local[e.v]].push_back(local[e.u]);
  }

  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  const auto state = [m](std::uint32_t node, std::uint32_t mask) {
    return static_cast<std::size_t>(mask) * m + node;
  };
  constexpr std::uint32_t kUnseen = UINT32_MAX;
  std::vector<std::uint32_t> parent(static_cast<std::size_t>(full + 1) * m, kUnseen);

  const std::uint32_t s0 = local[v];
  const std::uint32_t mask0 = std::uint32_t{1} << s0;
  std::vector<std::size_t> frontier{state(s0, mask0)};
  parent[frontier.front()] = static_cast<std::uint32_t>(frontier.front());
  std::size_t depth = 0;
  std::optional<std::size_t> goal;
  while (!frontier.empty() && !goal) {
    std::vector<std::size_t> next;
    for (std::size_t st : frontier) {
      const auto node = static_cast<std::uint32_t>(st % m);
      const auto mask = static_cast<std::uint32_t>(st / m);
      for (std::uint32_t w : adj[node]) {
        const std::uint32_t nmask = mask | (std::uint32_t{1} << w);
        const std::size_t ns = state(w, nmask);
        if (parent[ns] != kUnseen) continue;
        parent[ns] = static_cast<std::uint32_t>(st);
        if (nmask == full) {
          goal = ns;
          break;
        }
        next.push_back(ns);
      }
      if (goal) break;
    }
    ++depth;
    frontier = std::move(next);
  }
  if (!goal) throw Error(ErrorKind::kInvalidGraph, "component is not connected");

  std::vector<NodeId> walk;
  for (std::size_t st = *goal;; st = parent[st]) {
    walk.push_back(component.nodes[st % m]);
    if (parent[st] == st) break;
  }
  std::reverse(walk.begin(), walk.end());
  return {depth, std::move(walk)};
}

}  // namespace faultex
