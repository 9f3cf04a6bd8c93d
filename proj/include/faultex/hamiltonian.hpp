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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "faultex/graph.hpp"

namespace faultex {

enum class HamiltonStatus { kFound, kNone, kUndecided };

struct HamiltonianResult {
  HamiltonStatus status = HamiltonStatus::kUndecided;
  std::vector<NodeId> cycle;  // n distinct nodes; last is adjacent to first
};

struct HamiltonianBudget {
  std::size_t max_nodes = 20;
  std::uint64_t max_expansions = 50'000'000;
};

namespace detail {

class HamiltonSearch {
 public:
  HamiltonSearch(const PortLabeledGraph& g, std::uint64_t limit)
      : g_(g), on_path_(g.node_count(), 0), limit_(limit) {}

  HamiltonStatus run(std::vector<NodeId>& cycle) {
    path_.push_back(0);
    on_path_[0] = 1;
    const bool found = extend();
    if (found) {
      cycle = path_;
      return HamiltonStatus::kFound;
    }
    return exhausted_ ? HamiltonStatus::kUndecided : HamiltonStatus::kNone;
  }

 private:
  bool extend() {
    if (++expansions_ > limit_) {
      exhausted_ = true;
      return false;
    }
    const auto n = g_.node_count();
    const NodeId last = path_.back();
    if (path_.size() == n) return g_.has_edge(last, path_.front());
    for (const auto& t : g_.ports(last)) {
      if (on_path_[t.to]) continue;
      path_.push_back(t.to);
      on_path_[t.to] = 1;
      if (!dead_end() && extend()) return true;
      on_path_[t.to] = 0;
      path_.pop_back();
      if (exhausted_) return false;
    }
    return false;
  }

  // An unvisited node with fewer than two usable neighbours cannot be
  // threaded into the cycle.
  bool dead_end() const {
    const NodeId head = path_.back();
    const NodeId root = path_.front();
    for (NodeId u = 0; u < g_.node_count(); ++u) {
      if (on_path_[u]) continue;
      int usable = 0;
      for (const auto& t : g_.ports(u)) {
        if (!on_path_[t.to] || t.to == head || t.to == root) ++usable;
      }
      if (usable < 2) return true;
    }
    return false;
  }

  const PortLabeledGraph& g_;
  std::vector<NodeId> path_;
  std::vector<char> on_path_;
  std::uint64_t limit_;
  std::uint64_t expansions_ = 0;
  bool exhausted_ = false;
};

}  // namespace detail

// Exhaustive backtracking. Graphs above the node budget, or searches that
// exceed the expansion budget, come back kUndecided rather than kNone.
inline HamiltonianResult find_hamiltonian_cycle(const PortLabeledGraph& g,
                                                HamiltonianBudget budget = {}) {
  HamiltonianResult result;
  const auto n = g.node_count();
  if (n > budget.max_nodes) return result;
  if (n < 3) {
    result.status = HamiltonStatus::kNone;
    return result;
  }
  detail::HamiltonSearch search(g, budget.max_expansions);
  result.status = search.run(result.cycle);
  return result;
}

inline bool is_hamiltonian_cycle(const PortLabeledGraph& g, const std::vector<NodeId>& cycle) {
  const auto n = g.node_count();
  if (n < 3 || cycle.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const NodeId u = cycle[i];
    if (u >= n || seen[u]) return false;
    seen[u] = 1;
    if (!g.has_edge(u, cycle[(i + 1) % n])) return false;
  }
  return true;
}

}  // namespace faultex
