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
#include <string>
#include <variant>
#include <vector>

#include "faultex/error.hpp"
#include "faultex/graph.hpp"

namespace faultex {

// Set of faulty edges, kept sorted and duplicate-free.
class FaultConfiguration {
 public:
  FaultConfiguration() = default;
  explicit FaultConfiguration(std::vector<Edge> faulty) : faulty_(std::move(faulty)) {
    std::sort(faulty_.begin(), faulty_.end());
    faulty_.erase(std::unique(faulty_.begin(), faulty_.end()), faulty_.end());
    for (const auto& e : faulty_) {
      if (e.u == e.v) throw Error(ErrorKind::kInvalidGraph, "faulty edge is a self-loop");
    }
  }

  // Bit i of mask marks g.edges()[i] faulty.
  static FaultConfiguration from_mask(const PortLabeledGraph& g, std::uint64_t mask) {
    FaultConfiguration f;
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size() && i < 64; ++i) {
      if (mask >> i & 1u) f.faulty_.push_back(edges[i]);
    }
    return f;
  }

  const std::vector<Edge>& edges() const { return faulty_; }
  std::size_t size() const { return faulty_.size(); }
  bool empty() const { return faulty_.empty(); }

  bool contains(const Edge& e) const {
    return std::binary_search(faulty_.begin(), faulty_.end(), e);
  }

  // Throws unless every faulty edge belongs to g.
  void check_against(const PortLabeledGraph& g) const {
    for (const auto& e : faulty_) {
      if (!g.has_edge(e.u, e.v)) {
        throw Error(ErrorKind::kInvalidGraph, "faulty edge {" + std::to_string(e.u) + "," +
                                                  std::to_string(e.v) + "} is not in the graph");
      }
    }
  }

  friend bool operator==(const FaultConfiguration&, const FaultConfiguration&) = default;

 private:
  std::vector<Edge> faulty_;
};

// Per-edge-index fault flags for fast lookups during execution.
class FaultMask {
 public:
  FaultMask(const PortLabeledGraph& g, const FaultConfiguration& f)
      : graph_(&g), faulty_(g.edge_count(), 0) {
    f.check_against(g);
    for (const auto& e : f.edges()) faulty_[*g.edge_index(e)] = 1;
  }

  bool faulty(NodeId u, Port p) const { return faulty_[graph_->edge_index(u, p)] != 0; }
  bool free(NodeId u, Port p) const { return !faulty(u, p); }

 private:
  const PortLabeledGraph* graph_;
  std::vector<char> faulty_;
};

struct FaultFreeComponent {
  std::vector<NodeId> nodes;      // sorted, contains the start node
  std::vector<Edge> free_edges;   // non-faulty edges with both ends inside
  std::size_t size() const { return nodes.size(); }
  bool contains(NodeId u) const { return std::binary_search(nodes.begin(), nodes.end(), u); }
};

inline FaultFreeComponent fault_free_component(const PortLabeledGraph& g,
                                               const FaultConfiguration& f, NodeId v) {
  if (v >= g.node_count()) {
    throw Error(ErrorKind::kInvalidGraph, "start node " + std::to_string(v) + " out of range");
  }
  const FaultMask mask(g, f);
  std::vector<char> in(g.node_count(), 0);
  std::vector<NodeId> queue{v};
  in[v] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    for (Port p = 1; p <= g.degree(u); ++p) {
      const NodeId w = g.follow(u, p).to;
      if (mask.free(u, p) && !in[w]) {
        in[w] = 1;
        queue.push_back(w);
      }
    }
  }
  FaultFreeComponent c;
  c.nodes = std::move(queue);
  std::sort(c.nodes.begin(), c.nodes.end());
  for (const auto& e : g.edges()) {
    if (in[e.u] && in[e.v] && !f.contains(e)) c.free_edges.push_back(e);
  }
  return c;
}

// A fault configuration on a ring seen from the start node: x free edges
// towards the predecessor before the first fault, y towards the successor.
struct EmptyRing {
  friend bool operator==(const EmptyRing&, const EmptyRing&) = default;
};
struct FaultyRing {
  std::size_t x = 0;
  std::size_t y = 0;
  friend bool operator==(const FaultyRing&, const FaultyRing&) = default;
};
using RingScenario = std::variant<EmptyRing, FaultyRing>;

inline std::string to_string(const RingScenario& s) {
  if (std::holds_alternative<EmptyRing>(s)) return "empty";
  const auto& f = std::get<FaultyRing>(s);
  return "(x=" + std::to_string(f.x) + ",y=" + std::to_string(f.y) + ")";
}

inline void check_scenario(std::size_t n, const RingScenario& s) {
  if (n < 3) throw Error(ErrorKind::kInvalidScenario, "ring size below 3");
  if (const auto* f = std::get_if<FaultyRing>(&s); f && f->x + f->y > n - 1) {
    throw Error(ErrorKind::kInvalidScenario,
                to_string(s) + " does not fit a ring of size " + std::to_string(n));
  }
}

// Node reached from v after k steps in the given ring direction.
inline NodeId ring_walk(const PortLabeledGraph& g, NodeId v, Port dir, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) v = g.follow(v, dir).to;
  return v;
}

inline RingScenario ring_scenario(const PortLabeledGraph& g, const FaultConfiguration& f,
                                  NodeId v) {
  if (!g.is_oriented_ring()) throw Error(ErrorKind::kInvalidGraph, "graph is not a ring");
  if (v >= g.node_count()) throw Error(ErrorKind::kInvalidGraph, "start node out of range");
  if (f.empty()) return EmptyRing{};
  const FaultMask mask(g, f);
  auto free_run = [&](Port dir) {
    std::size_t k = 0;
    NodeId cur = v;
    while (mask.free(cur, dir)) {
      cur = g.follow(cur, dir).to;
      ++k;
    }
    return k;
  };
  return FaultyRing{free_run(kLeftPort), free_run(kRightPort)};
}

// Canonical fault configuration realizing a scenario from start node v:
// one fault when x + y = n - 1, otherwise the two first faults.
inline FaultConfiguration ring_faults(const PortLabeledGraph& g, NodeId v,
                                      const RingScenario& s) {
  if (!g.is_oriented_ring()) throw Error(ErrorKind::kInvalidGraph, "graph is not a ring");
  check_scenario(g.node_count(), s);
  if (std::holds_alternative<EmptyRing>(s)) return {};
  const auto& sc = std::get<FaultyRing>(s);
  const NodeId left_end = ring_walk(g, v, kLeftPort, sc.x);
  const NodeId right_end = ring_walk(g, v, kRightPort, sc.y);
  std::vector<Edge> faulty{Edge(left_end, g.follow(left_end, kLeftPort).to),
                           Edge(right_end, g.follow(right_end, kRightPort).to)};
  return FaultConfiguration(std::move(faulty));
}

// Every valid scenario for a ring of size n, empty first, then by (x, y).
inline std::vector<RingScenario> all_ring_scenarios(std::size_t n) {
  std::vector<RingScenario> out{EmptyRing{}};
  for (std::size_t x = 0; x + 1 <= n; ++x)
    for (std::size_t y = 0; x + y <= n - 1; ++y) out.push_back(FaultyRing{x, y});
  return out;
}

}  // namespace faultex
