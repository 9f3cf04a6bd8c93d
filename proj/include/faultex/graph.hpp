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
#include <utility>
#include <vector>

#include "faultex/error.hpp"

namespace faultex {

// Nodes are 0-based indices; external labels are presentation-only.
using NodeId = std::uint32_t;
// Ports at a node of degree d are numbered 1..d.
using Port = std::uint32_t;

inline constexpr Port kLeftPort = 1;   // predecessor on a ring
inline constexpr Port kRightPort = 2;  // successor on a ring

// Undirected edge in canonical form (u < v).
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  Edge() = default;
  Edge(NodeId a, NodeId b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct PortTarget {
  NodeId to = 0;
  Port to_port = 0;

  friend bool operator==(const PortTarget&, const PortTarget&) = default;
};

// Simple connected undirected graph with a port numbering at every node.
// Construction validates all invariants; instances are immutable.
class PortLabeledGraph {
 public:
  using Adjacency = std::vector<std::vector<PortTarget>>;

  PortLabeledGraph() = default;

  // adjacency[u][p - 1] is where port p at u leads.
  explicit PortLabeledGraph(Adjacency adjacency,
                            std::vector<std::optional<std::string>> labels = {},
                            std::string descriptor = {})
      : adj_(std::move(adjacency)),
        labels_(std::move(labels)),
        descriptor_(std::move(descriptor)) {
    if (labels_.empty()) labels_.resize(adj_.size());
    validate();
    index_edges();
    if (descriptor_.empty()) {
      descriptor_ = "graph(n=" + std::to_string(node_count()) +
                    ",edges=" + std::to_string(edge_count()) + ")";
    }
  }

  std::size_t node_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t degree(NodeId u) const { return adj_.at(u).size(); }

  const PortTarget& follow(NodeId u, Port p) const {
    return adj_.at(u).at(p - 1);
  }

  const std::vector<PortTarget>& ports(NodeId u) const { return adj_.at(u); }

  std::optional<Port> port_to(NodeId u, NodeId v) const {
    const auto& row = adj_.at(u);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i].to == v) return static_cast<Port>(i + 1);
    }
    return std::nullopt;
  }

  bool has_edge(NodeId u, NodeId v) const {
    return u < node_count() && v < node_count() && port_to(u, v).has_value();
  }

  // Edges sorted lexicographically; the position is the edge index.
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t edge_index(NodeId u, Port p) const {
    return edge_ids_.at(u).at(p - 1);
  }

  std::optional<std::size_t> edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  const std::optional<std::string>& label(NodeId u) const {
    return labels_.at(u);
  }

  const std::string& descriptor() const { return descriptor_; }

  // True for a cycle whose port 2 always leads to the successor and port 1
  // to the predecessor, i.e. the orientation ring strategies rely on.
  bool is_oriented_ring() const {
    const auto n = node_count();
    if (n < 3) return false;
    for (NodeId u = 0; u < n; ++u) {
      if (degree(u) != 2) return false;
      const auto& r = follow(u, kRightPort);
      if (r.to_port != kLeftPort) return false;
    }
    // One orbit of the successor map must cover every node.
    NodeId cur = 0;
    for (std::size_t i = 1; i < n; ++i) {
      cur = follow(cur, kRightPort).to;
      if (cur == 0) return false;
    }
    return follow(cur, kRightPort).to == 0;
  }

  friend bool operator==(const PortLabeledGraph& a, const PortLabeledGraph& b) {
    return a.adj_ == b.adj_ && a.labels_ == b.labels_;
  }

 private:
  void validate() const {
    const auto n = adj_.size();
    if (n == 0) throw Error(ErrorKind::kInvalidGraph, "graph has no nodes");
    if (labels_.size() != n) {
      throw Error(ErrorKind::kInvalidGraph, "label count differs from node count");
    }
    for (NodeId u = 0; u < n; ++u) {
      const auto& row = adj_[u];
      std::vector<NodeId> seen;
      for (std::size_t i = 0; i < row.size(); ++i) {
        const Port p = static_cast<Port>(i + 1);
        const auto& t = row[i];
        const std::string where =
            "node " + std::to_string(u) + " port " + std::to_string(p);
        if (t.to >= n) throw Error(ErrorKind::kInvalidGraph, where + ": neighbor out of range");
        if (t.to == u) throw Error(ErrorKind::kInvalidGraph, where + ": self-loop");
        if (t.to_port < 1 || t.to_port > adj_[t.to].size()) {
          throw Error(ErrorKind::kInvalidGraph, where + ": reciprocal port out of range");
        }
        const auto& back = adj_[t.to][t.to_port - 1];
        if (back.to != u || back.to_port != p) {
          throw Error(ErrorKind::kInvalidGraph, where + ": asymmetric ports");
        }
        seen.push_back(t.to);
      }
      std::sort(seen.begin(), seen.end());
      if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
        throw Error(ErrorKind::kInvalidGraph,
                    "node " + std::to_string(u) + ": parallel edges");
      }
    }
    std::vector<char> reached(n, 0);
    std::vector<NodeId> stack{0};
    reached[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (const auto& t : adj_[u]) {
        if (!reached[t.to]) {
          reached[t.to] = 1;
          ++count;
          stack.push_back(t.to);
        }
      }
    }
    if (count != n) {
      for (NodeId u = 0; u < n; ++u) {
        if (!reached[u]) {
          throw Error(ErrorKind::kInvalidGraph,
                      "graph is disconnected at node " + std::to_string(u));
        }
      }
    }
  }

  void index_edges() {
    for (NodeId u = 0; u < adj_.size(); ++u) {
      for (const auto& t : adj_[u]) {
        if (u < t.to) edges_.emplace_back(u, t.to);
      }
    }
    std::sort(edges_.begin(), edges_.end());
    edge_ids_.resize(adj_.size());
    for (NodeId u = 0; u < adj_.size(); ++u) {
      for (const auto& t : adj_[u]) {
        edge_ids_[u].push_back(*edge_index(Edge(u, t.to)));
      }
    }
  }

  Adjacency adj_;
  std::vector<std::optional<std::string>> labels_;
  std::string descriptor_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> edge_ids_;
};

// Builds a graph from neighbor lists, numbering each node's ports in the
// order its neighbors are listed.
inline PortLabeledGraph from_neighbor_lists(
    const std::vector<std::vector<NodeId>>& neighbors, std::string descriptor = {}) {
  const auto n = neighbors.size();
  PortLabeledGraph::Adjacency adj(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId w : neighbors[u]) {
      if (w >= n) throw Error(ErrorKind::kInvalidGraph, "neighbor out of range");
      const auto& back = neighbors[w];
      auto it = std::find(back.begin(), back.end(), u);
      if (it == back.end()) {
        throw Error(ErrorKind::kInvalidGraph,
                    "edge " + std::to_string(u) + "-" + std::to_string(w) +
                        " is missing its reverse entry");
      }
      adj[u].push_back({w, static_cast<Port>(it - back.begin() + 1)});
    }
  }
  return PortLabeledGraph(std::move(adj), {}, std::move(descriptor));
}

// Ports numbered by ascending neighbor index.
inline PortLabeledGraph from_edge_list(std::size_t n, const std::vector<Edge>& edges,
                                       std::string descriptor = {}) {
  std::vector<std::vector<NodeId>> nb(n);
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) throw Error(ErrorKind::kInvalidGraph, "edge endpoint out of range");
    nb[e.u].push_back(e.v);
    nb[e.v].push_back(e.u);
  }
  for (auto& row : nb) std::sort(row.begin(), row.end());
  return from_neighbor_lists(nb, std::move(descriptor));
}

// Cycle v_0 .. v_{n-1}; port 1 leads to the predecessor, port 2 to the
// successor at every node.
inline PortLabeledGraph build_ring(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::kInvalidSize, "ring needs n >= 3, got " + std::to_string(n));
  PortLabeledGraph::Adjacency adj(n);
  for (NodeId u = 0; u < n; ++u) {
    const NodeId pred = static_cast<NodeId>((u + n - 1) % n);
    const NodeId succ = static_cast<NodeId>((u + 1) % n);
    adj[u] = {{pred, kRightPort}, {succ, kLeftPort}};
  }
  return PortLabeledGraph(std::move(adj), {}, "ring(" + std::to_string(n) + ")");
}

inline PortLabeledGraph build_complete(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::kInvalidSize, "complete graph needs n >= 3");
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return from_edge_list(n, edges, "complete(" + std::to_string(n) + ")");
}

inline PortLabeledGraph build_hypercube(std::size_t d) {
  if (d < 2) throw Error(ErrorKind::kInvalidSize, "hypercube needs d >= 2");
  if (d > 20) throw Error(ErrorKind::kInvalidSize, "hypercube dimension too large");
  const std::size_t n = std::size_t{1} << d;
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (std::size_t k = 0; k < d; ++k) {
      const NodeId v = u ^ static_cast<NodeId>(std::size_t{1} << k);
      if (u < v) edges.emplace_back(u, v);
    }
  return from_edge_list(n, edges, "hypercube(" + std::to_string(d) + ")");
}

// rows x cols wrap-around grid; node (r, c) has index r * cols + c.
inline PortLabeledGraph build_torus(std::size_t rows, std::size_t cols) {
  if (rows < 3 || cols < 3) throw Error(ErrorKind::kInvalidSize, "torus needs rows, cols >= 3");
  if (rows % 2 != 0 && cols % 2 != 0) {
    throw Error(ErrorKind::kInvalidSize, "torus needs an even dimension to be Hamiltonian");
  }
  std::vector<Edge> edges;
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<NodeId>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      edges.emplace_back(id(r, c), id(r, (c + 1) % cols));
      edges.emplace_back(id(r, c), id((r + 1) % rows, c));
    }
  return from_edge_list(rows * cols, edges,
                        "torus(" + std::to_string(rows) + "x" + std::to_string(cols) + ")");
}

}  // namespace faultex
