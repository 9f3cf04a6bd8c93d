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
#include <cstdio>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "faultex/error.hpp"
#include "faultex/explore.hpp"
#include "faultex/faults.hpp"
#include "faultex/graph.hpp"
#include "faultex/overhead.hpp"
#include "faultex/ratio.hpp"
#include "faultex/strategy.hpp"

namespace faultex::io {

using Json = nlohmann::ordered_json;

namespace detail {

[[noreturn]] inline void parse_error(const std::string& what) { throw Error(ErrorKind::kParse, what); }

inline Json parse_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_error(std::string("malformed JSON: ") + e.what());
  }
}

inline void only_keys(const Json& obj, std::initializer_list<std::string_view> allowed,
                      const std::string& where) {
  if (!obj.is_object()) parse_error(where + ": expected an object");
  for (const auto& [key, _] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      parse_error(where + ": unexpected key \"" + key + "\"");
    }
  }
}

inline const Json& field(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) parse_error(where + ": missing \"" + key + "\"");
  return *it;
}

inline std::int64_t integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) parse_error(where + ": expected an integer");
  return j.get<std::int64_t>();
}

inline std::size_t index_in(const Json& j, std::size_t bound, const std::string& where) {
  const auto v = integer(j, where);
  if (v < 0 || static_cast<std::size_t>(v) >= bound) {
    parse_error(where + ": " + std::to_string(v) + " out of range");
  }
  return static_cast<std::size_t>(v);
}

inline Direction direction(const Json& obj) {
  auto it = obj.find("direction");
  if (it == obj.end()) return Direction::kLeft;
  if (*it == "l") return Direction::kLeft;
  if (*it == "r") return Direction::kRight;
  parse_error("strategy direction must be \"l\" or \"r\"");
}

inline Json ratio(const ExactRatio& r) { return Json{{"num", r.num_str()}, {"den", r.den_str()}}; }

inline std::string approx(const ExactRatio& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", r.approx());
  return buf;
}

}  // namespace detail

// {"n": int, "nodes": [{"id": int, "label": str?, "ports": [{"port", "to", "toPort"}]}]}
inline Json graph_to_json(const PortLabeledGraph& g) {
  Json nodes = Json::array();
  for (NodeId u = 0; u < g.node_count(); ++u) {
    Json node{{"id", u}};
    if (g.label(u)) node["label"] = *g.label(u);
    Json ports = Json::array();
    for (Port p = 1; p <= g.degree(u); ++p) {
      const auto& t = g.follow(u, p);
      ports.push_back({{"port", p}, {"to", t.to}, {"toPort", t.to_port}});
    }
    node["ports"] = std::move(ports);
    nodes.push_back(std::move(node));
  }
  return Json{{"n", g.node_count()}, {"nodes", std::move(nodes)}};
}

inline PortLabeledGraph graph_from_json(const Json& j) {
  using namespace detail;
  only_keys(j, {"n", "nodes"}, "graph");
  const auto n_raw = integer(field(j, "n", "graph"), "graph.n");
  if (n_raw < 1) parse_error("graph.n must be positive");
  const auto n = static_cast<std::size_t>(n_raw);
  const auto& nodes = field(j, "nodes", "graph");
  if (!nodes.is_array() || nodes.size() != n) parse_error("graph.nodes must list exactly n nodes");

  PortLabeledGraph::Adjacency adj(n);
  std::vector<std::optional<std::string>> labels(n);
  std::vector<char> seen(n, 0);
  for (const auto& node : nodes) {
    only_keys(node, {"id", "label", "ports"}, "node");
    const auto id = index_in(field(node, "id", "node"), n, "node.id");
    const std::string where = "node " + std::to_string(id);
    if (seen[id]) parse_error(where + ": duplicate node id");
    seen[id] = 1;
    if (auto it = node.find("label"); it != node.end()) {
      if (!it->is_string()) parse_error(where + ": label must be a string");
      labels[id] = it->get<std::string>();
    }
    const auto& ports = field(node, "ports", where);
    if (!ports.is_array()) parse_error(where + ": ports must be an array");
    std::vector<std::optional<PortTarget>> row(ports.size());
    for (const auto& entry : ports) {
      only_keys(entry, {"port", "to", "toPort"}, where + " port entry");
      const auto p = integer(field(entry, "port", where), where + " port");
      if (p < 1 || static_cast<std::size_t>(p) > ports.size()) {
        parse_error(where + ": port " + std::to_string(p) + " outside 1.." + std::to_string(ports.size()));
      }
      const std::string pw = where + " port " + std::to_string(p);
      if (row[p - 1]) parse_error(pw + ": duplicate port number");
      const auto to = index_in(field(entry, "to", pw), n, pw + " to");
      const auto to_port = integer(field(entry, "toPort", pw), pw + " toPort");
      if (to_port < 1) parse_error(pw + ": toPort must be positive");
      row[p - 1] = PortTarget{static_cast<NodeId>(to), static_cast<Port>(to_port)};
    }
    for (const auto& t : row) adj[id].push_back(*t);
  }
  try {
    return PortLabeledGraph(std::move(adj), std::move(labels));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kInvalidGraph) parse_error(e.what());
    throw;
  }
}

inline std::string serialize_graph(const PortLabeledGraph& g) { return graph_to_json(g).dump(2); }
inline PortLabeledGraph parse_graph(std::string_view text) {
  return graph_from_json(detail::parse_text(text));
}

// {"faulty": [[u, v], ...]}
inline Json faults_to_json(const FaultConfiguration& f) {
  Json edges = Json::array();
  for (const auto& e : f.edges()) edges.push_back({e.u, e.v});
  return Json{{"faulty", std::move(edges)}};
}

inline FaultConfiguration faults_from_json(const Json& j) {
  using namespace detail;
  only_keys(j, {"faulty"}, "faults");
  const auto& list = field(j, "faulty", "faults");
  if (!list.is_array()) parse_error("faults.faulty must be an array");
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (const auto& pair : list) {
    if (!pair.is_array() || pair.size() != 2) parse_error("each faulty edge must be a pair [u, v]");
    const auto u = integer(pair[0], "faulty edge");
    const auto v = integer(pair[1], "faulty edge");
    if (u < 0 || v < 0) parse_error("faulty edge endpoints must be non-negative");
    if (u == v) parse_error("faulty edge [" + std::to_string(u) + "," + std::to_string(v) + "] is a self-loop");
    const Edge e(static_cast<NodeId>(u), static_cast<NodeId>(v));
    if (!seen.insert(e).second) parse_error("faulty edge listed twice");
    edges.push_back(e);
  }
  return FaultConfiguration(std::move(edges));
}

inline FaultConfiguration parse_faults(std::string_view text) {
  return faults_from_json(detail::parse_text(text));
}

// A single configuration, or an array of them.
inline std::vector<FaultConfiguration> parse_fault_list(std::string_view text) {
  const auto j = detail::parse_text(text);
  std::vector<FaultConfiguration> out;
  if (j.is_array()) {
    for (const auto& item : j) out.push_back(faults_from_json(item));
  } else {
    out.push_back(faults_from_json(j));
  }
  return out;
}

inline Json strategy_to_json(const StrategySpec& spec) {
  struct Visitor {
    Json operator()(const strategy::RingAlgorithm&) const { return {{"kind", "ring"}}; }
    Json operator()(const strategy::GoFirm& s) const {
      return {{"kind", "go-firm"}, {"direction", to_string(s.direction)}};
    }
    Json operator()(const strategy::ClassA0& s) const {
      return {{"kind", "class-a0"}, {"direction", to_string(s.direction)}};
    }
    Json operator()(const strategy::IStepA1& s) const {
      return {{"kind", "istep-a1"}, {"i", s.steps}, {"direction", to_string(s.direction)}};
    }
    Json operator()(const strategy::GeneralAk& s) const {
      return {{"kind", "general-ak"}, {"zs", s.zs}, {"direction", to_string(s.direction)}};
    }
    Json operator()(const strategy::DfsAlpha& s) const {
      if (!s.orders) return {{"kind", "dfs"}, {"alpha", "increasing"}};
      return {{"kind", "dfs"}, {"alpha", *s.orders}};
    }
  };
  return std::visit(Visitor{}, spec);
}

inline StrategySpec strategy_from_json(const Json& j) {
  using namespace detail;
  if (!j.is_object()) parse_error("strategy must be an object");
  const auto& kind_j = field(j, "kind", "strategy");
  if (!kind_j.is_string()) parse_error("strategy.kind must be a string");
  const auto kind = kind_j.get<std::string>();
  if (kind == "ring") {
    only_keys(j, {"kind"}, "strategy");
    return strategy::RingAlgorithm{};
  }
  if (kind == "go-firm") {
    only_keys(j, {"kind", "direction"}, "strategy");
    return strategy::GoFirm{direction(j)};
  }
  if (kind == "class-a0") {
    only_keys(j, {"kind", "direction"}, "strategy");
    return strategy::ClassA0{direction(j)};
  }
  if (kind == "istep-a1") {
    only_keys(j, {"kind", "i", "direction"}, "strategy");
    const auto i = integer(field(j, "i", "strategy"), "strategy.i");
    if (i < 1) throw Error(ErrorKind::kInvalidStrategy, "0-step strategies are not allowed");
    return strategy::IStepA1{static_cast<std::size_t>(i), direction(j)};
  }
  if (kind == "general-ak") {
    only_keys(j, {"kind", "zs", "direction"}, "strategy");
    const auto& zs_j = field(j, "zs", "strategy");
    if (!zs_j.is_array()) parse_error("strategy.zs must be an array");
    std::vector<std::size_t> zs;
    for (const auto& z : zs_j) {
      const auto v = integer(z, "strategy.zs");
      if (v < 1) throw Error(ErrorKind::kInvalidStrategy, "z-values must be positive");
      zs.push_back(static_cast<std::size_t>(v));
    }
    check_z_sequence(zs);
    return strategy::GeneralAk{std::move(zs), direction(j)};
  }
  if (kind == "dfs") {
    only_keys(j, {"kind", "alpha"}, "strategy");
    auto it = j.find("alpha");
    if (it == j.end() || *it == "increasing") return strategy::DfsAlpha{};
    if (!it->is_array()) parse_error("strategy.alpha must be \"increasing\" or an array of port lists");
    PortOrders orders;
    for (const auto& row : *it) {
      if (!row.is_array()) parse_error("strategy.alpha rows must be arrays");
      std::vector<Port> ports;
      for (const auto& p : row) {
        const auto v = integer(p, "strategy.alpha");
        if (v < 1) throw Error(ErrorKind::kInvalidStrategy, "port numbers start at 1");
        ports.push_back(static_cast<Port>(v));
      }
      orders.push_back(std::move(ports));
    }
    return strategy::DfsAlpha{std::move(orders)};
  }
  parse_error("unknown strategy kind \"" + kind + "\"");
}

inline StrategySpec parse_strategy(std::string_view text) {
  return strategy_from_json(detail::parse_text(text));
}

// {"start": int, "moves": [{"from", "port", "to"}], "cost": int, "completed": bool}
inline Json trace_to_json(const ExplorationTrace& t) {
  Json moves = Json::array();
  for (const auto& m : t.moves) moves.push_back({{"from", m.from}, {"port", m.port}, {"to", m.to}});
  return Json{{"start", t.start}, {"moves", std::move(moves)}, {"cost", t.cost}, {"completed", t.completed}};
}

inline ExplorationTrace trace_from_json(const Json& j) {
  using namespace detail;
  only_keys(j, {"start", "moves", "cost", "completed"}, "trace");
  ExplorationTrace t;
  const auto start = integer(field(j, "start", "trace"), "trace.start");
  if (start < 0) parse_error("trace.start must be non-negative");
  t.start = static_cast<NodeId>(start);
  t.visit_order.push_back(t.start);
  std::set<NodeId> seen{t.start};
  const auto& moves = field(j, "moves", "trace");
  if (!moves.is_array()) parse_error("trace.moves must be an array");
  for (const auto& m : moves) {
    only_keys(m, {"from", "port", "to"}, "move");
    const auto from = integer(field(m, "from", "move"), "move.from");
    const auto port = integer(field(m, "port", "move"), "move.port");
    const auto to = integer(field(m, "to", "move"), "move.to");
    if (from < 0 || port < 1 || to < 0) parse_error("move fields out of range");
    t.moves.push_back({static_cast<NodeId>(from), static_cast<Port>(port), static_cast<NodeId>(to)});
    if (seen.insert(static_cast<NodeId>(to)).second) t.visit_order.push_back(static_cast<NodeId>(to));
  }
  const auto cost = integer(field(j, "cost", "trace"), "trace.cost");
  if (cost < 0) parse_error("trace.cost must be non-negative");
  t.cost = static_cast<std::size_t>(cost);
  const auto& completed = field(j, "completed", "trace");
  if (!completed.is_boolean()) parse_error("trace.completed must be a boolean");
  t.completed = completed.get<bool>();
  return t;
}

inline Json ratio_to_json(const ExactRatio& r) { return detail::ratio(r); }

inline Json report_to_json(const OverheadReport& r) {
  Json j{{"strategy", strategy_to_json(r.strategy)},
         {"graph", r.graph},
         {"start", r.start},
         {"family", r.family},
         {"overhead", detail::ratio(r.overhead)},
         {"approx", detail::approx(r.overhead)},
         {"witness", faults_to_json(r.witness.faults)},
         {"witnessCost", r.witness.cost},
         {"witnessOpt", r.witness.opt},
         {"configurations", r.configs_evaluated}};
  if (r.per_config) {
    Json rows = Json::array();
    for (const auto& o : *r.per_config) {
      rows.push_back({{"faulty", faults_to_json(o.faults)["faulty"]},
                      {"cost", o.cost},
                      {"opt", o.opt},
                      {"ratio", detail::ratio(o.ratio)}});
    }
    j["perConfig"] = std::move(rows);
  }
  return j;
}

}  // namespace faultex::io
