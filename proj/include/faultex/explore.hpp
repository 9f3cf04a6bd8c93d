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
#include <deque>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "faultex/error.hpp"
#include "faultex/faults.hpp"
#include "faultex/graph.hpp"
#include "faultex/strategy.hpp"

namespace faultex {

struct Move {
  NodeId from = 0;
  Port port = 0;
  NodeId to = 0;
  friend bool operator==(const Move&, const Move&) = default;
};

struct ExplorationTrace {
  NodeId start = 0;
  std::vector<Move> moves;
  std::size_t cost = 0;
  std::vector<NodeId> visit_order;
  bool completed = false;
};

class Executor;

// Everything a strategy may observe: the map, its own position and history,
// and the fault status of ports at nodes it has already visited.
class AgentView {
 public:
  const PortLabeledGraph& map() const { return *graph_; }
  NodeId start() const { return start_; }
  NodeId position() const { return position_; }
  bool visited(NodeId u) const { return visited_.at(u) != 0; }
  std::size_t visited_count() const { return visited_count_; }
  std::size_t moves_made() const { return moves_made_; }

  // Port p at the current node. Always revealed.
  bool port_free(Port p) const { return port_free(position_, p); }

  // Port p at node u; revealed once either endpoint of its edge was visited.
  bool port_free(NodeId u, Port p) const {
    if (p < 1 || p > graph_->degree(u)) {
      throw Error(ErrorKind::kInvalidStrategy,
                  "port " + std::to_string(p) + " does not exist at node " + std::to_string(u));
    }
    if (!visited(u) && !visited(graph_->follow(u, p).to)) {
      throw Error(ErrorKind::kObservation, "strategy read the unrevealed status of port " +
                                               std::to_string(p) + " at node " + std::to_string(u));
    }
    return faults_->free(u, p);
  }

 private:
  friend class Executor;
  AgentView(const PortLabeledGraph& g, const FaultMask& faults, NodeId start)
      : graph_(&g), faults_(&faults), start_(start), position_(start),
        visited_(g.node_count(), 0) {}

  const PortLabeledGraph* graph_;
  const FaultMask* faults_;
  NodeId start_;
  NodeId position_;
  std::vector<char> visited_;
  std::size_t visited_count_ = 0;
  std::size_t moves_made_ = 0;
};

// A strategy is a decision procedure: given what it has observed, which port
// to take next (nullopt to stop). Movement, revelation and termination
// belong to the executor.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::optional<Port> next_port(const AgentView& view) = 0;
};

struct ExecuteOptions {
  std::size_t max_moves = 0;  // 0: 8 n^2 + 16
};

class Executor {
 public:
  Executor(const PortLabeledGraph& g, const FaultConfiguration& f, NodeId start)
      : graph_(g), faults_(g, f), component_(fault_free_component(g, f, start)), start_(start) {}

  ExplorationTrace run(Strategy& strategy, ExecuteOptions options = {}) const {
    const auto n = graph_.node_count();
    const std::size_t max_moves = options.max_moves ? options.max_moves : 8 * n * n + 16;
    AgentView view(graph_, faults_, start_);
    ExplorationTrace trace;
    trace.start = start_;
    auto arrive = [&](NodeId u) {
      view.position_ = u;
      if (!view.visited_[u]) {
        view.visited_[u] = 1;
        ++view.visited_count_;
        trace.visit_order.push_back(u);
      }
    };
    arrive(start_);
    // Coverage is checked before every decision, so the trace ends on the
    // move that first completes it.
    while (view.visited_count_ < component_.size() && trace.moves.size() < max_moves) {
      const auto port = strategy.next_port(view);
      if (!port) break;
      const NodeId from = view.position_;
      if (*port < 1 || *port > graph_.degree(from)) {
        throw Error(ErrorKind::kInvalidStrategy, "port " + std::to_string(*port) +
                                                     " does not exist at node " + std::to_string(from));
      }
      if (faults_.faulty(from, *port)) {
        throw Error(ErrorKind::kInvalidStrategy, "strategy tried to cross the faulty port " +
                                                     std::to_string(*port) + " at node " +
                                                     std::to_string(from));
      }
      const NodeId to = graph_.follow(from, *port).to;
      trace.moves.push_back({from, *port, to});
      ++view.moves_made_;
      arrive(to);
    }
    trace.cost = trace.moves.size();
    trace.completed = view.visited_count_ == component_.size();
    return trace;
  }

  const FaultFreeComponent& component() const { return component_; }

 private:
  const PortLabeledGraph& graph_;
  FaultMask faults_;
  FaultFreeComponent component_;
  NodeId start_;
};

namespace detail {

// Queue of resumable ring procedures (GO-FIRM, GO-AT-DISTANCE and scripted
// class-A_k walks).
class RingProgram : public Strategy {
 public:
  std::optional<Port> next_port(const AgentView& view) final {
    if (!started_) {
      started_ = true;
      begin(view);
    }
    while (!queue_.empty()) {
      if (auto p = advance(queue_.front(), view)) return p;
      const Step done = queue_.front();
      queue_.pop_front();
      finished(done);
    }
    return std::nullopt;
  }

 protected:
  enum class Kind { kGoFirm, kGoAtDistance, kScripted };
  struct Step {
    Kind kind = Kind::kGoFirm;
    Direction dir = Direction::kLeft;
    std::size_t limit = 0;
    std::size_t travelled = 0;
    bool flag = false;  // GO-AT-DISTANCE: b; scripted: a fault cut the walk short
  };

  static Step go_firm(Direction d) { return {Kind::kGoFirm, d}; }
  static Step go_at_distance(std::size_t s, Direction d) { return {Kind::kGoAtDistance, d, s}; }
  static Step scripted(std::size_t edges, Direction d) { return {Kind::kScripted, d, edges}; }

  virtual void begin(const AgentView& view) = 0;
  virtual void on_distance_result(bool /*b*/) {}

  // Shared opening of class-A_k strategies: a fault seen at the start node
  // closes that side, so the agent goes firm the other way.
  bool open_one_sided(const AgentView& view) {
    const bool left = view.port_free(kLeftPort);
    const bool right = view.port_free(kRightPort);
    if (left && right) return false;
    if (left) queue_.push_back(go_firm(Direction::kLeft));
    if (right) queue_.push_back(go_firm(Direction::kRight));
    return true;
  }

  std::deque<Step> queue_;

 private:
  static std::optional<Port> advance(Step& s, const AgentView& view) {
    const Port p = port_of(s.dir);
    const bool free = view.port_free(p);
    switch (s.kind) {
      case Kind::kGoFirm:
        if (free && view.visited_count() < view.map().node_count()) return p;
        return std::nullopt;
      case Kind::kGoAtDistance:
        if (free && s.travelled < s.limit) {
          ++s.travelled;
          return p;
        }
        s.flag = free;
        return std::nullopt;
      case Kind::kScripted:
        if (!free) {
          s.flag = true;
          return std::nullopt;
        }
        if (s.travelled < s.limit) {
          ++s.travelled;
          return p;
        }
        return std::nullopt;
    }
    return std::nullopt;
  }

  void finished(const Step& s) {
    if (s.kind == Kind::kGoAtDistance) on_distance_result(s.flag);
    if (s.kind == Kind::kScripted && s.flag) {
      // Fault met during the scripted phase: return and go firm.
      queue_.clear();
      queue_.push_back(go_firm(opposite(s.dir)));
    }
  }

  bool started_ = false;
};

class RingAlgorithmStrategy final : public RingProgram {
 private:
  void begin(const AgentView& view) override {
    const auto n = view.map().node_count();
    if (!view.port_free(kLeftPort)) {
      queue_.push_back(go_firm(Direction::kRight));
    } else if (!view.port_free(kRightPort)) {
      queue_.push_back(go_firm(Direction::kLeft));
    } else if (n <= 5) {
      queue_.push_back(go_firm(Direction::kLeft));
      queue_.push_back(go_firm(Direction::kRight));
    } else {
      queue_.push_back(go_at_distance(n <= 19 ? 1 : 2, Direction::kLeft));
    }
  }

  void on_distance_result(bool b) override {
    queue_.push_back(go_firm(Direction::kRight));
    if (b) queue_.push_back(go_firm(Direction::kLeft));
  }
};

class GoFirmStrategy final : public RingProgram {
 public:
  explicit GoFirmStrategy(Direction d) : dir_(d) {}

 private:
  void begin(const AgentView&) override { queue_.push_back(go_firm(dir_)); }
  Direction dir_;
};

// Class A_k with k = zs.size() scripted returns; k = 0 is the class-A0
// sweep d-then-back.
class ClassAkStrategy final : public RingProgram {
 public:
  ClassAkStrategy(std::vector<std::size_t> zs, Direction d) : zs_(std::move(zs)), dir_(d) {}

 private:
  void begin(const AgentView& view) override {
    if (open_one_sided(view)) return;
    Direction dir = dir_;
    std::size_t previous = 0;
    for (std::size_t z : zs_) {
      queue_.push_back(scripted(previous + z, dir));
      previous = z;
      dir = opposite(dir);
    }
    queue_.push_back(go_firm(dir));
    queue_.push_back(go_firm(opposite(dir)));
  }

  std::vector<std::size_t> zs_;
  Direction dir_;
};

class DfsStrategy final : public Strategy {
 public:
  explicit DfsStrategy(PortOrders orders) : orders_(std::move(orders)) {}

  std::optional<Port> next_port(const AgentView& view) override {
    if (!started_) {
      started_ = true;
      stack_.push_back({view.start(), 0, std::nullopt});
    }
    while (!stack_.empty()) {
      Frame& top = stack_.back();
      const auto& order = orders_[top.node];
      while (top.next < order.size()) {
        const Port p = order[top.next++];
        if (!view.port_free(p)) continue;
        const auto& target = view.map().follow(top.node, p);
        if (view.visited(target.to)) continue;
        stack_.push_back({target.to, 0, target.to_port});
        return p;
      }
      const auto back = top.back;
      stack_.pop_back();
      if (back) return back;
    }
    return std::nullopt;
  }

 private:
  struct Frame {
    NodeId node;
    std::size_t next;
    std::optional<Port> back;
  };
  PortOrders orders_;
  std::vector<Frame> stack_;
  bool started_ = false;
};

}  // namespace detail

inline std::unique_ptr<Strategy> make_strategy(const StrategySpec& spec, const PortLabeledGraph& g) {
  if (is_ring_strategy(spec) && !g.is_oriented_ring()) {
    throw Error(ErrorKind::kInvalidStrategy, to_string(spec) + " needs a ring, got " + g.descriptor());
  }
  const StrategySpec normalized = is_ring_strategy(spec) ? normalize(spec, g.node_count()) : spec;
  struct Visitor {
    const PortLabeledGraph& g;
    std::unique_ptr<Strategy> operator()(const strategy::RingAlgorithm&) const {
      return std::make_unique<detail::RingAlgorithmStrategy>();
    }
    std::unique_ptr<Strategy> operator()(const strategy::GoFirm& s) const {
      return std::make_unique<detail::GoFirmStrategy>(s.direction);
    }
    std::unique_ptr<Strategy> operator()(const strategy::ClassA0& s) const {
      return std::make_unique<detail::ClassAkStrategy>(std::vector<std::size_t>{}, s.direction);
    }
    std::unique_ptr<Strategy> operator()(const strategy::IStepA1& s) const {
      return std::make_unique<detail::ClassAkStrategy>(std::vector<std::size_t>{s.steps}, s.direction);
    }
    std::unique_ptr<Strategy> operator()(const strategy::GeneralAk& s) const {
      return std::make_unique<detail::ClassAkStrategy>(s.zs, s.direction);
    }
    std::unique_ptr<Strategy> operator()(const strategy::DfsAlpha& s) const {
      PortOrders orders = s.orders ? *s.orders : increasing_orders(g);
      check_orders(g, orders);
      return std::make_unique<detail::DfsStrategy>(std::move(orders));
    }
  };
  return std::visit(Visitor{g}, normalized);
}

inline ExplorationTrace execute(const PortLabeledGraph& g, const FaultConfiguration& f, NodeId v,
                                Strategy& strategy, ExecuteOptions options = {}) {
  return Executor(g, f, v).run(strategy, options);
}

inline ExplorationTrace execute(const PortLabeledGraph& g, const FaultConfiguration& f, NodeId v,
                                const StrategySpec& spec, ExecuteOptions options = {}) {
  auto strategy = make_strategy(spec, g);
  return execute(g, f, v, *strategy, options);
}

struct TraceCheck {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

// Independent re-check of a trace against the ground truth.
inline TraceCheck validate_trace(const PortLabeledGraph& g, const FaultConfiguration& f, NodeId v,
                                 const ExplorationTrace& trace) {
  auto fail = [](std::string why) { return TraceCheck{false, std::move(why)}; };
  if (trace.start != v) return fail("trace starts at the wrong node");
  if (trace.cost != trace.moves.size()) return fail("cost differs from the number of moves");
  const auto component = fault_free_component(g, f, v);
  std::vector<char> seen(g.node_count(), 0);
  std::vector<NodeId> order{v};
  seen[v] = 1;
  std::size_t covered = 1;
  NodeId at = v;
  for (std::size_t t = 0; t < trace.moves.size(); ++t) {
    const auto& m = trace.moves[t];
    const std::string step = "move " + std::to_string(t) + ": ";
    if (covered == component.size()) return fail(step + "made after coverage was complete");
    if (m.from != at) return fail(step + "does not continue from the previous move");
    if (m.port < 1 || m.port > g.degree(m.from)) return fail(step + "port does not exist");
    if (g.follow(m.from, m.port).to != m.to) return fail(step + "port leads elsewhere");
    if (f.contains(Edge(m.from, m.to))) return fail(step + "crosses a faulty edge");
    at = m.to;
    if (!seen[at]) {
      seen[at] = 1;
      ++covered;
      order.push_back(at);
    }
  }
  if (order != trace.visit_order) return fail("visit order does not match the moves");
  if (trace.completed != (covered == component.size())) {
    return fail("completed flag disagrees with coverage");
  }
  return {};
}

// Re-runs the strategy against a configuration that agrees with f on every
// edge the trace revealed and flips every other edge; a strategy that only
// uses revealed information must repeat the same moves.
inline TraceCheck check_observation_discipline(const PortLabeledGraph& g, const FaultConfiguration& f,
                                               NodeId v, const StrategySpec& spec,
                                               const ExplorationTrace& trace) {
  std::vector<char> seen(g.node_count(), 0);
  seen[v] = 1;
  for (const auto& m : trace.moves) seen[m.to] = 1;
  std::vector<Edge> flipped;
  for (const auto& e : g.edges()) {
    const bool revealed = seen[e.u] || seen[e.v];
    if (f.contains(e) == revealed) flipped.push_back(e);
  }
  const auto replay = execute(g, FaultConfiguration(std::move(flipped)), v, spec);
  if (replay.moves.size() < trace.moves.size()) {
    return {false, "replay with masked faults stopped early"};
  }
  for (std::size_t t = 0; t < trace.moves.size(); ++t) {
    if (!(replay.moves[t] == trace.moves[t])) {
      return {false, "decision " + std::to_string(t) + " depended on unrevealed faults"};
    }
  }
  return {};
}

}  // namespace faultex
