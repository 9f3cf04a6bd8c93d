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
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "faultex/closed_forms.hpp"
#include "faultex/error.hpp"
#include "faultex/explore.hpp"
#include "faultex/faults.hpp"
#include "faultex/graph.hpp"
#include "faultex/hamiltonian.hpp"
#include "faultex/opt.hpp"
#include "faultex/ratio.hpp"
#include "faultex/strategy.hpp"

namespace faultex {

namespace family {
struct FullPowerset {};
struct RingScenarios {};
struct ExplicitList {
  std::vector<FaultConfiguration> configs;
};
}  // namespace family

using ScenarioFamily = std::variant<family::FullPowerset, family::RingScenarios, family::ExplicitList>;

inline std::string to_string(const ScenarioFamily& f) {
  if (std::holds_alternative<family::FullPowerset>(f)) return "powerset";
  if (std::holds_alternative<family::RingScenarios>(f)) return "ring-scenarios";
  return "list";
}

enum class OptMethod {
  kAuto,            // closed form on rings, covering-walk search elsewhere
  kCoveringWalk,
  kRingClosedForm,
};

struct OverheadOptions {
  std::size_t max_powerset_edges = 22;
  OptBudget opt_budget;
  OptMethod opt = OptMethod::kAuto;
  unsigned workers = 0;  // 0: hardware concurrency
  bool keep_per_config = false;
  std::function<void(std::size_t done, std::size_t total)> progress;
};

struct ConfigOutcome {
  FaultConfiguration faults;
  std::size_t cost = 0;
  std::size_t opt = 0;
  ExactRatio ratio;
};

struct OverheadReport {
  StrategySpec strategy;
  std::string graph;
  NodeId start = 0;
  std::string family;
  ExactRatio overhead;
  ConfigOutcome witness;
  std::size_t configs_evaluated = 0;
  std::optional<std::vector<ConfigOutcome>> per_config;
};

// cost / opt, with the isolated-start case (opt = 0, cost = 0) counted as 1.
inline ExactRatio exploration_ratio(std::size_t cost, std::size_t opt) {
  if (opt == 0) {
    if (cost != 0) throw Error(ErrorKind::kInvalidStrategy, "nonzero cost on a single-node component");
    return 1;
  }
  return {static_cast<std::int64_t>(cost), static_cast<std::int64_t>(opt)};
}

inline ConfigOutcome evaluate_config(const PortLabeledGraph& g, NodeId v, const StrategySpec& spec,
                                     const FaultConfiguration& f, OptMethod method, OptBudget budget) {
  const auto trace = execute(g, f, v, spec);
  if (!trace.completed) {
    throw Error(ErrorKind::kInvalidStrategy, to_string(spec) + " does not finish exploring " +
                                                 g.descriptor() + " from node " + std::to_string(v));
  }
  if (method == OptMethod::kAuto) {
    method = g.is_oriented_ring() ? OptMethod::kRingClosedForm : OptMethod::kCoveringWalk;
  }
  const std::size_t opt = method == OptMethod::kRingClosedForm
                              ? opt_ring(g.node_count(), ring_scenario(g, f, v)).cost
                              : opt_covering_walk(g, f, v, budget).cost;
  return {f, trace.cost, opt, exploration_ratio(trace.cost, opt)};
}

namespace detail {

// Evaluates configs [0, count) in parallel and keeps the maximum ratio; ties
// go to the lowest index so the result does not depend on scheduling.
template <typename MakeConfig>
OverheadReport max_over_family(const PortLabeledGraph& g, NodeId v, const StrategySpec& spec,
                               std::size_t count, MakeConfig make_config,
                               const OverheadOptions& options) {
  if (count == 0) throw Error(ErrorKind::kInvalidScenario, "empty scenario family");
  // Fail fast on strategy/graph mismatches before spawning workers.
  make_strategy(spec, g);

  unsigned workers = options.workers ? options.workers : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::size_t>(count, 64))));

  struct Best {
    std::optional<std::size_t> index;
    std::optional<ConfigOutcome> outcome;
  };
  std::vector<Best> best(workers);
  std::vector<std::optional<ConfigOutcome>> all;
  if (options.keep_per_config) all.resize(count);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex error_mutex;
  std::optional<std::size_t> error_index;
  std::exception_ptr error;

  auto work = [&](unsigned id) {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        auto outcome = evaluate_config(g, v, spec, make_config(i), options.opt, options.opt_budget);
        auto& b = best[id];
        if (!b.outcome || b.outcome->ratio < outcome.ratio ||
            (b.outcome->ratio == outcome.ratio && i < *b.index)) {
          b.index = i;
          b.outcome = outcome;
        }
        if (options.keep_per_config) all[i] = std::move(outcome);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error_index || i < *error_index) {
          error_index = i;
          error = std::current_exception();
        }
        next.store(count);
        return;
      }
      const auto d = done.fetch_add(1) + 1;
      if (options.progress && id == 0) options.progress(d, count);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  if (options.progress) options.progress(count, count);

  const Best* winner = nullptr;
  for (const auto& b : best) {
    if (!b.outcome) continue;
    if (!winner || winner->outcome->ratio < b.outcome->ratio ||
        (winner->outcome->ratio == b.outcome->ratio && *b.index < *winner->index)) {
      winner = &b;
    }
  }
  OverheadReport report;
  report.strategy = spec;
  report.graph = g.descriptor();
  report.start = v;
  report.overhead = winner->outcome->ratio;
  report.witness = *winner->outcome;
  report.configs_evaluated = count;
  if (options.keep_per_config) {
    report.per_config.emplace();
    for (auto& o : all) report.per_config->push_back(std::move(*o));
  }
  return report;
}

}  // namespace detail

// Worst case of cost / opt over the chosen family of fault configurations.
inline OverheadReport overhead(const PortLabeledGraph& g, NodeId v, const StrategySpec& spec,
                               const ScenarioFamily& fam, const OverheadOptions& options = {}) {
  if (v >= g.node_count()) throw Error(ErrorKind::kInvalidGraph, "start node out of range");
  OverheadReport report;
  if (std::holds_alternative<family::FullPowerset>(fam)) {
    const auto m = g.edge_count();
    if (m > options.max_powerset_edges || m > 40) {
      throw Error(ErrorKind::kBudgetExceeded,
                  "powerset over " + std::to_string(m) + " edges exceeds the budget of " +
                      std::to_string(options.max_powerset_edges) +
                      "; use ring-scenarios or an explicit list");
    }
    const std::size_t count = std::size_t{1} << m;
    report = detail::max_over_family(
        g, v, spec, count, [&](std::size_t i) { return FaultConfiguration::from_mask(g, i); }, options);
  } else if (std::holds_alternative<family::RingScenarios>(fam)) {
    if (!g.is_oriented_ring()) throw Error(ErrorKind::kInvalidGraph, "ring scenarios need a ring");
    const auto scenarios = all_ring_scenarios(g.node_count());
    report = detail::max_over_family(
        g, v, spec, scenarios.size(), [&](std::size_t i) { return ring_faults(g, v, scenarios[i]); },
        options);
  } else {
    const auto& configs = std::get<family::ExplicitList>(fam).configs;
    for (const auto& f : configs) f.check_against(g);
    report = detail::max_over_family(
        g, v, spec, configs.size(), [&](std::size_t i) { return configs[i]; }, options);
  }
  report.family = to_string(fam);
  return report;
}

inline bool is_complete_graph(const PortLabeledGraph& g) {
  const auto n = g.node_count();
  for (NodeId u = 0; u < n; ++u)
    if (g.degree(u) != n - 1) return false;
  return true;
}

// Fault configuration on K_n that forces DFS(orders) to pay 2n - 4 while a
// Hamiltonian path from v costs n - 1: the free edges are the path
// v_1 .. v_n plus the chord {v_1, v_{n-1}}.
inline FaultConfiguration adversarial_complete(const PortLabeledGraph& g, const PortOrders& orders,
                                               NodeId v) {
  const auto n = g.node_count();
  if (!is_complete_graph(g)) throw Error(ErrorKind::kInvalidGraph, "graph is not complete");
  if (n < 4) throw Error(ErrorKind::kInvalidSize, "the construction needs n >= 4");
  if (v >= n) throw Error(ErrorKind::kInvalidGraph, "start node out of range");
  check_orders(g, orders);

  const NodeId w = g.follow(v, orders[v].front()).to;
  const auto& at_w = orders[w];
  const Port back_to_v = *g.port_to(w, v);
  std::vector<NodeId> others;  // neighbours of w in its port order, v removed
  for (Port p : at_w)
    if (p != back_to_v) others.push_back(g.follow(w, p).to);
  const NodeId u1 = others[0];
  const NodeId u2 = others[1];

  std::vector<NodeId> path{v};
  for (NodeId u = 0; u < n; ++u)
    if (u != v && u != w && u != u1 && u != u2) path.push_back(u);
  path.push_back(u1);
  path.push_back(w);
  path.push_back(u2);

  std::vector<Edge> keep{Edge(path.front(), path[n - 2])};
  for (std::size_t i = 0; i + 1 < n; ++i) keep.emplace_back(path[i], path[i + 1]);
  std::sort(keep.begin(), keep.end());
  std::vector<Edge> faulty;
  for (const auto& e : g.edges())
    if (!std::binary_search(keep.begin(), keep.end(), e)) faulty.push_back(e);
  return FaultConfiguration(std::move(faulty));
}

inline FaultConfiguration adversarial_complete(const PortLabeledGraph& g, NodeId v) {
  return adversarial_complete(g, increasing_orders(g), v);
}

struct DfsBoundReport {
  ExactRatio bound;
  std::vector<OverheadReport> per_orders;
  ExactRatio max_observed;
  std::size_t argmax = 0;
  bool within_bound = true;
};

inline DfsBoundReport dfs_bound_check(const PortLabeledGraph& g, NodeId v,
                                      const std::vector<strategy::DfsAlpha>& alphas,
                                      const ScenarioFamily& fam, const OverheadOptions& options = {},
                                      HamiltonianBudget hamilton = {}) {
  const auto ham = find_hamiltonian_cycle(g, hamilton);
  if (ham.status == HamiltonStatus::kNone) {
    throw Error(ErrorKind::kInvalidGraph, g.descriptor() + " is not Hamiltonian");
  }
  if (ham.status == HamiltonStatus::kUndecided) {
    throw Error(ErrorKind::kBudgetExceeded, "could not decide whether " + g.descriptor() + " is Hamiltonian");
  }
  if (alphas.empty()) throw Error(ErrorKind::kInvalidStrategy, "no port orders given");
  DfsBoundReport report;
  report.bound = closed_form::dfs_bound(g.node_count());
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    report.per_orders.push_back(overhead(g, v, alphas[i], fam, options));
    const auto& value = report.per_orders.back().overhead;
    if (i == 0 || report.max_observed < value) {
      report.max_observed = value;
      report.argmax = i;
    }
    if (report.bound < value) report.within_bound = false;
  }
  return report;
}

}  // namespace faultex
