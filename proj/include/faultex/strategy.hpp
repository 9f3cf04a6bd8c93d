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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "faultex/error.hpp"
#include "faultex/graph.hpp"

namespace faultex {

enum class Direction { kLeft, kRight };

inline constexpr Direction opposite(Direction d) {
  return d == Direction::kLeft ? Direction::kRight : Direction::kLeft;
}
inline constexpr Port port_of(Direction d) {
  return d == Direction::kLeft ? kLeftPort : kRightPort;
}
inline std::string to_string(Direction d) { return d == Direction::kLeft ? "l" : "r"; }

// Per-node port orders; alpha[w] is a permutation of 1..deg(w).
using PortOrders = std::vector<std::vector<Port>>;

namespace strategy {

struct RingAlgorithm {
  friend bool operator==(const RingAlgorithm&, const RingAlgorithm&) = default;
};
struct GoFirm {
  Direction direction = Direction::kLeft;
  friend bool operator==(const GoFirm&, const GoFirm&) = default;
};
struct ClassA0 {
  Direction direction = Direction::kLeft;
  friend bool operator==(const ClassA0&, const ClassA0&) = default;
};
struct IStepA1 {
  std::size_t steps = 1;
  Direction direction = Direction::kLeft;
  friend bool operator==(const IStepA1&, const IStepA1&) = default;
};
struct GeneralAk {
  std::vector<std::size_t> zs;
  Direction direction = Direction::kLeft;
  friend bool operator==(const GeneralAk&, const GeneralAk&) = default;
};
// Unset orders mean ascending port number at every node.
struct DfsAlpha {
  std::optional<PortOrders> orders;
  friend bool operator==(const DfsAlpha&, const DfsAlpha&) = default;
};

}  // namespace strategy

using StrategySpec = std::variant<strategy::RingAlgorithm, strategy::GoFirm, strategy::ClassA0,
                                  strategy::IStepA1, strategy::GeneralAk, strategy::DfsAlpha>;

inline bool is_ring_strategy(const StrategySpec& s) {
  return !std::holds_alternative<strategy::DfsAlpha>(s);
}

inline std::string to_string(const StrategySpec& spec) {
  struct Visitor {
    std::string operator()(const strategy::RingAlgorithm&) const { return "ring"; }
    std::string operator()(const strategy::GoFirm& s) const {
      return "go-firm(" + to_string(s.direction) + ")";
    }
    std::string operator()(const strategy::ClassA0& s) const {
      return "class-a0(" + to_string(s.direction) + ")";
    }
    std::string operator()(const strategy::IStepA1& s) const {
      return "istep-a1(" + std::to_string(s.steps) + "," + to_string(s.direction) + ")";
    }
    std::string operator()(const strategy::GeneralAk& s) const {
      std::string out = "general-ak(";
      for (std::size_t i = 0; i < s.zs.size(); ++i) {
        out += (i ? "," : "") + std::to_string(s.zs[i]);
      }
      return out + ";" + to_string(s.direction) + ")";
    }
    std::string operator()(const strategy::DfsAlpha& s) const {
      return s.orders ? "dfs(custom)" : "dfs(increasing)";
    }
  };
  return std::visit(Visitor{}, spec);
}

inline PortOrders increasing_orders(const PortLabeledGraph& g) {
  PortOrders orders(g.node_count());
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (Port p = 1; p <= g.degree(u); ++p) orders[u].push_back(p);
  }
  return orders;
}

inline void check_orders(const PortLabeledGraph& g, const PortOrders& orders) {
  if (orders.size() != g.node_count()) {
    throw Error(ErrorKind::kInvalidStrategy, "port orders must list every node");
  }
  for (NodeId u = 0; u < g.node_count(); ++u) {
    auto sorted = orders[u];
    std::sort(sorted.begin(), sorted.end());
    bool ok = sorted.size() == g.degree(u);
    for (std::size_t i = 0; ok && i < sorted.size(); ++i) ok = sorted[i] == i + 1;
    if (!ok) {
      throw Error(ErrorKind::kInvalidStrategy,
                  "port order at node " + std::to_string(u) + " is not a permutation of its ports");
    }
  }
}

// z_1 < z_3 < z_5 < ... and z_2 < z_4 < ..., all positive.
inline void check_z_sequence(const std::vector<std::size_t>& zs) {
  if (zs.empty()) throw Error(ErrorKind::kInvalidStrategy, "z-sequence is empty");
  for (std::size_t j = 0; j < zs.size(); ++j) {
    if (zs[j] == 0) throw Error(ErrorKind::kInvalidStrategy, "z-values must be positive");
    if (j >= 2 && zs[j - 2] >= zs[j]) {
      throw Error(ErrorKind::kInvalidStrategy,
                  "z-values on each side must strictly increase (z_" + std::to_string(j - 1) +
                      " >= z_" + std::to_string(j + 1) + ")");
    }
  }
}

// Applies the collapsing rules for a ring of size n: an i-step strategy with
// i >= n - 1 is a class-A0 strategy; zero steps are rejected.
inline StrategySpec normalize(const StrategySpec& spec, std::size_t n) {
  if (const auto* s = std::get_if<strategy::IStepA1>(&spec)) {
    if (s->steps == 0) throw Error(ErrorKind::kInvalidStrategy, "0-step strategies are not allowed");
    if (s->steps + 1 >= n) return strategy::ClassA0{s->direction};
  }
  if (const auto* s = std::get_if<strategy::GeneralAk>(&spec)) check_z_sequence(s->zs);
  return spec;
}

}  // namespace faultex
