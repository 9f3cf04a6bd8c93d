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
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "faultex/error.hpp"
#include "faultex/faults.hpp"
#include "faultex/opt.hpp"
#include "faultex/ratio.hpp"

namespace faultex {

// Exploration of an n-ring as a game between a regular agent and an
// adversary placing faults as nodes are first visited.
//
// State: the explored arc reaches a edges to the left and b to the right of
// the start, the agent stands at one end of it, and the onward edge at each
// end is known free or faulty. The agent either extends the arc at its own
// end (cost 1) or crosses to the other end and extends there (cost a+b+1).
// On each first visit the adversary fixes the onward edge of the new end.
// Play stops when the fault-free component is visited; the payoff is
// cost / opt of the ring scenario the adversary has built.
//
// For a fixed threshold rho the payoff cost - rho * opt is additive, so the
// game value under it depends only on the state. The exact min-max ratio is
// the rho at which that value reaches 0; it is found by repeatedly
// evaluating the worst-case ratio of the best policy for the current rho.
struct MinimaxBudget {
  std::size_t max_n = 14;
};

struct MinimaxResult {
  ExactRatio value;
  std::size_t iterations = 0;
  std::size_t states = 0;
};

namespace detail {

class RingGame {
 public:
  explicit RingGame(std::size_t n) : n_(n), choice_(state_count(), kExtend) {}

  MinimaxResult solve() {
    // Start from the class-A0 policy: keep extending, cross only when blocked.
    std::fill(choice_.begin(), choice_.end(), kExtend);
    ExactRatio rho = evaluate_policy();
    MinimaxResult result;
    for (;;) {
      ++result.iterations;
      values_.assign(state_count(), std::nullopt);
      const ExactRatio root = root_value(rho);
      if (root == ExactRatio(0)) break;
      if (ExactRatio(0) < root) {
        throw Error(ErrorKind::kInvalidScenario, "minimax iteration lost monotonicity");
      }
      rho = evaluate_policy();
    }
    result.value = rho;
    result.states = state_count();
    return result;
  }

 private:
  static constexpr std::uint8_t kExtend = 0;
  static constexpr std::uint8_t kCross = 1;

  struct State {
    std::size_t a, b;
    int side;           // 0: left end, 1: right end
    bool fault_left, fault_right;
  };

  std::size_t state_count() const { return n_ * n_ * 8; }
  std::size_t index(const State& s) const {
    return ((s.a * n_ + s.b) * 2 + static_cast<std::size_t>(s.side)) * 4 +
           (s.fault_left ? 2 : 0) + (s.fault_right ? 1 : 0);
  }

  std::size_t opt_of(std::size_t x, std::size_t y, bool single_fault_or_two) const {
    if (!single_fault_or_two) return n_ - 1;
    return opt_ring(n_, FaultyRing{x, y}).cost;
  }

  // Outcome of extending side `side` by one edge from arc (a, b):
  // either a terminal opt, or the states the adversary can choose between.
  struct Extension {
    std::size_t a, b;
    bool terminal = false;
    std::size_t terminal_opt = 0;
    std::vector<State> successors;  // when not terminal
    std::vector<std::size_t> terminal_opts;  // adversary choices that end play
  };

  Extension extend(const State& s, int side) const {
    Extension e;
    e.a = s.a + (side == 0 ? 1 : 0);
    e.b = s.b + (side == 1 ? 1 : 0);
    const bool other_fault = side == 0 ? s.fault_right : s.fault_left;
    if (e.a + e.b + 1 == n_) {
      // Every node visited; the remaining edge is the other end's onward edge.
      e.terminal = true;
      e.terminal_opt = opt_of(e.a, e.b, other_fault);
      return e;
    }
    for (bool fault : {false, true}) {
      State next{e.a, e.b, side, side == 0 ? fault : s.fault_left, side == 1 ? fault : s.fault_right};
      if (next.fault_left && next.fault_right) {
        e.terminal_opts.push_back(opt_of(e.a, e.b, true));
      } else {
        e.successors.push_back(next);
      }
    }
    return e;
  }

  std::size_t move_cost(const State& s, std::uint8_t move) const {
    return move == kExtend ? 1 : s.a + s.b + 1;
  }
  int move_side(const State& s, std::uint8_t move) const {
    return move == kExtend ? s.side : 1 - s.side;
  }
  bool allowed(const State& s, std::uint8_t move) const {
    const int side = move_side(s, move);
    return !(side == 0 ? s.fault_left : s.fault_right);
  }

  ExactRatio root_value(const ExactRatio& rho) {
    // Both start ports faulty: opt = 0, counted as ratio 1, i.e. payoff 1 - rho.
    ExactRatio worst = ExactRatio(1) - rho;
    for (bool fl : {false, true})
      for (bool fr : {false, true}) {
        if (fl && fr) continue;
        worst = max(worst, value({0, 0, 0, fl, fr}, rho));
      }
    return worst;
  }

  ExactRatio value(const State& s, const ExactRatio& rho) {
    auto& memo = values_[index(s)];
    if (memo) return *memo;
    std::optional<ExactRatio> best;
    for (std::uint8_t move : {kExtend, kCross}) {
      if (!allowed(s, move)) continue;
      const auto e = extend(s, move_side(s, move));
      ExactRatio worst;
      if (e.terminal) {
        worst = ExactRatio(0) - rho * ExactRatio(static_cast<std::int64_t>(e.terminal_opt));
      } else {
        bool any = false;
        for (auto opt : e.terminal_opts) {
          const ExactRatio v = ExactRatio(0) - rho * ExactRatio(static_cast<std::int64_t>(opt));
          worst = any ? max(worst, v) : v;
          any = true;
        }
        for (const auto& next : e.successors) {
          const ExactRatio v = value(next, rho);
          worst = any ? max(worst, v) : v;
          any = true;
        }
      }
      const ExactRatio total = ExactRatio(static_cast<std::int64_t>(move_cost(s, move))) + worst;
      if (!best || total < *best) {
        best = total;
        choice_[index(s)] = move;
      }
    }
    memo = *best;
    return *best;
  }

  using Outcomes = std::set<std::pair<std::size_t, std::size_t>>;  // (cost, opt)

  const Outcomes& outcomes(const State& s) {
    auto& memo = outcome_memo_[index(s)];
    if (memo) return *memo;
    std::uint8_t move = choice_[index(s)];
    if (!allowed(s, move)) move = move == kExtend ? kCross : kExtend;
    const std::size_t c = move_cost(s, move);
    const auto e = extend(s, move_side(s, move));
    Outcomes out;
    if (e.terminal) out.insert({c, e.terminal_opt});
    for (auto opt : e.terminal_opts) out.insert({c, opt});
    for (const auto& next : e.successors) {
      for (const auto& [cost, opt] : outcomes(next)) out.insert({c + cost, opt});
    }
    memo = std::move(out);
    return *memo;
  }

  ExactRatio evaluate_policy() {
    outcome_memo_.assign(state_count(), std::nullopt);
    ExactRatio worst = 1;
    for (bool fl : {false, true})
      for (bool fr : {false, true}) {
        if (fl && fr) continue;
        for (const auto& [cost, opt] : outcomes({0, 0, 0, fl, fr})) {
          worst = max(worst, ExactRatio(static_cast<std::int64_t>(cost), static_cast<std::int64_t>(opt)));
        }
      }
    return worst;
  }

  std::size_t n_;
  std::vector<std::uint8_t> choice_;
  std::vector<std::optional<ExactRatio>> values_;
  std::vector<std::optional<Outcomes>> outcome_memo_;
};

}  // namespace detail

inline MinimaxResult minimax_lower_bound(std::size_t n, MinimaxBudget budget = {}) {
  if (n < 3) throw Error(ErrorKind::kInvalidSize, "ring size must be at least 3");
  if (n > budget.max_n) {
    throw Error(ErrorKind::kBudgetExceeded,
                "game on n = " + std::to_string(n) + " exceeds the budget of " + std::to_string(budget.max_n));
  }
  return detail::RingGame(n).solve();
}

}  // namespace faultex
