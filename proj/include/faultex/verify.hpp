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

#include <functional>
#include <string>
#include <vector>

#include "faultex/closed_forms.hpp"
#include "faultex/error.hpp"
#include "faultex/faults.hpp"
#include "faultex/graph.hpp"
#include "faultex/minimax.hpp"
#include "faultex/opt.hpp"
#include "faultex/overhead.hpp"
#include "faultex/ratio.hpp"
#include "faultex/strategy.hpp"

namespace faultex::verify {

// One comparison: `computed relation expected` must hold.
struct Row {
  std::string label;
  std::string relation;  // "=" or "<="
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct SuiteResult {
  std::string suite;
  std::vector<Row> rows;
  bool all_pass() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return true;
  }
  const Row* first_failure() const {
    for (const auto& r : rows)
      if (!r.pass) return &r;
    return nullptr;
  }
};

struct Range {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

struct SuiteOptions {
  OverheadOptions overhead;
  MinimaxBudget game;
  std::function<void(const std::string&)> progress;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ring-table", "lower-bound", "dfs-bound", "ratio-table",
                                              "oracle-agreement"};
  return names;
}

namespace detail {

inline Row equal_row(std::string label, const ExactRatio& expected, const ExactRatio& computed) {
  return {std::move(label), "=", expected.str(), computed.str(), expected == computed};
}

inline Row at_most_row(std::string label, const ExactRatio& bound, const ExactRatio& computed) {
  return {std::move(label), "<=", bound.str(), computed.str(), computed <= bound};
}

inline void note(const SuiteOptions& o, const std::string& msg) {
  if (o.progress) o.progress(msg);
}

inline std::string n_label(std::size_t n) { return "n=" + std::to_string(n); }

}  // namespace detail

inline SuiteResult ring_table(Range r, const SuiteOptions& o = {}) {
  if (r.lo < 3) throw Error(ErrorKind::kInvalidSize, "ring-table starts at n = 3");
  SuiteResult out{"ring-table", {}};
  for (auto n = r.lo; n <= r.hi; ++n) {
    detail::note(o, "ring-table " + detail::n_label(n));
    const auto g = build_ring(n);
    const auto rep = overhead(g, 0, strategy::RingAlgorithm{}, family::RingScenarios{}, o.overhead);
    out.rows.push_back(detail::equal_row(detail::n_label(n), closed_form::ring_overhead(n), rep.overhead));
  }
  return out;
}

// Game value against the closed-form lower bound; the row also requires the
// enumerated overhead of Algorithm Ring to coincide.
inline SuiteResult lower_bound(Range r, const SuiteOptions& o = {}) {
  if (r.lo < 3) throw Error(ErrorKind::kInvalidSize, "lower-bound starts at n = 3");
  if (r.hi > o.game.max_n) {
    throw Error(ErrorKind::kBudgetExceeded, "game budget is n <= " + std::to_string(o.game.max_n));
  }
  SuiteResult out{"lower-bound", {}};
  for (auto n = r.lo; n <= r.hi; ++n) {
    detail::note(o, "lower-bound " + detail::n_label(n));
    const auto game = minimax_lower_bound(n, o.game).value;
    const auto expected = closed_form::lower_bound(n);
    const auto ring = overhead(build_ring(n), 0, strategy::RingAlgorithm{}, family::RingScenarios{}, o.overhead);
    auto row = detail::equal_row(detail::n_label(n), expected, game);
    if (ring.overhead != game) {
      row.pass = false;
      row.computed += " (ring " + ring.overhead.str() + ")";
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

// DFS with increasing port order on rings, full powerset of faults.
inline SuiteResult dfs_bound(Range r, const SuiteOptions& o = {}) {
  if (r.lo < 3) throw Error(ErrorKind::kInvalidSize, "dfs-bound starts at n = 3");
  SuiteResult out{"dfs-bound", {}};
  for (auto n = r.lo; n <= r.hi; ++n) {
    detail::note(o, "dfs-bound " + detail::n_label(n));
    const auto g = build_ring(n);
    auto opts = o.overhead;
    opts.opt = OptMethod::kCoveringWalk;
    const auto rep = overhead(g, 0, strategy::DfsAlpha{}, family::FullPowerset{}, opts);
    out.rows.push_back(detail::at_most_row(detail::n_label(n), closed_form::dfs_bound(n), rep.overhead));
  }
  return out;
}

struct RatioRow {
  std::size_t n = 0;
  ExactRatio dfs;
  ExactRatio lower;
  ExactRatio quotient;
};

inline std::vector<RatioRow> ratio_report(Range r) {
  if (r.lo < 3) throw Error(ErrorKind::kInvalidSize, "ratio table starts at n = 3");
  std::vector<RatioRow> rows;
  for (auto n = r.lo; n <= r.hi; ++n) {
    const auto d = closed_form::dfs_bound(n);
    const auto l = closed_form::lower_bound(n);
    rows.push_back({n, d, l, d / l});
  }
  return rows;
}

// Quotient <= 10/9 everywhere and < 106/100 from n = 24 on.
inline SuiteResult ratio_table(Range r, const SuiteOptions& = {}) {
  SuiteResult out{"ratio-table", {}};
  const ExactRatio cap(10, 9);
  const ExactRatio tail(106, 100);
  for (const auto& row : ratio_report(r)) {
    auto check = detail::at_most_row(detail::n_label(row.n), cap, row.quotient);
    if (row.n >= 24) {
      check.relation = "<";
      check.expected = tail.str();
      check.pass = row.quotient < tail;
    }
    out.rows.push_back(std::move(check));
  }
  return out;
}

// Covering-walk search against the ring closed form, every scenario.
inline SuiteResult oracle_agreement(Range r, const SuiteOptions& o = {}) {
  if (r.lo < 3) throw Error(ErrorKind::kInvalidSize, "oracle-agreement starts at n = 3");
  SuiteResult out{"oracle-agreement", {}};
  for (auto n = r.lo; n <= r.hi; ++n) {
    detail::note(o, "oracle-agreement " + detail::n_label(n));
    const auto g = build_ring(n);
    const auto scenarios = all_ring_scenarios(n);
    for (const auto& s : scenarios) {
      const auto walk = opt_covering_walk(g, ring_faults(g, 0, s), 0, o.overhead.opt_budget).cost;
      const auto ring = opt_ring(n, s).cost;
      out.rows.push_back({detail::n_label(n) + " " + to_string(s), "=", std::to_string(ring),
                          std::to_string(walk), walk == ring});
    }
  }
  return out;
}

inline SuiteResult run_suite(const std::string& name, Range r, const SuiteOptions& o = {}) {
  if (r.hi < r.lo) throw Error(ErrorKind::kInvalidSize, "empty n range");
  if (name == "ring-table") return ring_table(r, o);
  if (name == "lower-bound") return lower_bound(r, o);
  if (name == "dfs-bound") return dfs_bound(r, o);
  if (name == "ratio-table") return ratio_table(r, o);
  if (name == "oracle-agreement") return oracle_agreement(r, o);
  throw Error(ErrorKind::kParse, "unknown suite \"" + name + "\"");
}

}  // namespace faultex::verify
