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


// Command-line front end: generate graphs, run explorations, compute
// overheads and drive the verification suites.

#include <openssl/evp.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "faultex/faultex.hpp"

namespace {

using faultex::Error;
using faultex::ErrorKind;
using Json = faultex::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

// Hard ceilings for the budget flags.
constexpr std::size_t kCapPowersetEdges = 26;
constexpr std::size_t kCapComponent = 24;
constexpr std::size_t kCapGameN = 24;
constexpr std::size_t kCapRangeN = 100000;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const Table& t) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
    os << "\n";
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return os.str();
}

std::string render_md(const Table& t) {
  std::vector<std::size_t> width(t.header.size(), 3);
  auto widen = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  };
  widen(t.header);
  for (const auto& r : t.rows) widen(r);
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    os << "|";
    for (std::size_t i = 0; i < cells.size(); ++i) os << " " << std::left << std::setw(width[i]) << cells[i] << " |";
    os << "\n";
  };
  line(t.header);
  os << "|";
  for (auto w : width) os << std::string(w + 2, '-') << "|";
  os << "\n";
  for (const auto& r : t.rows) line(r);
  return os.str();
}

Json table_json(const Table& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < r.size(); ++i) obj[t.header[i]] = r[i];
    rows.push_back(std::move(obj));
  }
  return rows;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kParse, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

faultex::verify::Range parse_range(const std::string& text) {
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw CLI::ValidationError("--n", "expected A..B or a single integer, got \"" + text + "\"");
    }
    const auto v = std::stoull(s);
    if (v > kCapRangeN) throw CLI::ValidationError("--n", "values above " + std::to_string(kCapRangeN));
    return static_cast<std::size_t>(v);
  };
  const auto dots = text.find("..");
  faultex::verify::Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = number(text);
  } else {
    r.lo = number(text.substr(0, dots));
    r.hi = number(text.substr(dots + 2));
  }
  if (r.hi < r.lo) throw CLI::ValidationError("--n", "empty range " + text);
  return r;
}

// Everything a run needs to be reproduced, plus how long it took.
class Manifest {
 public:
  Manifest(std::string command, std::vector<std::string> argv)
      : command_(std::move(command)), argv_(std::move(argv)), began_(std::chrono::steady_clock::now()) {}

  void input(const std::string& role, const std::string& path, const std::string& bytes) {
    inputs_.push_back({{"role", role}, {"path", path}, {"sha256", sha256_hex(bytes)}});
  }
  void param(const std::string& key, Json value) { params_[key] = std::move(value); }

  void emit(const std::string& results_path, int exit_code) const {
    const auto secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - began_).count();
    Json j{{"tool", "faultex"},
           {"version", faultex::kVersion},
           {"command", command_},
           {"argv", argv_},
           {"inputs", inputs_},
           {"parameters", params_},
           {"wallSeconds", secs},
           {"results", results_path.empty() ? Json("<stdout>") : Json(results_path)},
           {"exitCode", exit_code}};
    if (results_path.empty()) {
      std::cerr << j.dump() << "\n";
    } else {
      std::ofstream(results_path + ".manifest.json") << j.dump(2) << "\n";
    }
  }

 private:
  std::string command_;
  std::vector<std::string> argv_;
  Json inputs_ = Json::array();
  Json params_ = Json::object();
  std::chrono::steady_clock::time_point began_;
};

struct Common {
  std::string out;
  std::string format = "json";
  unsigned workers = 0;
  std::size_t max_edges = 22;
  std::size_t max_component = 20;
  std::size_t max_game_n = 14;
  bool progress = false;
  bool quiet = false;
};

void write_result(const Common& c, const std::string& payload) {
  if (c.out.empty()) {
    std::cout << payload;
    std::cout.flush();
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw Error(ErrorKind::kParse, "cannot write " + c.out);
    f << payload;
  }
}

std::string render(const Common& c, const Table& t, const Json& json_payload) {
  if (c.format == "csv") return render_csv(t);
  if (c.format == "md") return render_md(t);
  return json_payload.dump(2) + "\n";
}

faultex::OverheadOptions overhead_options(const Common& c) {
  faultex::OverheadOptions o;
  o.max_powerset_edges = c.max_edges;
  o.opt_budget.max_component = c.max_component;
  o.workers = c.workers;
  if (c.progress) {
    o.progress = [last = std::size_t{101}](std::size_t done, std::size_t total) mutable {
      const auto pct = total ? done * 100 / total : 100;
      if (pct == last) return;
      last = pct;
      std::cerr << "\r" << done << "/" << total << " configurations" << (done == total ? "\n" : "")
                << std::flush;
    };
  }
  return o;
}

faultex::StrategySpec load_strategy(const std::string& arg, Manifest& m) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') {
    m.param("strategy", Json::parse(arg));
    return faultex::io::parse_strategy(arg);
  }
  const auto text = read_file(arg);
  m.input("strategy", arg, text);
  return faultex::io::parse_strategy(text);
}

faultex::PortLabeledGraph load_graph(const std::string& path, Manifest& m) {
  const auto text = read_file(path);
  m.input("graph", path, text);
  return faultex::io::parse_graph(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"faultex: exploration of graphs with faulty edges"};
  app.set_version_flag("--version", faultex::kVersion);
  app.require_subcommand(1, 1);

  Common c;
  c.progress = isatty(STDERR_FILENO);
  auto add_output = [&](CLI::App* sub, bool tables) {
    sub->add_option("--out", c.out, "write results here instead of stdout");
    if (tables) {
      sub->add_option("--format", c.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
    }
  };
  auto add_budgets = [&](CLI::App* sub) {
    sub->add_option("--workers", c.workers, "worker threads (0: machine parallelism)")
        ->check(CLI::Range(0u, 1024u));
    sub->add_option("--max-edges", c.max_edges, "powerset budget on |E|")
        ->check(CLI::Range(std::size_t{1}, kCapPowersetEdges));
    sub->add_option("--max-component", c.max_component, "covering-walk budget on component size")
        ->check(CLI::Range(std::size_t{1}, kCapComponent));
    sub->add_flag("--progress,!--no-progress", c.progress, "progress on stderr");
  };

  // generate
  auto* gen = app.add_subcommand("generate", "write a graph as JSON");
  std::string kind;
  std::size_t gen_n = 0, gen_d = 0, rows = 0, cols = 0;
  gen->add_option("kind", kind, "ring, complete, hypercube or torus")
      ->required()
      ->check(CLI::IsMember({"ring", "complete", "hypercube", "torus"}));
  auto* opt_n = gen->add_option("--n", gen_n, "node count (ring, complete)");
  auto* opt_d = gen->add_option("--d", gen_d, "dimension (hypercube)");
  auto* opt_rows = gen->add_option("--rows", rows, "torus rows");
  auto* opt_cols = gen->add_option("--cols", cols, "torus columns");
  add_output(gen, false);

  // explore
  auto* exp = app.add_subcommand("explore", "run one strategy on one fault configuration");
  std::string graph_path, faults_path, strategy_arg;
  faultex::NodeId start = 0;
  exp->add_option("--graph", graph_path, "graph JSON")->required();
  exp->add_option("--faults", faults_path, "fault configuration JSON (default: none)");
  exp->add_option("--start", start, "start node")->required();
  exp->add_option("--strategy", strategy_arg, "strategy JSON or path")->required();
  add_output(exp, false);
  add_budgets(exp);

  // overhead
  auto* ovh = app.add_subcommand("overhead", "worst case over a family of fault configurations");
  std::string fam_name = "ring";
  bool per_config = false;
  ovh->add_option("--graph", graph_path, "graph JSON")->required();
  ovh->add_option("--start", start, "start node")->required();
  ovh->add_option("--strategy", strategy_arg, "strategy JSON or path")->required();
  ovh->add_option("--family", fam_name, "powerset, ring or list")
      ->check(CLI::IsMember({"powerset", "ring", "list"}));
  auto* ovh_faults = ovh->add_option("--faults", faults_path, "configuration list (family list)");
  ovh->add_flag("--per-config", per_config, "include every configuration in the report");
  add_output(ovh, false);
  add_budgets(ovh);

  // verify
  auto* ver = app.add_subcommand("verify", "closed forms against enumeration or the game");
  std::string suite, range_text;
  ver->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(faultex::verify::suite_names()));
  ver->add_option("--n", range_text, "A..B")->required();
  ver->add_option("--max-game-n", c.max_game_n, "game budget")->check(CLI::Range(std::size_t{3}, kCapGameN));
  add_output(ver, true);
  add_budgets(ver);

  // lowerbound
  auto* lb = app.add_subcommand("lowerbound", "solve the ring game");
  lb->add_option("--n", range_text, "A..B")->required();
  lb->add_option("--max-game-n", c.max_game_n, "game budget")->check(CLI::Range(std::size_t{3}, kCapGameN));
  add_output(lb, true);

  // ratios
  auto* rat = app.add_subcommand("ratios", "DFS bound over the ring lower bound");
  rat->add_option("--n", range_text, "A..B")->required();
  add_output(rat, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Manifest manifest(chosen->get_name(), std::vector<std::string>(argv + 1, argv + argc));
  int code = kExitOk;
  std::string payload;
  try {
    if (chosen == gen) {
      const bool need_n = kind == "ring" || kind == "complete";
      if (need_n != (opt_n->count() > 0) || (kind == "hypercube") != (opt_d->count() > 0) ||
          (kind == "torus") != (opt_rows->count() > 0 && opt_cols->count() > 0) ||
          (kind != "torus" && (opt_rows->count() || opt_cols->count()))) {
        throw CLI::ValidationError("generate", "flags do not match graph kind " + kind);
      }
      faultex::PortLabeledGraph g = kind == "ring"       ? faultex::build_ring(gen_n)
                                    : kind == "complete" ? faultex::build_complete(gen_n)
                                    : kind == "hypercube" ? faultex::build_hypercube(gen_d)
                                                          : faultex::build_torus(rows, cols);
      manifest.param("kind", kind);
      manifest.param("descriptor", g.descriptor());
      payload = faultex::io::serialize_graph(g) + "\n";
    } else if (chosen == exp) {
      const auto g = load_graph(graph_path, manifest);
      faultex::FaultConfiguration f;
      if (!faults_path.empty()) {
        const auto text = read_file(faults_path);
        manifest.input("faults", faults_path, text);
        f = faultex::io::parse_faults(text);
      }
      f.check_against(g);
      const auto spec = load_strategy(strategy_arg, manifest);
      manifest.param("start", start);
      const auto trace = faultex::execute(g, f, start, spec);
      const auto ok = faultex::validate_trace(g, f, start, trace);
      if (!ok.ok) throw Error(ErrorKind::kInvalidStrategy, "trace rejected: " + ok.reason);
      if (!trace.completed) throw Error(ErrorKind::kInvalidStrategy, "strategy did not finish exploring");
      const auto opt = g.is_oriented_ring() ? faultex::opt_ring(g.node_count(), faultex::ring_scenario(g, f, start)).cost
                                            : faultex::opt_covering_walk(g, f, start, {c.max_component}).cost;
      const auto ratio = faultex::exploration_ratio(trace.cost, opt);
      Json j{{"strategy", faultex::io::strategy_to_json(spec)},
             {"graph", g.descriptor()},
             {"faults", faultex::io::faults_to_json(f)},
             {"trace", faultex::io::trace_to_json(trace)},
             {"cost", trace.cost},
             {"opt", opt},
             {"ratio", faultex::io::ratio_to_json(ratio)},
             {"approx", faultex::io::detail::approx(ratio)}};
      payload = j.dump(2) + "\n";
    } else if (chosen == ovh) {
      const auto g = load_graph(graph_path, manifest);
      const auto spec = load_strategy(strategy_arg, manifest);
      if ((fam_name == "list") != (ovh_faults->count() > 0)) {
        throw CLI::ValidationError("--faults", "a configuration list is given exactly when --family list");
      }
      faultex::ScenarioFamily fam = faultex::family::RingScenarios{};
      if (fam_name == "powerset") fam = faultex::family::FullPowerset{};
      if (fam_name == "list") {
        const auto text = read_file(faults_path);
        manifest.input("faults", faults_path, text);
        fam = faultex::family::ExplicitList{faultex::io::parse_fault_list(text)};
      }
      auto opts = overhead_options(c);
      opts.keep_per_config = per_config;
      manifest.param("start", start);
      manifest.param("family", fam_name);
      manifest.param("maxEdges", c.max_edges);
      manifest.param("maxComponent", c.max_component);
      const auto report = faultex::overhead(g, start, spec, fam, opts);
      payload = faultex::io::report_to_json(report).dump(2) + "\n";
    } else if (chosen == ver) {
      const auto r = parse_range(range_text);
      faultex::verify::SuiteOptions so;
      so.overhead = overhead_options(c);
      so.overhead.progress = nullptr;
      so.game.max_n = c.max_game_n;
      if (c.progress) so.progress = [](const std::string& msg) { std::cerr << msg << "\n"; };
      manifest.param("suite", suite);
      manifest.param("n", {r.lo, r.hi});
      const auto res = faultex::verify::run_suite(suite, r, so);
      Table t{{"row", "relation", "expected", "computed", "pass"}, {}};
      for (const auto& row : res.rows) {
        t.rows.push_back({row.label, row.relation, row.expected, row.computed, row.pass ? "yes" : "no"});
      }
      Json j{{"suite", res.suite}, {"pass", res.all_pass()}, {"rows", table_json(t)}};
      payload = render(c, t, j);
      if (const auto* bad = res.first_failure()) {
        std::cerr << "FAIL " << res.suite << " " << bad->label << ": expected " << bad->relation << " "
                  << bad->expected << ", computed " << bad->computed << "\n";
        code = kExitVerifyFailed;
      }
    } else if (chosen == lb) {
      const auto r = parse_range(range_text);
      if (r.lo < 3) throw Error(ErrorKind::kInvalidSize, "the game starts at n = 3");
      manifest.param("n", {r.lo, r.hi});
      Table t{{"n", "game", "closed_form", "iterations", "states"}, {}};
      bool all_equal = true;
      for (auto n = r.lo; n <= r.hi; ++n) {
        if (c.progress) std::cerr << "game n=" << n << "\n";
        const auto res = faultex::minimax_lower_bound(n, {c.max_game_n});
        const auto cf = faultex::closed_form::lower_bound(n);
        all_equal = all_equal && res.value == cf;
        t.rows.push_back({std::to_string(n), res.value.str(), cf.str(), std::to_string(res.iterations),
                          std::to_string(res.states)});
      }
      payload = render(c, t, Json{{"rows", table_json(t)}, {"allEqual", all_equal}});
      if (!all_equal) code = kExitVerifyFailed;
    } else if (chosen == rat) {
      const auto r = parse_range(range_text);
      manifest.param("n", {r.lo, r.hi});
      Table t{{"n", "dfs_bound", "lower_bound", "quotient", "approx"}, {}};
      faultex::ExactRatio best(0);
      std::size_t best_n = 0;
      for (const auto& row : faultex::verify::ratio_report(r)) {
        if (best < row.quotient) {
          best = row.quotient;
          best_n = row.n;
        }
        t.rows.push_back({std::to_string(row.n), row.dfs.str(), row.lower.str(), row.quotient.str(),
                          faultex::io::detail::approx(row.quotient)});
      }
      const auto check = faultex::verify::ratio_table(r);
      Json j{{"rows", table_json(t)},
             {"max", faultex::io::ratio_to_json(best)},
             {"argmax", best_n},
             {"withinBounds", check.all_pass()}};
      payload = render(c, t, j);
      if (!check.all_pass()) code = kExitVerifyFailed;
    }
    write_result(c, payload);
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    code = kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = e.kind() == ErrorKind::kBudgetExceeded ? kExitBudget : kExitUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error (parse): " << e.what() << "\n";
    code = kExitUsage;
  }
  manifest.emit(c.out, code);
  return code;
}
