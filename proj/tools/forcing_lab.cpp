// Copyright 2026 The forcing-lab Authors
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

// forcing_lab: compute | generate | verify | sweep.
//
// Exit codes: 0 clean, 1 a proved statement failed, 2 bad input,
// 3 resource ceiling hit, 4 conjecture counterexample under
// --strict-conjectures.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "forcing_lab/families.hpp"
#include "forcing_lab/forcing.hpp"
#include "forcing_lab/graph6.hpp"
#include "forcing_lab/report.hpp"
#include "forcing_lab/sweep.hpp"
#include "forcing_lab/verifier.hpp"

namespace {

using namespace forcing_lab;

constexpr int kExitParse = 2;
constexpr int kExitResource = 3;

struct Options {
  bool json = false;
  std::string csv;
  std::string jsonl;
  std::string output;
  int workers = 1;
  Limits limits;
  bool dedup = false;
  bool strict = false;
  bool all_records = false;
  bool keep_all_graphs = false;
  std::string checkpoint;
  int checkpoint_every = 8;
  int max_order = 6;
  int side = 3;
  std::string mode = "all_graphs";
  std::vector<std::string> inputs;
};

int default_workers() {
  if (const char* env = std::getenv("FORCING_LAB_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

std::vector<Graph> graphs_from_input(const std::string& text) {
  if (text.find(':') != std::string::npos) return build_family(parse_family_spec(text));
  return {graph6_decode(text)};
}

std::string edge_list(std::span<const Edge> edges) {
  std::string out;
  for (const Edge& e : edges) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return out;
}

nlohmann::ordered_json compute_json(const Graph& g, const SpectrumReport* sp) {
  nlohmann::ordered_json j;
  j["graph"] = graph6_encode(g);
  j["n"] = g.order() / 2;
  j["e"] = g.edge_count();
  j["delta"] = g.min_degree();
  j["has_perfect_matching"] = sp != nullptr;
  if (!sp) return j;
  j["f"] = sp->f_min;
  j["F"] = sp->f_max;
  j["Af"] = sp->max_anti_forcing();
  auto ms = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < sp->per_matching.size(); ++i) {
    const auto& m = sp->per_matching[i];
    ms.push_back({{"matching", edges_to_json(m.matching.edges())},
                  {"forcing", m.forcing},
                  {"forcing_set", edges_to_json(m.witness)},
                  {"packing", sp->c_values[i]},
                  {"anti_forcing", sp->af_values[i]}});
  }
  j["matchings"] = std::move(ms);
  return j;
}

int cmd_compute(const Options& o) {
  nlohmann::ordered_json all = nlohmann::ordered_json::array();
  for (const std::string& input : o.inputs) {
    for (const Graph& g : graphs_from_input(input)) {
      const bool pm = g.order() % 2 == 0 && has_perfect_matching(g);
      SpectrumReport sp;
      if (pm) sp = spectrum(g, o.limits, {.packing = true, .anti_forcing = true});
      if (o.json) {
        all.push_back(compute_json(g, pm ? &sp : nullptr));
        continue;
      }
      std::cout << "graph " << graph6_encode(g) << "\n";
      std::cout << "n=" << g.order() / 2 << " e=" << g.edge_count() << " delta=" << g.min_degree() << "\n";
      if (!pm) {
        std::cout << "no perfect matching\n";
        continue;
      }
      std::cout << "f=" << sp.f_min << " F=" << sp.f_max << " Af=" << sp.max_anti_forcing() << "\n";
      std::cout << "perfect matchings: " << sp.per_matching.size() << "\n";
      for (std::size_t i = 0; i < sp.per_matching.size(); ++i) {
        const auto& m = sp.per_matching[i];
        std::cout << "  [" << edge_list(m.matching.edges()) << "] f=" << m.forcing << " C=" << sp.c_values[i]
                  << " af=" << sp.af_values[i] << " forcing set: [" << edge_list(m.witness) << "]\n";
      }
    }
  }
  if (o.json) std::cout << (all.size() == 1 ? all.front() : all).dump(2) << "\n";
  return 0;
}

int cmd_generate(const Options& o) {
  for (const std::string& spec : o.inputs) {
    for (const Graph& g : build_family(parse_family_spec(spec))) std::cout << graph6_encode(g) << "\n";
  }
  return 0;
}

void print_summary(const Report& report) {
  const Summary& s = report.summary;
  std::cout << "graphs " << s.graphs << "\n";
  std::cout << std::left << std::setw(14) << "theorem";
  for (int k = 0; k < 5; ++k) std::cout << std::setw(16) << to_string(static_cast<Status>(k));
  std::cout << "\n";
  for (const auto& [id, c] : s.by_theorem) {
    std::cout << std::setw(14) << id;
    for (long long v : c) std::cout << std::setw(16) << v;
    std::cout << "\n";
  }
  std::cout << std::setw(14) << "total";
  for (long long v : s.totals) std::cout << std::setw(16) << v;
  std::cout << "\n";
  if (s.equality_mismatches > 0) {
    std::cout << "tight cases outside the named extremal graphs: " << s.equality_mismatches << "\n";
  }
  if (s.counterexample_found) {
    std::cout << "CONJECTURE COUNTEREXAMPLE FOUND:\n";
    for (const auto& r : report.records) {
      if (r.status == Status::kCounterexample) std::cout << "  " << r.graph_id << " " << r.theorem_id << "\n";
    }
  }
  for (const auto& r : report.records) {
    if (r.status == Status::kFail) {
      std::cout << "FAIL " << r.theorem_id << " " << r.graph_id << " bound " << r.bound << " observed "
                << r.observed << "\n";
    }
  }
  if (!report.nonbipartite_f_n_minus_2.empty()) {
    std::cout << "non-bipartite graphs with f = n-2: " << report.nonbipartite_f_n_minus_2.size() << "\n";
  }
}

int emit_report(const Options& o, const Report& report) {
  if (!o.output.empty()) {
    std::ofstream out(o.output, std::ios::trunc);
    if (!out) throw ResourceError("cannot open " + o.output);
    write_json(out, report);
  }
  if (o.json) {
    write_json(std::cout, report);
  } else {
    print_summary(report);
  }
  std::fprintf(stderr, "wall time %.2fs, %d worker(s)\n", report.wall_seconds, o.workers);
  return exit_status(report, o.strict);
}

SweepConfig base_config(const Options& o) {
  SweepConfig c;
  c.workers = o.workers;
  c.limits = o.limits;
  c.jsonl_path = o.jsonl;
  c.csv_path = o.csv;
  c.checkpoint_path = o.checkpoint;
  c.checkpoint_every = o.checkpoint_every;
  c.all_records = o.all_records;
  return c;
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

int cmd_verify(const Options& o) {
  SweepConfig c = base_config(o);
  c.mode = Universe::kStream;
  c.require_pm = false;
  c.all_records = true;
  const std::vector<std::string> sources = o.inputs.empty() ? std::vector<std::string>{"-"} : o.inputs;
  for (const std::string& path : sources) {
    if (path == "-") {
      auto lines = read_lines(std::cin);
      c.stream.insert(c.stream.end(), lines.begin(), lines.end());
      continue;
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    auto lines = read_lines(in);
    c.stream.insert(c.stream.end(), lines.begin(), lines.end());
  }
  return emit_report(o, run_sweep(c));
}

int cmd_sweep(const Options& o) {
  SweepConfig c = base_config(o);
  c.dedup = o.dedup;
  c.max_order = o.max_order;
  c.side_size = o.side;
  c.require_pm = !o.keep_all_graphs;
  if (o.mode == "all_graphs") {
    c.mode = Universe::kAllGraphs;
  } else if (o.mode == "bipartite_balanced") {
    c.mode = Universe::kBipartiteBalanced;
  } else if (o.mode == "stream") {
    c.mode = Universe::kStream;
    c.stream = read_lines(std::cin);
  } else {
    throw ParseError("unknown sweep mode '" + o.mode + "'");
  }
  return emit_report(o, run_sweep(c));
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_flag("--json", o.json, "Machine-readable JSON on stdout");
  cmd->add_option("--pm-limit", o.limits.pm_limit, "Perfect-matching enumeration ceiling");
  cmd->add_option("--node-limit", o.limits.node_limit, "Search-node ceiling per solver call");
  cmd->add_option("--cycle-limit", o.limits.cycle_limit, "Alternating-cycle enumeration ceiling");
}

void add_report(CLI::App* cmd, Options& o) {
  cmd->add_option("--workers", o.workers, "Worker threads (default $FORCING_LAB_WORKERS or 1)");
  cmd->add_option("--csv", o.csv, "Write one CSV row per record");
  cmd->add_option("--jsonl", o.jsonl, "Write one JSON line per record");
  cmd->add_option("-o,--output", o.output, "Write the JSON report to a file");
  cmd->add_flag("--strict-conjectures", o.strict, "Exit 4 when a conjecture counterexample is found");
  cmd->add_option("--checkpoint", o.checkpoint, "Checkpoint file for resuming (needs --jsonl)");
  cmd->add_option("--checkpoint-every", o.checkpoint_every, "Shards between checkpoints");
}

/// Accepts "max_order=8" and "side=3" positionals.
void apply_assignments(Options& o, const std::vector<std::string>& extra) {
  for (const std::string& a : extra) {
    const auto eq = a.find('=');
    if (eq == std::string::npos) throw ParseError("unexpected argument '" + a + "'");
    const std::string key = a.substr(0, eq);
    int value = 0;
    try {
      std::size_t used = 0;
      value = std::stoi(a.substr(eq + 1), &used);
      if (used != a.size() - eq - 1) throw std::invalid_argument(a);
    } catch (const std::exception&) {
      throw ParseError("bad value in '" + a + "'");
    }
    if (key == "max_order") {
      o.max_order = value;
    } else if (key == "side" || key == "side_size") {
      o.side = value;
    } else if (key == "workers") {
      o.workers = value;
    } else {
      throw ParseError("unknown setting '" + key + "'");
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  o.workers = default_workers();
  CLI::App app{"Forcing and anti-forcing numbers of perfect matchings"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "Forcing spectrum of graph6 strings or family specs");
  compute->add_option("input", o.inputs, "graph6 string or family spec such as H:6,2")->required();
  add_common(compute, o);

  auto* generate = app.add_subcommand("generate", "graph6 lines for family specs");
  generate->add_option("spec", o.inputs, "Family spec such as grid:4x4 or G1:3")->required();

  auto* verify = app.add_subcommand("verify", "Check every statement on a graph6 stream");
  verify->add_option("input", o.inputs, "graph6 files, '-' for stdin (default)");
  add_common(verify, o);
  add_report(verify, o);

  std::vector<std::string> assignments;
  auto* sweep = app.add_subcommand("sweep", "Exhaustive verification over a graph universe");
  sweep->add_option("mode", o.mode, "all_graphs | bipartite_balanced | stream")
      ->check(CLI::IsMember({"all_graphs", "bipartite_balanced", "stream"}));
  sweep->add_option("settings", assignments, "max_order=N or side=N");
  sweep->add_option("--max-order", o.max_order, "Largest order for all_graphs");
  sweep->add_option("--side", o.side, "Largest side size for bipartite_balanced");
  sweep->add_flag("--dedup", o.dedup, "One graph per isomorphism class");
  sweep->add_flag("--all-records", o.all_records, "Keep every record in the JSON report");
  sweep->add_flag("--include-no-pm", o.keep_all_graphs, "Also emit records for graphs without a perfect matching");
  add_common(sweep, o);
  add_report(sweep, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }
  try {
    apply_assignments(o, assignments);
    if (o.workers < 1) throw ParseError("--workers must be at least 1");
    if (*compute) return cmd_compute(o);
    if (*generate) return cmd_generate(o);
    if (*verify) return cmd_verify(o);
    return cmd_sweep(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ResourceError& e) {
    std::cerr << "resource ceiling: " << e.what() << "\n";
    return kExitResource;
  }
}
