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

#ifndef FORCING_LAB_SWEEP_HPP_
#define FORCING_LAB_SWEEP_HPP_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "forcing_lab/graph6.hpp"
#include "forcing_lab/isomorphism.hpp"
#include "forcing_lab/report.hpp"
#include "forcing_lab/verifier.hpp"

namespace forcing_lab {

enum class Universe { kAllGraphs, kBipartiteBalanced, kStream };

inline const char* to_string(Universe u) {
  switch (u) {
    case Universe::kAllGraphs: return "all_graphs";
    case Universe::kBipartiteBalanced: return "bipartite_balanced";
    case Universe::kStream: return "stream";
  }
  return "?";
}

struct SweepConfig {
  Universe mode = Universe::kAllGraphs;
  /// all_graphs: every even order from 2 to max_order.
  int max_order = 6;
  /// bipartite_balanced: sides of size 1..side_size.
  int side_size = 3;
  bool require_pm = true;
  /// all_graphs: one graph per isomorphism class.
  bool dedup = false;
  int workers = 1;
  Limits limits;
  /// Keep every record in the report instead of the notable ones.
  bool all_records = false;
  /// stream: graph6 lines.
  std::vector<std::string> stream;
  std::string jsonl_path;
  std::string csv_path;
  std::string checkpoint_path;
  /// Checkpoint after this many merged shards.
  int checkpoint_every = 8;
};

/// Echo of everything that determines the report's content. Worker count and
/// output paths are left out.
inline nlohmann::ordered_json config_echo(const SweepConfig& c) {
  nlohmann::ordered_json j;
  j["mode"] = to_string(c.mode);
  if (c.mode == Universe::kAllGraphs) {
    j["max_order"] = c.max_order;
    j["dedup"] = c.dedup;
  }
  if (c.mode == Universe::kBipartiteBalanced) j["side_size"] = c.side_size;
  if (c.mode == Universe::kStream) {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (const std::string& line : c.stream) {
      for (unsigned char ch : line + "\n") h = (h ^ ch) * 1099511628211ULL;
    }
    j["stream_lines"] = c.stream.size();
    j["stream_fnv1a"] = h;
  }
  j["require_pm"] = c.require_pm;
  j["pm_limit"] = c.limits.pm_limit;
  j["node_limit"] = c.limits.node_limit;
  j["cycle_limit"] = c.limits.cycle_limit;
  j["all_records"] = c.all_records;
  return j;
}

/// Isomorphism classes of graphs of each order 1..max_order as canonical
/// graph6 strings in sorted order: every graph on p vertices is a graph on
/// p - 1 vertices plus one vertex, so extending each class by every
/// neighborhood and canonicalizing reaches all classes.
inline std::vector<std::vector<std::string>> isomorphism_classes(int max_order) {
  if (max_order < 1 || max_order > 12) throw GraphError("class generation needs 1 <= order <= 12");
  std::vector<std::vector<std::string>> out(max_order + 1);
  std::vector<Graph> current{Graph(1, std::vector<Edge>{})};
  out[1] = {graph6_encode(current.front())};
  for (int p = 2; p <= max_order; ++p) {
    std::set<std::string> seen;
    std::vector<Graph> next;
    for (const Graph& h : current) {
      const auto base = h.edges();
      for (VertexSet nb = 0; nb < bit(p - 1); ++nb) {
        auto edges = base;
        for (VertexSet s = nb; s; s &= s - 1) edges.emplace_back(lowest(s), p - 1);
        const Graph c = canonical_form(Graph(p, edges));
        if (seen.insert(graph6_encode(c)).second) next.push_back(c);
      }
    }
    out[p].assign(seen.begin(), seen.end());
    current = std::move(next);
  }
  return out;
}

namespace detail {

/// A contiguous slice of the universe.
struct Shard {
  enum Kind { kLabeled, kBipartite, kList } kind = kList;
  int order = 0;  // labeled: order; bipartite: side size
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
};

struct ShardResult {
  std::vector<VerdictRecord> records;
  std::exception_ptr error;
};

inline std::vector<Edge> all_pairs(int order) {
  std::vector<Edge> out;
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) out.emplace_back(u, v);
  }
  return out;
}

class SweepPlan {
 public:
  explicit SweepPlan(const SweepConfig& c) : config_(c) {
    constexpr std::uint64_t kChunk = 1024;
    constexpr std::uint64_t kListChunk = 64;
    switch (c.mode) {
      case Universe::kAllGraphs: {
        if (c.max_order < 2 || c.max_order > 12) throw GraphError("all_graphs needs 2 <= max_order <= 12");
        if (c.dedup) {
          const auto classes = isomorphism_classes(c.max_order);
          for (int p = 2; p <= c.max_order; p += 2) {
            items_.insert(items_.end(), classes[p].begin(), classes[p].end());
          }
          add_list_shards(kListChunk);
        } else {
          if (c.max_order > 8) throw GraphError("labeled enumeration is limited to order 8; use --dedup");
          for (int p = 2; p <= c.max_order; p += 2) {
            const std::uint64_t total = 1ULL << (p * (p - 1) / 2);
            for (std::uint64_t b = 0; b < total; b += kChunk) {
              shards_.push_back({Shard::kLabeled, p, b, std::min(total, b + kChunk)});
            }
          }
        }
        break;
      }
      case Universe::kBipartiteBalanced: {
        if (c.side_size < 1 || c.side_size > 5) throw GraphError("bipartite_balanced needs 1 <= side <= 5");
        for (int s = 1; s <= c.side_size; ++s) {
          const std::uint64_t total = 1ULL << (s * s);
          for (std::uint64_t b = 0; b < total; b += kChunk) {
            shards_.push_back({Shard::kBipartite, s, b, std::min(total, b + kChunk)});
          }
        }
        break;
      }
      case Universe::kStream:
        items_ = c.stream;
        add_list_shards(kListChunk);
        break;
    }
  }

  std::size_t size() const { return shards_.size(); }

  ShardResult run(std::size_t index) const {
    ShardResult out;
    try {
      const Shard& s = shards_[index];
      switch (s.kind) {
        case Shard::kLabeled: {
          const auto pairs = all_pairs(s.order);
          for (std::uint64_t m = s.begin; m < s.end; ++m) {
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < pairs.size(); ++i) {
              if ((m >> i) & 1ULL) edges.push_back(pairs[i]);
            }
            visit(Graph(s.order, edges), out.records);
          }
          break;
        }
        case Shard::kBipartite: {
          const int n = s.order;
          for (std::uint64_t m = s.begin; m < s.end; ++m) {
            std::vector<Edge> edges;
            for (int i = 0; i < n * n; ++i) {
              if ((m >> i) & 1ULL) edges.emplace_back(i / n, n + i % n);
            }
            visit(Graph(2 * n, edges), out.records);
          }
          break;
        }
        case Shard::kList:
          for (std::uint64_t i = s.begin; i < s.end; ++i) visit_line(items_[i], out.records);
          break;
      }
      sort_records(out.records);
    } catch (...) {
      out.error = std::current_exception();
    }
    return out;
  }

 private:
  void add_list_shards(std::uint64_t chunk) {
    for (std::uint64_t b = 0; b < items_.size(); b += chunk) {
      shards_.push_back({Shard::kList, 0, b, std::min<std::uint64_t>(items_.size(), b + chunk)});
    }
  }

  void visit(const Graph& g, std::vector<VerdictRecord>& out) const {
    if (config_.require_pm && (g.order() % 2 != 0 || !has_perfect_matching(g))) return;
    auto records = verify_graph(g, config_.limits);
    out.insert(out.end(), std::make_move_iterator(records.begin()), std::make_move_iterator(records.end()));
  }

  void visit_line(const std::string& line, std::vector<VerdictRecord>& out) const {
    std::optional<Graph> g;
    try {
      g = graph6_decode(line);
    } catch (const ParseError& err) {
      VerdictRecord r;
      r.theorem_id = "INPUT";
      r.graph_id = line;
      r.status = Status::kAborted;
      r.detail = err.what();
      out.push_back(std::move(r));
      return;
    }
    visit(*g, out);
  }

  const SweepConfig& config_;
  std::vector<Shard> shards_;
  std::vector<std::string> items_;
};

/// Merge state for consumed shards, in shard order.
class Merger {
 public:
  Merger(const SweepConfig& c, Report& report) : config_(c), report_(report) {}

  void open_outputs(std::uint64_t jsonl_bytes, std::uint64_t csv_bytes, bool resume) {
    namespace fs = std::filesystem;
    if (!config_.jsonl_path.empty()) {
      if (resume && fs::exists(config_.jsonl_path)) {
        fs::resize_file(config_.jsonl_path, jsonl_bytes);
        std::ifstream in(config_.jsonl_path);
        std::string line;
        std::vector<VerdictRecord> previous;
        while (std::getline(in, line)) {
          if (!line.empty()) previous.push_back(record_from_json(nlohmann::ordered_json::parse(line)));
        }
        absorb(previous);
      }
      jsonl_.open(config_.jsonl_path, resume ? std::ios::app : std::ios::trunc);
      if (!jsonl_) throw ResourceError("cannot open " + config_.jsonl_path);
    }
    if (!config_.csv_path.empty()) {
      const bool keep = resume && fs::exists(config_.csv_path);
      if (keep) fs::resize_file(config_.csv_path, csv_bytes);
      csv_.open(config_.csv_path, keep ? std::ios::app : std::ios::trunc);
      if (!csv_) throw ResourceError("cannot open " + config_.csv_path);
      if (!keep) write_csv_header(csv_);
    }
  }

  void consume(std::vector<VerdictRecord>& records) {
    if (jsonl_.is_open()) write_json_lines(jsonl_, records);
    if (csv_.is_open()) write_csv_rows(csv_, records);
    absorb(records);
  }

  std::uint64_t jsonl_bytes() {
    if (!jsonl_.is_open()) return 0;
    jsonl_.flush();
    return static_cast<std::uint64_t>(jsonl_.tellp());
  }

  std::uint64_t csv_bytes() {
    if (!csv_.is_open()) return 0;
    csv_.flush();
    return static_cast<std::uint64_t>(csv_.tellp());
  }

 private:
  void absorb(std::vector<VerdictRecord>& records) {
    tally(report_.summary, records);
    for (VerdictRecord& r : records) {
      if (r.theorem_id == theorem::kFNMinus1 && is_nonbipartite_f_n_minus_2(r.inputs)) {
        report_.nonbipartite_f_n_minus_2.push_back(r.graph_id);
      }
      if (config_.all_records || is_notable(r)) report_.records.push_back(std::move(r));
    }
  }

  const SweepConfig& config_;
  Report& report_;
  std::ofstream jsonl_;
  std::ofstream csv_;
};

struct Checkpoint {
  std::string fingerprint;
  std::size_t next_shard = 0;
  std::uint64_t jsonl_bytes = 0;
  std::uint64_t csv_bytes = 0;
};

inline std::optional<Checkpoint> read_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  const auto j = nlohmann::ordered_json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError("unreadable checkpoint " + path);
  return Checkpoint{j.at("fingerprint").get<std::string>(), j.at("next_shard").get<std::size_t>(),
                    j.at("jsonl_bytes").get<std::uint64_t>(), j.at("csv_bytes").get<std::uint64_t>()};
}

inline void write_checkpoint(const std::string& path, const Checkpoint& c) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw ResourceError("cannot write checkpoint " + tmp);
    nlohmann::ordered_json j;
    j["fingerprint"] = c.fingerprint;
    j["next_shard"] = c.next_shard;
    j["jsonl_bytes"] = c.jsonl_bytes;
    j["csv_bytes"] = c.csv_bytes;
    out << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace detail

/// Runs verify_graph over a universe with a pool of workers. Shards are
/// merged in shard order, so the report does not depend on the worker count;
/// the serialized records are then sorted by (graph6, theorem).
inline Report run_sweep(const SweepConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  if (!config.checkpoint_path.empty() && config.jsonl_path.empty()) {
    throw GraphError("--checkpoint needs a JSON-lines output path");
  }
  Report report;
  report.config = config_echo(config);
  const std::string fingerprint = report.config.dump();
  const detail::SweepPlan plan(config);

  std::optional<detail::Checkpoint> resume;
  if (!config.checkpoint_path.empty()) {
    resume = detail::read_checkpoint(config.checkpoint_path);
    if (resume && resume->fingerprint != fingerprint) {
      throw GraphError("checkpoint " + config.checkpoint_path + " belongs to a different sweep");
    }
  }
  const std::size_t first = resume ? std::min(resume->next_shard, plan.size()) : 0;
  detail::Merger merger(config, report);
  merger.open_outputs(resume ? resume->jsonl_bytes : 0, resume ? resume->csv_bytes : 0, resume.has_value());

  const std::size_t total = plan.size();
  std::vector<std::optional<detail::ShardResult>> slots(total);
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{first};
  std::atomic<bool> stop{false};
  auto worker = [&] {
    while (!stop) {
      const std::size_t i = next.fetch_add(1);
      if (i >= total) return;
      auto result = plan.run(i);
      {
        std::lock_guard<std::mutex> lock(mu);
        slots[i] = std::move(result);
      }
      ready.notify_all();
    }
  };
  const int workers = std::max(1, config.workers);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);

  std::exception_ptr error;
  for (std::size_t i = first; i < total && !error; ++i) {
    detail::ShardResult result;
    {
      std::unique_lock<std::mutex> lock(mu);
      ready.wait(lock, [&] { return slots[i].has_value(); });
      result = std::move(*slots[i]);
      slots[i].reset();
    }
    if (result.error) {
      error = result.error;
      break;
    }
    merger.consume(result.records);
    const bool last = i + 1 == total;
    if (!config.checkpoint_path.empty() &&
        (last || (i + 1 - first) % static_cast<std::size_t>(std::max(1, config.checkpoint_every)) == 0)) {
      detail::write_checkpoint(config.checkpoint_path,
                               {fingerprint, i + 1, merger.jsonl_bytes(), merger.csv_bytes()});
    }
  }
  stop = !!error;
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  sort_records(report.records);
  std::sort(report.nonbipartite_f_n_minus_2.begin(), report.nonbipartite_f_n_minus_2.end());
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace forcing_lab

#endif  // FORCING_LAB_SWEEP_HPP_
