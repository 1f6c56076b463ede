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

#ifndef FORCING_LAB_REPORT_HPP_
#define FORCING_LAB_REPORT_HPP_

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "forcing_lab/verifier.hpp"

namespace forcing_lab {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

/// Per-theorem record counts, indexed by Status.
using StatusCounts = std::array<long long, 5>;

struct Summary {
  std::map<std::string, StatusCounts> by_theorem;
  StatusCounts totals{};
  long long graphs = 0;
  /// A CONJ_5_1 counterexample record exists.
  bool counterexample_found = false;
  /// Equality-case mismatches on statements that do not characterize
  /// equality (reported, not failed).
  long long equality_mismatches = 0;
};

/// A merged verification run. Wall time is kept out of the serialized form
/// so that reports are byte-identical across runs and worker counts.
struct Report {
  /// Serialized records; a sweep keeps only notable ones unless asked.
  std::vector<VerdictRecord> records;
  /// Counts over every record produced, serialized or not.
  Summary summary;
  /// Non-bipartite graphs with f = n - 2 (exploratory, no verdict).
  std::vector<std::string> nonbipartite_f_n_minus_2;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  double wall_seconds = 0.0;
};

inline bool record_less(const VerdictRecord& a, const VerdictRecord& b) {
  return std::tie(a.graph_id, a.theorem_id, a.detail) < std::tie(b.graph_id, b.theorem_id, b.detail);
}

inline void sort_records(std::vector<VerdictRecord>& records) {
  std::stable_sort(records.begin(), records.end(), record_less);
}

/// Adds records to running counts. A graph's records must be contiguous.
inline void tally(Summary& s, std::span<const VerdictRecord> records) {
  for (std::size_t i = 0; i < records.size(); ++i) {
    const VerdictRecord& r = records[i];
    const auto k = static_cast<std::size_t>(r.status);
    s.by_theorem[r.theorem_id][k] += 1;
    s.totals[k] += 1;
    if (i == 0 || r.graph_id != records[i - 1].graph_id) ++s.graphs;
    if (r.status == Status::kCounterexample) s.counterexample_found = true;
    if (r.equality == EqualityCase::kMismatch && r.status == Status::kPass) ++s.equality_mismatches;
  }
}

inline Summary summarize(std::span<const VerdictRecord> records) {
  Summary s;
  tally(s, records);
  return s;
}

/// Recomputes the summary from the stored records.
inline void finalize(Report& report) { report.summary = summarize(report.records); }

/// Worth keeping in a sweep report: anything but a plain pass or an
/// inapplicable, and every equality case.
inline bool is_notable(const VerdictRecord& r) {
  if (r.status != Status::kPass && r.status != Status::kInapplicable) return true;
  return r.equality == EqualityCase::kMatchesExtremal || r.equality == EqualityCase::kMismatch;
}

inline bool has_failures(const Report& report) {
  return report.summary.totals[static_cast<std::size_t>(Status::kFail)] > 0;
}

/// Process exit status for a finished run: 1 when a proved statement
/// failed, 4 when `strict` and a conjecture counterexample was found, else 0.
inline int exit_status(const Report& report, bool strict) {
  if (has_failures(report)) return 1;
  if (strict && report.summary.counterexample_found) return 4;
  return 0;
}

inline nlohmann::ordered_json edges_to_json(std::span<const Edge> edges) {
  auto out = nlohmann::ordered_json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

inline nlohmann::ordered_json to_json(const GraphInputs& in) {
  return {{"n", in.n},       {"e", in.e},
          {"f", in.f},       {"F", in.big_f},
          {"delta", in.delta}, {"Af", in.af},
          {"r", in.r},       {"connected", in.connected},
          {"bipartite", in.bipartite}, {"split", in.split},
          {"cograph", in.cograph}};
}

inline nlohmann::ordered_json to_json(const VerdictRecord& r) {
  nlohmann::ordered_json j;
  j["graph"] = r.graph_id;
  j["theorem"] = r.theorem_id;
  j["status"] = to_string(r.status);
  j["equality"] = to_string(r.equality);
  j["bound"] = r.bound;
  j["bound_approx"] = r.bound_approx;
  j["observed"] = r.observed;
  j["inputs"] = to_json(r.inputs);
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (!r.witnesses.empty()) {
    auto w = nlohmann::ordered_json::array();
    for (const MatchingForcing& m : r.witnesses) {
      w.push_back({{"matching", edges_to_json(m.matching.edges())},
                   {"forcing", m.forcing},
                   {"forcing_set", edges_to_json(m.witness)}});
    }
    j["witnesses"] = std::move(w);
  }
  return j;
}

inline nlohmann::ordered_json to_json(const Summary& s) {
  auto counts = [](const StatusCounts& c) {
    nlohmann::ordered_json j;
    for (std::size_t i = 0; i < c.size(); ++i) j[to_string(static_cast<Status>(i))] = c[i];
    return j;
  };
  nlohmann::ordered_json theorems = nlohmann::ordered_json::object();
  for (const auto& [id, c] : s.by_theorem) theorems[id] = counts(c);
  return {{"graphs", s.graphs},
          {"totals", counts(s.totals)},
          {"counterexample_found", s.counterexample_found},
          {"equality_mismatches_reported", s.equality_mismatches},
          {"theorems", std::move(theorems)}};
}

/// Full report document. Records are expected in merged order and the
/// summary already filled.
inline nlohmann::ordered_json to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["environment"] = {{"tool", "forcing-lab"}, {"version", kToolVersion}, {"config", report.config}};
  j["summary"] = to_json(report.summary);
  j["exploratory"] = {{"nonbipartite_f_n_minus_2", report.nonbipartite_f_n_minus_2}};
  auto records = nlohmann::ordered_json::array();
  for (const VerdictRecord& r : report.records) records.push_back(to_json(r));
  j["records"] = std::move(records);
  return j;
}

inline Status status_from_string(const std::string& s) {
  for (int i = 0; i < 5; ++i) {
    if (s == to_string(static_cast<Status>(i))) return static_cast<Status>(i);
  }
  throw ParseError("unknown status '" + s + "'");
}

inline EqualityCase equality_from_string(const std::string& s) {
  for (int i = 0; i < 4; ++i) {
    if (s == to_string(static_cast<EqualityCase>(i))) return static_cast<EqualityCase>(i);
  }
  throw ParseError("unknown equality case '" + s + "'");
}

inline std::vector<Edge> edges_from_json(const nlohmann::ordered_json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) out.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return out;
}

/// Inverse of to_json(VerdictRecord).
inline VerdictRecord record_from_json(const nlohmann::ordered_json& j) {
  VerdictRecord r;
  r.graph_id = j.at("graph").get<std::string>();
  r.theorem_id = j.at("theorem").get<std::string>();
  r.status = status_from_string(j.at("status").get<std::string>());
  r.equality = equality_from_string(j.at("equality").get<std::string>());
  r.bound = j.at("bound").get<std::string>();
  r.bound_approx = j.at("bound_approx").get<double>();
  r.observed = j.at("observed").get<long long>();
  const auto& in = j.at("inputs");
  r.inputs.n = in.at("n");
  r.inputs.e = in.at("e");
  r.inputs.f = in.at("f");
  r.inputs.big_f = in.at("F");
  r.inputs.delta = in.at("delta");
  r.inputs.af = in.at("Af");
  r.inputs.r = in.at("r");
  r.inputs.connected = in.at("connected");
  r.inputs.bipartite = in.at("bipartite");
  r.inputs.split = in.at("split");
  r.inputs.cograph = in.at("cograph");
  if (j.contains("detail")) r.detail = j["detail"].get<std::string>();
  if (j.contains("witnesses")) {
    for (const auto& w : j["witnesses"]) {
      r.witnesses.push_back({Matching(edges_from_json(w.at("matching"))), w.at("forcing").get<int>(),
                             edges_from_json(w.at("forcing_set"))});
    }
  }
  return r;
}

inline void write_json(std::ostream& out, const Report& report) {
  out << to_json(report).dump(2) << '\n';
}

inline void write_json_lines(std::ostream& out, std::span<const VerdictRecord> records) {
  for (const VerdictRecord& r : records) out << to_json(r).dump() << '\n';
}

/// CSV columns, in order. One row per record; witnesses are omitted.
inline constexpr std::array<const char*, 19> kCsvColumns = {
    "graph", "theorem", "status", "equality", "bound", "bound_approx", "observed",
    "n",     "e",       "f",      "F",        "delta", "Af",           "r",
    "connected", "bipartite", "split", "cograph", "detail"};

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

inline void write_csv_header(std::ostream& out) {
  for (std::size_t i = 0; i < kCsvColumns.size(); ++i) out << (i ? "," : "") << kCsvColumns[i];
  out << '\n';
}

inline void write_csv_rows(std::ostream& out, std::span<const VerdictRecord> records) {
  for (const VerdictRecord& r : records) {
    const GraphInputs& in = r.inputs;
    char approx[32];
    std::snprintf(approx, sizeof approx, "%.10g", r.bound_approx);
    out << csv_field(r.graph_id) << ',' << r.theorem_id << ',' << to_string(r.status) << ','
        << to_string(r.equality) << ',' << csv_field(r.bound) << ',' << approx << ',' << r.observed
        << ',' << in.n << ',' << in.e << ',' << in.f << ',' << in.big_f << ',' << in.delta << ','
        << in.af << ',' << in.r << ',' << in.connected << ',' << in.bipartite << ',' << in.split
        << ',' << in.cograph << ',' << csv_field(r.detail) << '\n';
  }
}

inline void write_csv(std::ostream& out, std::span<const VerdictRecord> records) {
  write_csv_header(out);
  write_csv_rows(out, records);
}

}  // namespace forcing_lab

#endif  // FORCING_LAB_REPORT_HPP_
