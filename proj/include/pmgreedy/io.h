// Copyright 2026 The Authors.
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

#ifndef PMGREEDY_IO_H_
#define PMGREEDY_IO_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pmgreedy/auction.h"
#include "pmgreedy/curvature.h"
#include "pmgreedy/digraph.h"
#include "pmgreedy/logdet.h"
#include "pmgreedy/panel.h"
#include "pmgreedy/partition_matroid.h"

namespace pmgreedy {

// Station panels as CSV: header `station_id,country,t1,...,tM`, then one row
// per station. LF and CRLF line endings are accepted; quoting is not.
// Throws ParseError (with the line number) on ragged rows, non-numeric
// temperatures or duplicate station ids, and IoError if the file is missing.
TimeSeriesPanel ParsePanelCsv(std::istream& in, const std::string& source);
TimeSeriesPanel LoadPanelCsv(const std::string& path);
void WritePanelCsv(const TimeSeriesPanel& panel, const std::string& path);

// Edge lists: one arc `u v [w]` per line, weight defaulting to 1. Lines
// starting with '#' or '%' are comments, except the directives
// `# vertices N` (fixes the vertex count and 0-based ids) and `# undirected`.
// Without a vertex directive, ids are 1-based when the smallest id is >= 1
// and 0-based otherwise. `undirected` (or the directive) mirrors each line
// into two arcs. Throws ParseError on negative weights and self-loops.
WeightedDigraph ParseEdgeList(std::istream& in, const std::string& source,
                              bool undirected);
WeightedDigraph LoadEdgeList(const std::string& path, bool undirected = false);
void WriteEdgeList(const WeightedDigraph& g, const std::string& path);

// Auctions as JSON:
//   {"players": n, "items": m, "utilities": [
//       {"type": "budget_additive", "values": [...], "cap": c} |
//       {"type": "additive", "values": [...]}, ...]}
// Throws ParseError naming the offending field.
AuctionInstance ParseAuctionJson(const nlohmann::json& j);
AuctionInstance LoadAuctionJson(const std::string& path);
// Every utility must be a BudgetAdditiveFunction.
nlohmann::ordered_json AuctionToJson(const AuctionInstance& a);
void WriteAuctionJson(const AuctionInstance& a, const std::string& path);

// Symmetric matrices as JSON: {"n": n, "entries": [[...], ...]}.
PsdMatrix LoadMatrixJson(const std::string& path);
void WriteMatrixJson(const PsdMatrix& p, const std::string& path);

// Partition files: one block per line, `capacity id id ...`; '#' comments.
PartitionMatroid ParsePartition(std::istream& in, const std::string& source,
                                int n);
PartitionMatroid LoadPartitionFile(const std::string& path, int n);

// Outcome of one run, as written by the command-line tool.
struct ResultRecord {
  struct Instance {
    std::string type;
    std::string source;
    std::vector<std::pair<std::string, std::string>> parameters;
  };
  struct Exact {
    double value = 0.0;
    std::vector<Element> set;
    std::int64_t feasible_count = 0;
    std::int64_t oracle_calls = 0;
  };
  struct Guarantee {
    std::string family;
    double value = 0.0;
  };

  Instance instance;
  int blocks = 0;
  int d = 0;
  int d_bar = 0;
  double greedy_value = 0.0;
  std::vector<Element> selections;
  std::int64_t oracle_calls = 0;
  bool stopped_early = false;
  std::optional<Exact> exact;
  // Present iff `exact` is; greedy / exact, or 1 when both are 0.
  std::optional<double> ratio;
  std::optional<CurvatureReport> curvature;
  std::optional<Guarantee> guarantee;
  double wall_seconds = 0.0;
};

// Sets `exact` and the matching ratio.
void SetExact(ResultRecord& r, ResultRecord::Exact exact);

nlohmann::ordered_json ToJson(const ResultRecord& r);
ResultRecord ResultFromJson(const nlohmann::json& j);
nlohmann::ordered_json ToJson(const CurvatureReport& c);
CurvatureReport CurvatureFromJson(const nlohmann::json& j);

// Serializes with a stable field order and every double printed with 17
// significant digits, so values survive a write/read cycle bit for bit.
// Non-finite doubles become null.
std::string DumpJson(const nlohmann::ordered_json& j, int indent = 2);

void WriteResultJson(const ResultRecord& r, const std::string& path);
ResultRecord ReadResultJson(const std::string& path);

}  // namespace pmgreedy

#endif  // PMGREEDY_IO_H_
