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

#include "pmgreedy/io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <string_view>

#include "pmgreedy/errors.h"

namespace pmgreedy {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string FormatDouble(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  std::string s(buf);
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path + " for reading");
  return in;
}

std::ofstream OpenOutput(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  return out;
}

void FinishOutput(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("failed writing " + path);
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> SplitCsv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(Trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::string_view> SplitWhitespace(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    const std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename T>
bool ParseNumber(std::string_view token, T& out) {
  if (token.empty()) return false;
  if (token.front() == '+') token.remove_prefix(1);
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::string Where(const std::string& source, int line) {
  return source + ":" + std::to_string(line) + ": ";
}

const json& Field(const json& j, const std::string& key,
                  const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(where + ": missing field '" + key + "'");
  }
  return j.at(key);
}

int IntField(const json& j, const std::string& key, const std::string& where) {
  const json& v = Field(j, key, where);
  if (!v.is_number_integer()) {
    throw ParseError(where + "." + key + ": expected an integer");
  }
  return v.get<int>();
}

double NumberOrNull(const json& v) {
  if (v.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return v.get<double>();
}

std::vector<double> NumberArray(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) {
      throw ParseError(where + "[" + std::to_string(i) +
                       "]: expected a number");
    }
    out.push_back(v[i].get<double>());
  }
  return out;
}

void DumpTo(const ordered_json& j, int indent, int depth, std::string& out) {
  const std::string pad(indent * (depth + 1), ' ');
  const std::string close_pad(indent * depth, ' ');
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) {
          out += ",";
          out += nl;
        }
        first = false;
        out += pad;
        out += ordered_json(it.key()).dump();
        out += indent > 0 ? ": " : ":";
        DumpTo(it.value(), indent, depth + 1, out);
      }
      out += nl;
      out += close_pad + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::all_of(j.begin(), j.end(), [](const auto& v) {
        return v.is_primitive();
      });
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += flat ? ", " : ",";
        if (!flat) {
          out += nl;
          out += pad;
        }
        DumpTo(j[i], indent, depth + 1, out);
      }
      if (!flat) {
        out += nl;
        out += close_pad;
      }
      out += "]";
      return;
    }
    case json::value_t::number_float: {
      const double x = j.get<double>();
      out += std::isfinite(x) ? FormatDouble(x) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

ordered_json IdsToJson(std::span<const Element> ids) {
  ordered_json arr = ordered_json::array();
  for (Element e : ids) arr.push_back(e);
  return arr;
}

std::vector<Element> IdsFromJson(const json& v) {
  std::vector<Element> out;
  for (const auto& e : v) out.push_back(e.get<Element>());
  return out;
}

}  // namespace

TimeSeriesPanel ParsePanelCsv(std::istream& in, const std::string& source) {
  std::string line;
  int line_no = 0;
  std::size_t columns = 0;
  TimeSeriesPanel panel;
  std::set<std::string> ids;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const auto cells = SplitCsv(line);
    if (columns == 0) {
      if (cells.size() < 4 || cells[0] != "station_id" ||
          cells[1] != "country") {
        throw ParseError(Where(source, line_no) +
                         "expected header station_id,country,t1,t2,...");
      }
      columns = cells.size();
      continue;
    }
    if (cells.size() != columns) {
      throw ParseError(Where(source, line_no) + "expected " +
                       std::to_string(columns - 2) + " temperatures, got " +
                       std::to_string(cells.size() - 2));
    }
    Station st{std::string(cells[0]), std::string(cells[1]), {}};
    if (st.id.empty()) throw ParseError(Where(source, line_no) + "empty id");
    if (!ids.insert(st.id).second) {
      throw ParseError(Where(source, line_no) + "duplicate station_id '" +
                       st.id + "'");
    }
    for (std::size_t c = 2; c < cells.size(); ++c) {
      double v = 0.0;
      if (!ParseNumber(cells[c], v) || !std::isfinite(v)) {
        throw ParseError(Where(source, line_no) + "column " +
                         std::to_string(c + 1) + ": '" +
                         std::string(cells[c]) + "' is not a number");
      }
      st.temperatures.push_back(v);
    }
    panel.stations.push_back(std::move(st));
  }
  if (columns == 0) throw ParseError(source + ": missing header");
  if (panel.stations.empty()) throw ParseError(source + ": no stations");
  return panel;
}

TimeSeriesPanel LoadPanelCsv(const std::string& path) {
  auto in = OpenInput(path);
  return ParsePanelCsv(in, path);
}

void WritePanelCsv(const TimeSeriesPanel& panel, const std::string& path) {
  panel.Validate();
  auto out = OpenOutput(path);
  out << "station_id,country";
  const std::size_t len = panel.stations.front().temperatures.size();
  for (std::size_t t = 1; t <= len; ++t) out << ",t" << t;
  out << "\n";
  for (const Station& s : panel.stations) {
    out << s.id << "," << s.country;
    for (double v : s.temperatures) out << "," << FormatDouble(v);
    out << "\n";
  }
  FinishOutput(out, path);
}

WeightedDigraph ParseEdgeList(std::istream& in, const std::string& source,
                              bool undirected) {
  struct Line {
    long long u, v;
    double w;
    int line_no;
  };
  std::vector<Line> lines;
  std::optional<int> declared_n;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = Trim(line);
    if (body.empty()) continue;
    if (body.front() == '#' || body.front() == '%') {
      const auto tokens = SplitWhitespace(body.substr(1));
      if (tokens.size() == 2 && tokens[0] == "vertices") {
        int n = 0;
        if (!ParseNumber(tokens[1], n) || n < 1) {
          throw ParseError(Where(source, line_no) + "bad vertex count");
        }
        declared_n = n;
      } else if (tokens.size() == 1 && tokens[0] == "undirected") {
        undirected = true;
      }
      continue;
    }
    const auto tokens = SplitWhitespace(body);
    if (tokens.size() < 2 || tokens.size() > 3) {
      throw ParseError(Where(source, line_no) + "expected 'u v [w]'");
    }
    Line l{0, 0, 1.0, line_no};
    if (!ParseNumber(tokens[0], l.u) || !ParseNumber(tokens[1], l.v) ||
        l.u < 0 || l.v < 0) {
      throw ParseError(Where(source, line_no) + "vertex ids must be integers "
                       ">= 0");
    }
    if (tokens.size() == 3 && !ParseNumber(tokens[2], l.w)) {
      throw ParseError(Where(source, line_no) + "weight '" +
                       std::string(tokens[2]) + "' is not a number");
    }
    if (!(l.w >= 0.0) || !std::isfinite(l.w)) {
      throw ParseError(Where(source, line_no) + "negative or invalid weight");
    }
    if (l.u == l.v) throw ParseError(Where(source, line_no) + "self-loop");
    lines.push_back(l);
  }
  long long offset = 0;
  long long n = 0;
  if (declared_n) {
    n = *declared_n;
  } else {
    if (lines.empty()) throw ParseError(source + ": no edges");
    long long lo = lines.front().u;
    long long hi = 0;
    for (const Line& l : lines) {
      lo = std::min({lo, l.u, l.v});
      hi = std::max({hi, l.u, l.v});
    }
    offset = lo >= 1 ? 1 : 0;
    n = hi + 1 - offset;
  }
  std::vector<Arc> arcs;
  for (const Line& l : lines) {
    const long long u = l.u - offset;
    const long long v = l.v - offset;
    if (u >= n || v >= n) {
      throw ParseError(Where(source, l.line_no) + "vertex id exceeds the "
                       "declared vertex count " + std::to_string(n));
    }
    arcs.push_back({static_cast<int>(u), static_cast<int>(v), l.w});
  }
  if (undirected) return WeightedDigraph::Undirected(static_cast<int>(n), arcs);
  return WeightedDigraph(static_cast<int>(n), std::move(arcs));
}

WeightedDigraph LoadEdgeList(const std::string& path, bool undirected) {
  auto in = OpenInput(path);
  return ParseEdgeList(in, path, undirected);
}

void WriteEdgeList(const WeightedDigraph& g, const std::string& path) {
  auto out = OpenOutput(path);
  out << "# vertices " << g.num_vertices() << "\n";
  if (g.undirected()) out << "# undirected\n";
  for (const Arc& a : g.arcs()) {
    if (g.undirected() && a.source > a.target) continue;
    out << a.source << " " << a.target;
    if (a.weight != 1.0) out << " " << FormatDouble(a.weight);
    out << "\n";
  }
  FinishOutput(out, path);
}

AuctionInstance ParseAuctionJson(const json& j) {
  const int players = IntField(j, "players", "auction");
  const int items = IntField(j, "items", "auction");
  if (players < 1 || items < 1) {
    throw ParseError("auction: players and items must be >= 1");
  }
  const json& us = Field(j, "utilities", "auction");
  if (!us.is_array() || static_cast<int>(us.size()) != players) {
    throw ParseError("auction.utilities: expected " + std::to_string(players) +
                     " entries");
  }
  std::vector<std::shared_ptr<const SetFunction>> utilities;
  for (int p = 0; p < players; ++p) {
    const std::string where = "auction.utilities[" + std::to_string(p) + "]";
    const json& u = us[p];
    const json& type = Field(u, "type", where);
    if (!type.is_string()) throw ParseError(where + ".type: expected string");
    std::vector<double> values =
        NumberArray(Field(u, "values", where), where + ".values");
    if (static_cast<int>(values.size()) != items) {
      throw ParseError(where + ".values: expected " + std::to_string(items) +
                       " entries, got " + std::to_string(values.size()));
    }
    try {
      if (type == "additive") {
        utilities.push_back(AdditiveUtility(std::move(values)));
      } else if (type == "budget_additive") {
        const json& cap = Field(u, "cap", where);
        if (!cap.is_number()) {
          throw ParseError(where + ".cap: expected a number");
        }
        utilities.push_back(
            BudgetAdditiveUtility(std::move(values), cap.get<double>()));
      } else {
        throw ParseError(where + ".type: unknown utility type " + type.dump());
      }
    } catch (const InputError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  return AuctionInstance(players, items, std::move(utilities));
}

AuctionInstance LoadAuctionJson(const std::string& path) {
  auto in = OpenInput(path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return ParseAuctionJson(j);
}

ordered_json AuctionToJson(const AuctionInstance& a) {
  ordered_json j;
  j["players"] = a.players();
  j["items"] = a.items();
  ordered_json us = ordered_json::array();
  for (const auto& u : a.utilities()) {
    const auto* ba = dynamic_cast<const BudgetAdditiveFunction*>(u.get());
    if (ba == nullptr) {
      throw InputError("only budget-additive utilities can be serialized");
    }
    ordered_json entry;
    entry["type"] = ba->additive() ? "additive" : "budget_additive";
    entry["values"] = ba->values();
    if (!ba->additive()) entry["cap"] = ba->cap();
    us.push_back(std::move(entry));
  }
  j["utilities"] = std::move(us);
  return j;
}

void WriteAuctionJson(const AuctionInstance& a, const std::string& path) {
  auto out = OpenOutput(path);
  out << DumpJson(AuctionToJson(a)) << "\n";
  FinishOutput(out, path);
}

PsdMatrix LoadMatrixJson(const std::string& path) {
  auto in = OpenInput(path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  const int n = IntField(j, "n", "matrix");
  const json& rows = Field(j, "entries", "matrix");
  if (n < 1 || !rows.is_array() || static_cast<int>(rows.size()) != n) {
    throw ParseError("matrix.entries: expected " + std::to_string(n) +
                     " rows");
  }
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    const auto row =
        NumberArray(rows[i], "matrix.entries[" + std::to_string(i) + "]");
    if (static_cast<int>(row.size()) != n) {
      throw ParseError("matrix.entries[" + std::to_string(i) +
                       "]: expected " + std::to_string(n) + " entries");
    }
    for (int c = 0; c < n; ++c) m(i, c) = row[c];
  }
  try {
    return PsdMatrix(std::move(m));
  } catch (const InputError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void WriteMatrixJson(const PsdMatrix& p, const std::string& path) {
  ordered_json j;
  j["n"] = p.dim();
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < p.dim(); ++i) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < p.dim(); ++c) row.push_back(p(i, c));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  auto out = OpenOutput(path);
  out << DumpJson(j) << "\n";
  FinishOutput(out, path);
}

PartitionMatroid ParsePartition(std::istream& in, const std::string& source,
                                int n) {
  std::vector<std::vector<Element>> blocks;
  std::vector<int> caps;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = Trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto tokens = SplitWhitespace(body);
    int cap = 0;
    if (tokens.size() < 2 || !ParseNumber(tokens[0], cap)) {
      throw ParseError(Where(source, line_no) + "expected 'capacity id ...'");
    }
    std::vector<Element> block;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      Element e = 0;
      if (!ParseNumber(tokens[i], e)) {
        throw ParseError(Where(source, line_no) + "bad element id '" +
                         std::string(tokens[i]) + "'");
      }
      block.push_back(e);
    }
    blocks.push_back(std::move(block));
    caps.push_back(cap);
  }
  try {
    return PartitionMatroid(n, std::move(blocks), std::move(caps));
  } catch (const InputError& e) {
    throw ParseError(source + ": " + e.what());
  }
}

PartitionMatroid LoadPartitionFile(const std::string& path, int n) {
  auto in = OpenInput(path);
  return ParsePartition(in, path, n);
}

void SetExact(ResultRecord& r, ResultRecord::Exact exact) {
  r.ratio = exact.value > 0.0 ? r.greedy_value / exact.value : 1.0;
  r.exact = std::move(exact);
}

ordered_json ToJson(const CurvatureReport& c) {
  ordered_json j;
  j["alpha"] = c.alpha;
  j["method"] = std::string(ToString(c.method));
  if (c.witness) {
    ordered_json w;
    w["S"] = IdsToJson(c.witness->s.ids());
    w["Omega"] = IdsToJson(c.witness->omega.ids());
    w["element"] = c.witness->element;
    j["witness"] = std::move(w);
  }
  return j;
}

CurvatureReport CurvatureFromJson(const json& j) {
  CurvatureReport c;
  c.alpha = NumberOrNull(Field(j, "alpha", "curvature"));
  c.method = ParseCurvatureMethod(
      Field(j, "method", "curvature").get<std::string>());
  if (j.contains("witness")) {
    const json& w = j.at("witness");
    c.witness = CurvatureWitness{ElementSet(IdsFromJson(w.at("S"))),
                                 ElementSet(IdsFromJson(w.at("Omega"))),
                                 w.at("element").get<Element>()};
  }
  return c;
}

ordered_json ToJson(const ResultRecord& r) {
  ordered_json j;
  ordered_json inst;
  inst["type"] = r.instance.type;
  inst["source"] = r.instance.source;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.instance.parameters) params[k] = v;
  inst["parameters"] = std::move(params);
  j["instance"] = std::move(inst);

  ordered_json m;
  m["blocks"] = r.blocks;
  m["d"] = r.d;
  m["d_bar"] = r.d_bar;
  j["matroid"] = std::move(m);

  ordered_json g;
  g["value"] = r.greedy_value;
  g["selections"] = IdsToJson(r.selections);
  g["oracle_calls"] = r.oracle_calls;
  g["stopped_early"] = r.stopped_early;
  j["greedy"] = std::move(g);

  if (r.exact) {
    ordered_json e;
    e["value"] = r.exact->value;
    e["set"] = IdsToJson(r.exact->set);
    e["feasible_count"] = r.exact->feasible_count;
    e["oracle_calls"] = r.exact->oracle_calls;
    j["exact"] = std::move(e);
    j["ratio"] = r.ratio.value_or(1.0);
  }
  if (r.curvature) j["curvature"] = ToJson(*r.curvature);
  if (r.guarantee) {
    ordered_json gu;
    gu["family"] = r.guarantee->family;
    gu["value"] = r.guarantee->value;
    j["guarantee"] = std::move(gu);
  }
  j["wall_seconds"] = r.wall_seconds;
  return j;
}

ResultRecord ResultFromJson(const json& j) {
  ResultRecord r;
  try {
    const json& inst = j.at("instance");
    r.instance.type = inst.at("type").get<std::string>();
    r.instance.source = inst.at("source").get<std::string>();
    for (const auto& [k, v] : inst.at("parameters").items()) {
      r.instance.parameters.emplace_back(k, v.get<std::string>());
    }
    const json& m = j.at("matroid");
    r.blocks = m.at("blocks").get<int>();
    r.d = m.at("d").get<int>();
    r.d_bar = m.at("d_bar").get<int>();
    const json& g = j.at("greedy");
    r.greedy_value = g.at("value").get<double>();
    r.selections = IdsFromJson(g.at("selections"));
    r.oracle_calls = g.at("oracle_calls").get<std::int64_t>();
    r.stopped_early = g.at("stopped_early").get<bool>();
    if (j.contains("exact")) {
      const json& e = j.at("exact");
      r.exact = ResultRecord::Exact{e.at("value").get<double>(),
                                    IdsFromJson(e.at("set")),
                                    e.at("feasible_count").get<std::int64_t>(),
                                    e.at("oracle_calls").get<std::int64_t>()};
      r.ratio = j.at("ratio").get<double>();
    } else if (j.contains("ratio")) {
      throw ParseError("result: ratio present without exact optimum");
    }
    if (j.contains("curvature")) r.curvature = CurvatureFromJson(j["curvature"]);
    if (j.contains("guarantee")) {
      const json& gu = j.at("guarantee");
      r.guarantee = ResultRecord::Guarantee{gu.at("family").get<std::string>(),
                                            NumberOrNull(gu.at("value"))};
    }
    r.wall_seconds = j.at("wall_seconds").get<double>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("result: ") + e.what());
  }
  return r;
}

std::string DumpJson(const ordered_json& j, int indent) {
  std::string out;
  DumpTo(j, indent, 0, out);
  return out;
}

void WriteResultJson(const ResultRecord& r, const std::string& path) {
  auto out = OpenOutput(path);
  out << DumpJson(ToJson(r)) << "\n";
  FinishOutput(out, path);
}

ResultRecord ReadResultJson(const std::string& path) {
  auto in = OpenInput(path);
  try {
    return ResultFromJson(json::parse(in));
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace pmgreedy
