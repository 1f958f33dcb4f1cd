// Copyright 2026 The latpar Authors
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

#include "latpar/word_graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <set>
#include <sstream>

#include "latpar/display.hpp"

namespace latpar {

std::string format_score(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  return buf;
}

double round2(double x) { return std::stod(format_score(x)); }

namespace {

std::string rstrip(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.pop_back();
  return s;
}

std::string lstrip(std::string s) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

bool parse_int(const std::string& s, int& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

bool parse_double(const std::string& s, double& out) {
  try {
    std::size_t used = 0;
    out = std::stod(s, &used);
    return used == s.size() && std::isfinite(out);
  } catch (const std::exception&) {
    return false;
  }
}

std::string lower_ascii(std::string s) {
  for (char& c : s)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

WordGraph parse_graph_file(std::istream& in) {
  std::vector<WordHypothesis> edges;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = lstrip(rstrip(raw));
    if (line.empty() || line[0] == '#') continue;
    if (line.front() != '[' || line.back() != ']')
      throw MalformedLineError(lineno,
                               "expected \"[<from> <word> <score> <to>]\"");
    auto toks = split_ws(line.substr(1, line.size() - 2));
    if (toks.size() != 4)
      throw MalformedLineError(
          lineno, "expected 4 fields, got " + std::to_string(toks.size()));
    WordHypothesis h;
    if (!parse_int(toks[0], h.from))
      throw MalformedLineError(lineno, "bad from-node '" + toks[0] + "'");
    if (!parse_int(toks[3], h.to))
      throw MalformedLineError(lineno, "bad to-node '" + toks[3] + "'");
    if (!parse_double(toks[2], h.rs))
      throw MalformedLineError(lineno, "bad score '" + toks[2] + "'");
    h.word = lower_ascii(toks[1]);
    if (h.from < 1 || h.to < 1)
      throw ValidationError("line " + std::to_string(lineno) +
                            ": node ids must be >= 1");
    if (h.from >= h.to)
      throw ValidationError("line " + std::to_string(lineno) +
                            ": edge runs backwards (from >= to)");
    if (h.rs <= 0.0)
      throw ValidationError("line " + std::to_string(lineno) +
                            ": non-positive score");
    edges.push_back(std::move(h));
  }
  if (edges.empty()) throw EmptyGraphError();
  return WordGraph::from_edges(std::move(edges));
}

WordGraph WordGraph::from_edges(std::vector<WordHypothesis> edges) {
  if (edges.empty()) throw EmptyGraphError();
  WordGraph g;
  g.edges_ = std::move(edges);

  std::set<NodeId> node_set;
  for (int i = 0; i < static_cast<int>(g.edges_.size()); ++i) {
    const auto& e = g.edges_[i];
    if (e.from < 1 || e.to < 1)
      throw ValidationError("node ids must be >= 1");
    if (e.from >= e.to)
      throw ValidationError("edge '" + e.word + "' runs backwards (" +
                            std::to_string(e.from) + " >= " +
                            std::to_string(e.to) + ")");
    if (!(e.rs > 0.0) || !std::isfinite(e.rs))
      throw ValidationError("edge '" + e.word + "' has a non-positive score");
    if (e.word.empty() ||
        e.word.find_first_of(" \t\r\n") != std::string::npos)
      throw ValidationError("edge between " + std::to_string(e.from) +
                            " and " + std::to_string(e.to) +
                            " has an empty or whitespace word");
    node_set.insert(e.from);
    node_set.insert(e.to);
    g.out_[e.from].push_back(i);
    g.in_[e.to].push_back(i);
  }
  g.nodes_.assign(node_set.begin(), node_set.end());
  g.start_ = g.nodes_.front();
  g.final_ = g.nodes_.back();
  g.validate();
  g.compute_segment_costs();
  g.maxseg_ = g.best_segment_cost(g.start_, g.final_);
  return g;
}

void WordGraph::validate() const {
  for (NodeId n : nodes_) {
    if (n != final_ && out_.find(n) == out_.end())
      throw ValidationError("disconnected node " + std::to_string(n) +
                            ": no outgoing edges");
    if (n != start_ && in_.find(n) == in_.end())
      throw ValidationError("disconnected node " + std::to_string(n) +
                            ": no incoming edges");
  }
}

void WordGraph::compute_segment_costs() {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  // Single-pass DAG shortest path from every source, relaxing edges in
  // ascending node order.
  for (std::size_t si = 0; si < nodes_.size(); ++si) {
    std::map<NodeId, double> dist;
    dist[nodes_[si]] = 0.0;
    for (std::size_t ui = si; ui < nodes_.size(); ++ui) {
      NodeId u = nodes_[ui];
      auto du = dist.find(u);
      if (du == dist.end()) continue;
      auto out_it = out_.find(u);
      if (out_it == out_.end()) continue;
      for (int ei : out_it->second) {
        const auto& e = edges_[ei];
        double nd = du->second + e.rs;
        auto [it, inserted] = dist.emplace(e.to, nd);
        if (!inserted && nd < it->second) it->second = nd;
      }
    }
    dist.erase(nodes_[si]);
    for (const auto& [v, c] : dist) {
      if (c < kInf) seg_cost_[nodes_[si]][v] = c;
    }
  }
}

double WordGraph::best_segment_cost(NodeId i, NodeId j) const {
  if (i >= j) throw NoPathError(i, j);
  auto row = seg_cost_.find(i);
  if (row == seg_cost_.end()) throw NoPathError(i, j);
  auto it = row->second.find(j);
  if (it == row->second.end()) throw NoPathError(i, j);
  return it->second;
}

const std::vector<int>& WordGraph::out_edges(NodeId n) const {
  static const std::vector<int> kEmpty;
  auto it = out_.find(n);
  return it == out_.end() ? kEmpty : it->second;
}

const std::vector<int>& WordGraph::in_edges(NodeId n) const {
  static const std::vector<int> kEmpty;
  auto it = in_.find(n);
  return it == in_.end() ? kEmpty : it->second;
}

std::string WordGraph::serialize() const {
  std::string out;
  for (const auto& e : edges_) {
    out += "[" + std::to_string(e.from) + " " + e.word + " " +
           format_score(e.rs) + " " + std::to_string(e.to) + "]\n";
  }
  return out;
}

}  // namespace latpar
