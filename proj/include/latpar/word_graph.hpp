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

#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "latpar/errors.hpp"

namespace latpar {

// Node ids are time-ordered: a larger id is a later point in time. Ids start
// at 1 and may have gaps.
using NodeId = int;

// One scored word hypothesis. The recognition score is a positive
// pseudo negative-log cost: the smaller the score, the more probable the
// hypothesis.
struct WordHypothesis {
  NodeId from = 0;
  NodeId to = 0;
  std::string word;
  double rs = 0.0;

  bool operator==(const WordHypothesis& o) const {
    return from == o.from && to == o.to && word == o.word && rs == o.rs;
  }
};

class MalformedLineError : public Error {
 public:
  MalformedLineError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class EmptyGraphError : public Error {
 public:
  EmptyGraphError() : Error("word graph has no edges") {}
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class NoPathError : public Error {
 public:
  NoPathError(NodeId i, NodeId j)
      : Error("no path from node " + std::to_string(i) + " to node " +
              std::to_string(j)),
        i_(i),
        j_(j) {}
  NodeId i() const { return i_; }
  NodeId j() const { return j_; }

 private:
  NodeId i_, j_;
};

// Immutable DAG of scored word hypotheses between time-point nodes.
// Acyclicity is structural (every edge satisfies from < to). The start node
// is the minimum id appearing, the final node the maximum. Construction
// validates connectivity (every node but final has an outgoing edge, every
// node but start an incoming one) and precomputes all best segment costs, so
// a constructed graph can be shared across concurrent readers.
//
// Naming note: the literature calls the best full-path total "Maxseg" and
// the best i->j segment total "maxseg(i,j)" in a big-is-good convention.
// Scores here are costs (smaller = better), so both quantities are path-cost
// minima; best_path_cost() and best_segment_cost() are those two values.
class WordGraph {
 public:
  static WordGraph from_edges(std::vector<WordHypothesis> edges);

  const std::vector<WordHypothesis>& edges() const { return edges_; }
  NodeId start() const { return start_; }
  NodeId final_node() const { return final_; }

  // Node ids in ascending order — a valid topological order since every
  // edge runs from a smaller to a larger id.
  const std::vector<NodeId>& topological_nodes() const { return nodes_; }

  // Maxseg: minimum over all start->final paths of the summed edge scores.
  double best_path_cost() const { return maxseg_; }

  // maxseg(i,j): minimum-cost path sum from i to j. Throws NoPathError when
  // the nodes do not exist, i >= j, or no path connects them.
  double best_segment_cost(NodeId i, NodeId j) const;

  // Edge indices leaving / entering a node (empty vector for unknown ids).
  const std::vector<int>& out_edges(NodeId n) const;
  const std::vector<int>& in_edges(NodeId n) const;

  // Line-based text form; scores with exactly 2 decimal places.
  std::string serialize() const;

 private:
  WordGraph() = default;
  void validate() const;
  void compute_segment_costs();

  std::vector<WordHypothesis> edges_;
  std::vector<NodeId> nodes_;
  NodeId start_ = 0;
  NodeId final_ = 0;
  double maxseg_ = 0.0;
  std::map<NodeId, std::vector<int>> out_;
  std::map<NodeId, std::vector<int>> in_;
  // seg_cost_[i][j] = best i->j cost; only reachable pairs are stored.
  std::map<NodeId, std::map<NodeId, double>> seg_cost_;
};

// Reads the line-based graph format:
//   # comment
//   [<from> <word> <score> <to>]
// Words are lowercased; trailing whitespace is ignored. Throws
// MalformedLineError / ValidationError / EmptyGraphError.
WordGraph parse_graph_file(std::istream& in);

}  // namespace latpar
