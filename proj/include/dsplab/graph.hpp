// Copyright 2026 The dsplab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DSPLAB_GRAPH_HPP
#define DSPLAB_GRAPH_HPP

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dsplab {

using Node = std::size_t;

// Simple undirected graph; edges stored as (min, max) pairs.
class Graph {
 public:
  explicit Graph(std::size_t node_count = 0) : node_count_(node_count) {}

  // Throws InvalidInput on self-loops and out-of-range endpoints; duplicate
  // edges are ignored.
  void add_edge(Node u, Node v);

  std::size_t node_count() const { return node_count_; }
  const std::set<std::pair<Node, Node>>& edges() const { return edges_; }
  bool adjacent(Node u, Node v) const;
  std::vector<Node> neighbors(Node v) const;
  bool is_independent(const std::vector<Node>& nodes) const;

  static Graph complete(std::size_t n);
  static Graph path(std::size_t n);

 private:
  std::size_t node_count_;
  std::set<std::pair<Node, Node>> edges_;
};

// Edge list: one "u v" pair per line, 0-based, '#' starts a comment. The node
// count is max index + 1 unless a "p N" header line is present.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list(const std::string& path);
std::string format_edge_list(const Graph& g);

}  // namespace dsplab

#endif  // DSPLAB_GRAPH_HPP
