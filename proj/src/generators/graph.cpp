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

#include "dsplab/graph.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "dsplab/error.hpp"

namespace dsplab {

void Graph::add_edge(Node u, Node v) {
  if (u == v) throw InvalidInput("self-loop at node " + std::to_string(u));
  if (u >= node_count_ || v >= node_count_) {
    throw InvalidInput("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") out of range for " + std::to_string(node_count_) + " nodes");
  }
  edges_.emplace(std::min(u, v), std::max(u, v));
}

bool Graph::adjacent(Node u, Node v) const {
  return edges_.count({std::min(u, v), std::max(u, v)}) > 0;
}

std::vector<Node> Graph::neighbors(Node v) const {
  std::vector<Node> out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::is_independent(const std::vector<Node>& nodes) const {
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      if (nodes[a] == nodes[b] || adjacent(nodes[a], nodes[b])) return false;
    }
  }
  return true;
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (Node u = 0; u < n; ++u) {
    for (Node v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph Graph::path(std::size_t n) {
  Graph g(n);
  for (Node u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::optional<std::size_t> declared;
  std::vector<std::pair<Node, Node>> pairs;
  std::size_t max_index_plus_one = 0;
  std::string line;
  for (int ln = 1; std::getline(in, line); ++ln) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    const auto where = " at line " + std::to_string(ln);
    if (first == "p") {
      long long n = -1;
      if (!(fields >> n) || n < 0) throw InvalidInput("malformed header" + where);
      declared = static_cast<std::size_t>(n);
      continue;
    }
    long long u = -1, v = -1;
    std::istringstream first_field(first);
    std::string rest;
    if (!(first_field >> u) || !(fields >> v) || u < 0 || v < 0 || (fields >> rest)) {
      throw InvalidInput("malformed edge" + where);
    }
    pairs.emplace_back(static_cast<Node>(u), static_cast<Node>(v));
    max_index_plus_one = std::max<std::size_t>(max_index_plus_one, std::max(u, v) + 1);
  }
  Graph g(declared.value_or(max_index_plus_one));
  for (const auto& [u, v] : pairs) g.add_edge(u, v);
  return g;
}

Graph read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open graph file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

std::string format_edge_list(const Graph& g) {
  std::string out = "p " + std::to_string(g.node_count()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace dsplab
