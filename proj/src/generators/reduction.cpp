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

#include <algorithm>

#include "dsplab/error.hpp"
#include "dsplab/generators.hpp"

namespace dsplab {

ReductionInstance gen_mis_reduction(const Graph& g, std::optional<std::size_t> ell) {
  const std::size_t nodes = g.node_count();
  if (nodes < 1) throw InvalidInput("reduction needs at least one node");
  ReductionMap map{nodes, ell.value_or(nodes + 1)};
  if (map.ell < 1) throw InvalidInput("ell must be at least 1");

  const std::size_t n = map.item_count();
  const Rational top(static_cast<std::int64_t>(2 * map.ell * nodes));
  Instance inst;
  inst.weights.assign(n, Rational(1));
  inst.item_names.resize(n);
  inst.valuations.assign(map.bidder_count(), std::vector<Rational>(n, Rational(0)));
  inst.bidder_names.resize(map.bidder_count());
  for (Node v = 0; v < nodes; ++v) {
    for (std::size_t k = 0; k < map.ell; ++k) {
      const auto tag = std::to_string(v) + "_" + std::to_string(k);
      inst.item_names[map.item(v, k)] = "j" + tag;
      inst.item_names[map.helper_item(v, k)] = "h" + tag;
      inst.bidder_names[map.bidder(v, k)] = "i" + tag;
      inst.valuations[map.bidder(v, k)][map.item(v, k)] = top;
      inst.valuations[map.helper_bidder()][map.helper_item(v, k)] = top;
    }
  }
  inst.bidder_names[map.helper_bidder()] = "ih";

  for (Node v = 0; v < nodes; ++v) {
    const auto around = g.neighbors(v);
    for (std::size_t k = 0; k < map.ell; ++k) {
      std::vector<char> in_first(n, 0);
      in_first[map.item(v, k)] = 1;
      in_first[map.helper_item(v, k)] = 1;
      for (Node u : around) {
        for (std::size_t kk = 0; kk < map.ell; ++kk) in_first[map.helper_item(u, kk)] = 1;
      }
      ItemSet first, rest;
      for (Item j = 0; j < n; ++j) (in_first[j] ? first : rest).push_back(j);
      Mediator med{"m" + std::to_string(v) + "_" + std::to_string(k), {std::move(first)}};
      if (!rest.empty()) med.parts.push_back(std::move(rest));
      med.parts = Partition(std::move(med.parts), n).parts();
      inst.mediators.push_back(std::move(med));
    }
  }
  validate_instance(inst);
  return {std::move(inst), map};
}

std::vector<Node> extract_independent_set(const Graph& g, const ReductionMap& map,
                                          const std::vector<std::size_t>& speaking) {
  std::vector<char> node_speaks(map.nodes, 0);
  for (std::size_t t : speaking) {
    if (t >= map.mediator_count()) throw InvalidInput("mediator " + std::to_string(t) + " out of range");
    node_speaks[map.node_of_mediator(t)] = 1;
  }
  std::vector<char> chosen(map.nodes, 0);
  for (std::size_t t : speaking) {
    const Node v = map.node_of_mediator(t);
    bool isolated = true;
    for (Node u : g.neighbors(v)) {
      if (node_speaks[u]) {
        isolated = false;
        break;
      }
    }
    if (isolated) chosen[v] = 1;
  }
  std::vector<Node> out;
  for (Node v = 0; v < map.nodes; ++v) {
    if (chosen[v]) out.push_back(v);
  }
  if (out.empty()) out.push_back(0);
  return out;
}

MisPipelineResult run_mis_pipeline(const Graph& g, std::optional<std::size_t> ell,
                                   const DspSolver& solver) {
  const ReductionInstance reduction = gen_mis_reduction(g, ell);
  MisPipelineResult result;
  result.solve = solver(reduction.instance);
  result.speaking = speaking_mediators(result.solve.profile);
  result.independent_set = extract_independent_set(g, reduction.map, result.speaking);
  return result;
}

MisResult brute_force_mis(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n > 20) throw LimitExceeded("brute-force MIS is limited to 20 nodes");
  std::vector<std::uint32_t> adjacency(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adjacency[u] |= 1U << v;
    adjacency[v] |= 1U << u;
  }
  MisResult best;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool independent = true;
    for (Node v = 0; v < n && independent; ++v) {
      if ((mask >> v & 1U) && (adjacency[v] & mask)) independent = false;
    }
    if (!independent) continue;
    std::vector<Node> nodes;
    for (Node v = 0; v < n; ++v) {
      if (mask >> v & 1U) nodes.push_back(v);
    }
    if (nodes.size() > best.size || (nodes.size() == best.size && nodes < best.witness)) {
      best.size = nodes.size();
      best.witness = std::move(nodes);
    }
  }
  return best;
}

}  // namespace dsplab
