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

#ifndef DSPLAB_GENERATORS_HPP
#define DSPLAB_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dsplab/graph.hpp"
#include "dsplab/instance.hpp"
#include "dsplab/rational.hpp"
#include "dsplab/solvers.hpp"

namespace dsplab {

// Uniform prior and V = value * identity. For size 4 the two mediators hold
// {{0,1},{2,3}} and {{0,2},{1,3}}; any other size gets a single fully
// informed mediator. Throws InvalidInput for size < 1.
Instance gen_identity(std::size_t size, const Rational& value);

// 1/n^2, or 1/2 for n = 1 (where 1/n^2 leaves the open interval (0,1)).
Rational default_dspn_eps(std::size_t n);

// The two-local-expert family over items a_1..a_n, b_1..b_n, c_1..c_n, d
// (indices 0..3n in that order) and bidders i_G, i_O, i_1..i_n. Mediator 0
// is expert on the a and b items, mediator 1 on the b and c items.
Instance gen_dspn(std::size_t n, const Rational& eps);
Instance gen_dspn(std::size_t n);

// Index bookkeeping of the independent-set reduction. Node v's k-th pair is
// items 2(v*ell + k) (main) and 2(v*ell + k) + 1 (helper); its bidder and
// mediator are both v*ell + k; the helper bidder comes last.
struct ReductionMap {
  std::size_t nodes = 0;
  std::size_t ell = 0;

  std::size_t item(Node v, std::size_t k) const { return 2 * (v * ell + k); }
  std::size_t helper_item(Node v, std::size_t k) const { return item(v, k) + 1; }
  std::size_t bidder(Node v, std::size_t k) const { return v * ell + k; }
  std::size_t helper_bidder() const { return nodes * ell; }
  std::size_t mediator(Node v, std::size_t k) const { return v * ell + k; }
  Node node_of_mediator(std::size_t t) const { return t / ell; }

  std::size_t item_count() const { return 2 * ell * nodes; }
  std::size_t bidder_count() const { return ell * nodes + 1; }
  std::size_t mediator_count() const { return ell * nodes; }
};

struct ReductionInstance {
  Instance instance;
  ReductionMap map;
};

// `ell` defaults to N + 1. Throws InvalidInput for ell < 1 or an empty graph
// without nodes.
ReductionInstance gen_mis_reduction(const Graph& g, std::optional<std::size_t> ell = {});

// S' = speaking mediators with no speaking mediator on a neighboring node;
// returns the nodes of S', or {0} when S' is empty.
std::vector<Node> extract_independent_set(const Graph& g, const ReductionMap& map,
                                          const std::vector<std::size_t>& speaking);

using DspSolver = std::function<SolveResult(const Instance&)>;

struct MisPipelineResult {
  std::vector<Node> independent_set;
  std::vector<std::size_t> speaking;
  SolveResult solve;
};

// Reduce, solve, read off the speaking mediators and extract an independent
// set.
MisPipelineResult run_mis_pipeline(const Graph& g, std::optional<std::size_t> ell,
                                   const DspSolver& solver);

struct MisResult {
  std::size_t size = 0;
  std::vector<Node> witness;
};

// Exhaustive maximum independent set with the lexicographically first
// witness. Throws LimitExceeded for more than 20 nodes.
MisResult brute_force_mis(const Graph& g);

struct RandomOptions {
  bool local_experts = false;
  // Valuations are integers in [0, value_max].
  std::uint32_t value_max = 10;
  // Weights are integers in [1, weight_max].
  std::uint32_t weight_max = 4;
  // Non-expert base partitions use at most this many parts.
  std::size_t max_parts = 3;
};

// Deterministic in (n, k, m, seed, options).
Instance gen_random(std::size_t n, std::size_t k, std::size_t m, std::uint64_t seed,
                    const RandomOptions& options = {});

Instance local_expert_instance(std::vector<Rational> weights,
                               std::vector<std::vector<Rational>> valuations,
                               const std::vector<ItemSet>& expert_sets);

// Named fixtures.
Instance ident4();
// V rows (10,0),(0,8); one fully informed expert.
Instance loc2();
// V rows (9,0,0),(0,6,0),(0,0,6); one fully informed expert.
Instance loc3();
// V rows (12,0,0,0,0),(0,8,8,8,8); one fully informed expert.
Instance trim5();
// Reduction instance of the single-edge graph with ell = 1.
ReductionInstance edge2();

}  // namespace dsplab

#endif  // DSPLAB_GENERATORS_HPP
