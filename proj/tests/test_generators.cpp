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

#include <random>

#include "doctest.h"
#include "dsplab/error.hpp"
#include "dsplab/generators.hpp"
#include "dsplab/graph.hpp"
#include "dsplab/solvers.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace dsplab;

namespace {

Partition P(std::vector<ItemSet> parts, std::size_t n) { return Partition(std::move(parts), n); }

Graph single_edge() {
  Graph g(2);
  g.add_edge(0, 1);
  return g;
}

SolveResult exact(const Instance& inst) { return solve_exact(inst); }

// Reports: base partition for the listed mediators, silence for the rest.
StrategyProfile speaking_profile(const Instance& inst, const std::vector<std::size_t>& speak) {
  StrategyProfile p = silent_profile(inst);
  for (auto t : speak) p.reports[t] = base_partition(inst, t);
  return p;
}

}  // namespace

TEST_CASE("identity family") {
  const Instance i100 = gen_identity(4, 100);
  CHECK(revenue(i100, Partition::whole(4)) == Rational(25));
  CHECK(revenue(i100, P({{0, 1}, {2, 3}}, 4)) == Rational(50));
  CHECK(revenue(gen_identity(4, 1), Partition::singletons(4)) == Rational(0));
  CHECK(base_partition(i100, 0) == P({{0, 1}, {2, 3}}, 4));
  CHECK(base_partition(i100, 1) == P({{0, 2}, {1, 3}}, 4));
  const Instance i3 = gen_identity(3, 2);
  CHECK(i3.mediator_count() == 1);
  CHECK(base_partition(i3, 0) == Partition::singletons(3));
  CHECK(i3.valuations[1][1] == Rational(2));
  CHECK(i3.valuations[1][0] == Rational(0));
  CHECK_THROWS_AS(gen_identity(0, 1), InvalidInput);
  CHECK(ident4() == gen_identity(4, 1));
}

TEST_CASE("DSP_n family") {
  const Instance d1 = gen_dspn(1, Rational(1, 2));
  CHECK(d1.items() == 4);
  CHECK(d1.bidders() == 3);
  CHECK(d1.mediator_count() == 2);
  CHECK(is_local_expert(d1, 0) == ItemSet{0, 1});
  CHECK(is_local_expert(d1, 1) == ItemSet{1, 2});
  // O_1 = {{a1,b1},{c1,d}} with mediator 1 silent.
  CHECK(revenue(d1, P({{0, 1}, {2, 3}}, 4)) == Rational(1, 2));
  CHECK(default_dspn_eps(1) == Rational(1, 2));
  CHECK(default_dspn_eps(3) == Rational(1, 9));
  CHECK(gen_dspn(2) == gen_dspn(2, Rational(1, 4)));
  CHECK_THROWS_AS(gen_dspn(2, Rational(0)), InvalidInput);
  CHECK_THROWS_AS(gen_dspn(2, Rational(1)), InvalidInput);
  CHECK_THROWS_AS(gen_dspn(0, Rational(1, 2)), InvalidInput);

  const Instance d3 = gen_dspn(3);
  CHECK(d3.items() == 10);
  CHECK(d3.bidders() == 5);
  const Rational eps(1, 9);
  // i_G: eps on b items, 1 elsewhere; i_O: 1 on d; i_l: 1 on b_l.
  for (Item j = 0; j < 10; ++j) {
    const bool is_b = j >= 3 && j < 6;
    CHECK(d3.valuations[0][j] == (is_b ? eps : Rational(1)));
    CHECK(d3.valuations[1][j] == (j == 9 ? Rational(1) : Rational(0)));
    for (std::size_t l = 0; l < 3; ++l) {
      CHECK(d3.valuations[2 + l][j] == (j == 3 + l ? Rational(1) : Rational(0)));
    }
  }
  CHECK(base_partition(d3, 0).size() == 7);
  CHECK(base_partition(d3, 1).size() == 7);
}

TEST_CASE("DSP_n part contributions") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const Instance d = gen_dspn(n);
    const Rational eps = default_dspn_eps(n);
    const Rational unit = Rational(1) / Rational(static_cast<std::int64_t>(3 * n + 1));
    const Item dd = 3 * n;
    auto is_b = [&](Item j) { return j >= n && j < 2 * n; };
    std::mt19937_64 rng(n);
    for (int trial = 0; trial < 300; ++trial) {
      ItemSet part;
      for (Item j = 0; j <= dd; ++j) {
        if (rng() % 3 == 0) part.push_back(j);
      }
      if (part.empty()) continue;
      const bool has_d = std::find(part.begin(), part.end(), dd) != part.end();
      const bool has_b = std::any_of(part.begin(), part.end(), is_b);
      Rational expected = 0;
      if (has_d || (has_b && part.size() >= 2)) expected = unit;
      else if (has_b) expected = eps * unit;
      CHECK(bundle_contribution(d, part) == expected);
    }
  }
}

TEST_CASE("graphs and edge lists") {
  Graph g(3);
  g.add_edge(2, 0);
  g.add_edge(0, 2);
  CHECK(g.edges().size() == 1);
  CHECK(g.adjacent(0, 2));
  CHECK_FALSE(g.adjacent(0, 1));
  CHECK_THROWS_AS(g.add_edge(1, 1), InvalidInput);
  CHECK_THROWS_AS(g.add_edge(1, 3), InvalidInput);
  CHECK(g.is_independent({0, 1}));
  CHECK_FALSE(g.is_independent({0, 2}));

  const Graph parsed = parse_edge_list("# triangle\n0 1\n1 2 # inline\n\n2 0\n");
  CHECK(parsed.node_count() == 3);
  CHECK(parsed.edges() == Graph::complete(3).edges());
  const Graph header = parse_edge_list("p 5\n0 1\n");
  CHECK(header.node_count() == 5);
  CHECK(parse_edge_list(format_edge_list(header)).edges() == header.edges());
  CHECK(parse_edge_list(format_edge_list(header)).node_count() == 5);
  CHECK_THROWS_AS(parse_edge_list("0 x\n"), InvalidInput);
  CHECK_THROWS_AS(parse_edge_list("p 2\n0 3\n"), InvalidInput);
  CHECK_THROWS_AS(parse_edge_list("1 1\n"), InvalidInput);
  CHECK(Graph::path(4).edges().size() == 3);
}

TEST_CASE("reduction dimensions and wiring") {
  const ReductionInstance r = gen_mis_reduction(single_edge(), 3);
  CHECK(r.instance.items() == 12);
  CHECK(r.instance.bidders() == 7);
  CHECK(r.instance.mediator_count() == 6);
  CHECK(gen_mis_reduction(single_edge()).map.ell == 3);
  for (std::size_t t = 0; t < 6; ++t) CHECK(base_partition(r.instance, t).size() == 2);
  // Every mediator of the complete graph covers all helpers but misses the
  // other nodes' main items.
  const ReductionInstance k3 = gen_mis_reduction(Graph::complete(3), 1);
  CHECK(base_partition(k3.instance, 0) == P({{0, 1, 3, 5}, {2, 4}}, 6));
  // Isolated node with ell = 1 and N = 1: the first part covers everything.
  const ReductionInstance lone = gen_mis_reduction(Graph(1), 1);
  CHECK(base_partition(lone.instance, 0).is_whole());
  CHECK_THROWS_AS(gen_mis_reduction(Graph(0)), InvalidInput);
  CHECK_THROWS_AS(gen_mis_reduction(single_edge(), 0), InvalidInput);
}

TEST_CASE("edge2 fixture") {
  const ReductionInstance e = edge2();
  CHECK(e.map.ell == 1);
  const Instance& inst = e.instance;
  CHECK(revenue(inst, joint_partition(inst, speaking_profile(inst, {0}))) == Rational(1));
  CHECK(revenue(inst, joint_partition(inst, speaking_profile(inst, {0, 1}))) == Rational(0));
  CHECK(extract_independent_set(single_edge(), e.map, {0}) == std::vector<Node>{0});
  CHECK(extract_independent_set(single_edge(), e.map, {1}) == std::vector<Node>{1});
  CHECK(extract_independent_set(single_edge(), e.map, {0, 1}) == std::vector<Node>{0});
  CHECK(extract_independent_set(Graph(2), gen_mis_reduction(Graph(2), 1).map, {0, 1}) ==
        std::vector<Node>{0, 1});
}

TEST_CASE("reduction part contributions") {
  for (Node nodes = 1; nodes <= 3; ++nodes) {
    const Graph g = Graph::path(nodes);
    const ReductionInstance r = gen_mis_reduction(g, 2);
    std::mt19937_64 rng(nodes);
    for (int trial = 0; trial < 200; ++trial) {
      ItemSet part;
      for (Item j = 0; j < r.instance.items(); ++j) {
        if (rng() % 4 == 0) part.push_back(j);
      }
      if (part.empty()) continue;
      const bool has_main = std::any_of(part.begin(), part.end(), [](Item j) { return j % 2 == 0; });
      const Rational expected = part.size() >= 2 && has_main ? Rational(1) : Rational(0);
      CHECK(bundle_contribution(r.instance, part) == expected);
    }
  }
}

TEST_CASE("extracted sets are independent") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const Node n = 1 + rng() % 6;
    Graph g(n);
    for (Node u = 0; u < n; ++u) {
      for (Node v = u + 1; v < n; ++v) {
        if (rng() % 2) g.add_edge(u, v);
      }
    }
    const ReductionMap map{n, 1 + rng() % 3};
    std::vector<std::size_t> speaking;
    for (std::size_t t = 0; t < map.mediator_count(); ++t) {
      if (rng() % 2) speaking.push_back(t);
    }
    const auto set = extract_independent_set(g, map, speaking);
    CHECK_FALSE(set.empty());
    CHECK(g.is_independent(set));
  }
}

TEST_CASE("MIS pipeline") {
  const auto edge = run_mis_pipeline(single_edge(), 3, exact);
  CHECK(edge.independent_set.size() == 1);
  CHECK(single_edge().is_independent(edge.independent_set));
  const auto empty = run_mis_pipeline(Graph(2), 3, exact);
  CHECK(empty.independent_set == std::vector<Node>{0, 1});
  const auto tri = run_mis_pipeline(Graph::complete(3), 4, exact);
  CHECK(tri.independent_set.size() == 1);
  CHECK(tri.speaking == speaking_mediators(tri.solve.profile));
}

TEST_CASE("brute-force MIS") {
  CHECK(brute_force_mis(single_edge()).size == 1);
  CHECK(brute_force_mis(Graph::complete(3)).size == 1);
  const MisResult p4 = brute_force_mis(Graph::path(4));
  CHECK(p4.size == 2);
  CHECK(p4.witness == std::vector<Node>{0, 2});
  CHECK(brute_force_mis(Graph(3)).witness == std::vector<Node>{0, 1, 2});
  CHECK_THROWS_AS(brute_force_mis(Graph(21)), LimitExceeded);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Node n = 1 + rng() % 9;
    Graph g(n);
    for (Node u = 0; u < n; ++u) {
      for (Node v = u + 1; v < n; ++v) {
        if (rng() % 3 == 0) g.add_edge(u, v);
      }
    }
    const MisResult r = brute_force_mis(g);
    CHECK(r.size == oracle::mis_size(n, g.edges()));
    CHECK(r.witness.size() == r.size);
    CHECK(g.is_independent(r.witness));
  }
}

TEST_CASE("random instances") {
  CHECK(gen_random(5, 3, 2, 42) == gen_random(5, 3, 2, 42));
  CHECK_FALSE(gen_random(5, 3, 2, 42) == gen_random(5, 3, 2, 43));
  RandomOptions le;
  le.local_experts = true;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 1 + seed % 8, k = 1 + seed % 5, m = 1 + seed % 3;
    const Instance a = gen_random(n, k, m, seed);
    CHECK(a.items() == n);
    CHECK(a.bidders() == k);
    CHECK(a.mediator_count() == m);
    CHECK_FALSE(validation_error(a).has_value());
    for (std::size_t t = 0; t < m; ++t) CHECK(base_partition(a, t).size() <= 3);
    const Instance b = gen_random(n, k, m, seed, le);
    CHECK(b.items() == n);
    CHECK(b.bidders() == k);
    CHECK(b.mediator_count() == m);
    for (std::size_t t = 0; t < m; ++t) CHECK(is_local_expert(b, t).has_value());
  }
  CHECK_THROWS_AS(gen_random(0, 1, 1, 0), InvalidInput);
}

TEST_CASE("named fixtures") {
  CHECK(loc2().valuations == std::vector<std::vector<Rational>>{{10, 0}, {0, 8}});
  CHECK(loc3().items() == 3);
  CHECK(trim5().valuations[1] == std::vector<Rational>{0, 8, 8, 8, 8});
  for (const auto& inst : {loc2(), loc3(), trim5()}) {
    CHECK(inst.mediator_count() == 1);
    CHECK(base_partition(inst, 0) == Partition::singletons(inst.items()));
  }
}
