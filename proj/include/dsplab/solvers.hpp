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

#ifndef DSPLAB_SOLVERS_HPP
#define DSPLAB_SOLVERS_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dsplab/instance.hpp"
#include "dsplab/limits.hpp"
#include "dsplab/partition.hpp"
#include "dsplab/profile.hpp"
#include "dsplab/rational.hpp"

namespace dsplab {

enum class Method { kExact, kSilent, kAllReport, kLocalExperts, kLocalExpertsAuxiliary };

std::string to_string(Method method);
// Accepts the CLI spellings: exact, silent, all-report, local-experts.
std::optional<Method> parse_method(const std::string& name);

struct SolveStats {
  std::uint64_t profiles_examined = 0;
  std::chrono::nanoseconds elapsed{0};
};

// A realizable joint signal: `joint` is the meet of `profile.reports` and
// `revenue` is R(joint).
struct SolveResult {
  StrategyProfile profile;
  Partition joint = Partition::whole(0);
  Rational revenue;
  Method method = Method::kExact;
  SolveStats stats;
};

// Every mediator silent; within a factor max{1, min{n, k-1}} of optimal.
SolveResult baseline_silent(const Instance& inst);

// Every mediator reports its base partition.
SolveResult all_report(const Instance& inst);

// Brute force over all products of coarsenings. Ties go to the
// lexicographically first tuple of coarsening indices.
SolveResult solve_exact(const Instance& inst, const Limits& limits = {});

// Local expert support set I_t when mediator t's base partition has at most
// one non-singleton part; I_t is the union of the singleton parts.
std::optional<ItemSet> is_local_expert(const Instance& inst, std::size_t t);

struct ExpertView {
  // Union of every mediator's I_t.
  ItemSet hat_items;
  // I_t per mediator.
  std::vector<ItemSet> expert_sets;
  // h_j = mu(j) max_i v_ij and s_j = mu(j) max^(2)_i v_ij.
  std::vector<Rational> high;
  std::vector<Rational> second;
  // Lowest bidder index attaining the maximum value for item j; the sets
  // H_i = {j : owner[j] = i} are disjoint.
  std::vector<Bidder> owner;
};

// Throws PreconditionFailed("mediator t is not a local expert").
ExpertView expert_view(const Instance& inst);

// Greedy cover of j among the still-alive items: the best candidate
// I_t ∩ H_i' ∩ alive (t with j in I_t, i' != owner[j]) by h-sum, ties to
// lowest (t, i'); trimmed in descending h order (higher index first on ties)
// until the sum is at most 2 h_j when it reaches h_j.
ItemSet find_cover(const Instance& inst, const ExpertView& view, Item j, const ItemSet& alive);

// phi(S): per-bidder sums of h over H_i ∩ S, minus the largest.
Rational phi(const Instance& inst, const ExpertView& view, const ItemSet& bundle);

// Greedy cover partition P_A together with a profile whose meet is P_A.
SolveResult local_expert_auxiliary(const Instance& inst);

// Best of silent, all-report and the auxiliary partition; at least OPT / 5
// when every mediator is a local expert.
SolveResult local_expert_solve(const Instance& inst);

}  // namespace dsplab

#endif  // DSPLAB_SOLVERS_HPP
