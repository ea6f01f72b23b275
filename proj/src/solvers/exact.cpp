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
#include <chrono>
#include <thread>

#include "dsplab/error.hpp"
#include "dsplab/profile_space.hpp"
#include "dsplab/solvers.hpp"

namespace dsplab {

namespace {

struct Best {
  Rational value;
  std::uint64_t index = 0;
  bool found = false;
};

Best scan_range(const Instance& inst, const ProfileSpace& space,
                const std::vector<std::vector<std::vector<std::size_t>>>& labels,
                std::uint64_t begin, std::uint64_t end) {
  Best best;
  if (begin >= end) return best;
  RevenueEvaluator evaluator(inst);
  auto tuple = space.tuple_at(begin);
  std::vector<const std::vector<std::size_t>*> chosen(tuple.size());
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    for (std::size_t t = 0; t < tuple.size(); ++t) chosen[t] = &labels[t][tuple[t]];
    Rational r = evaluator.revenue_of_labels(chosen);
    if (!best.found || r > best.value) {
      best.value = std::move(r);
      best.index = idx;
      best.found = true;
    }
    space.next(tuple);
  }
  return best;
}

}  // namespace

SolveResult solve_exact(const Instance& inst, const Limits& limits) {
  const auto start = std::chrono::steady_clock::now();
  validate_instance(inst);
  const auto bases = base_partitions(inst);

  std::vector<std::size_t> radices;
  for (std::size_t t = 0; t < bases.size(); ++t) {
    if (bases[t].size() > limits.max_parts) {
      throw LimitExceeded("mediator " + std::to_string(t) + ": strategy space too large (" +
                          std::to_string(bases[t].size()) + " parts exceeds the cap of " +
                          std::to_string(limits.max_parts) + ")");
    }
    radices.push_back(bell_number(bases[t].size()));
  }
  const ProfileSpace space(radices);
  space.require_at_most(limits.max_profiles);

  std::vector<std::vector<Partition>> strategies;
  std::vector<std::vector<std::vector<std::size_t>>> labels;
  for (const auto& base : bases) {
    strategies.push_back(coarsenings(base, limits.max_parts));
    auto& l = labels.emplace_back();
    for (const auto& s : strategies.back()) l.push_back(s.labels());
  }

  const std::uint64_t total = space.size();
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(effective_threads(limits), total));
  std::vector<Best> partial(workers);
  if (workers <= 1) {
    partial[0] = scan_range(inst, space, labels, 0, total);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t b = total * w / workers;
      const std::uint64_t e = total * (w + 1) / workers;
      pool.emplace_back([&, w, b, e] { partial[w] = scan_range(inst, space, labels, b, e); });
    }
    for (auto& th : pool) th.join();
  }
  // Ranges are ordered, so keeping the first strict maximum preserves the
  // lowest-index tie-break.
  Best best;
  for (auto& p : partial) {
    if (p.found && (!best.found || p.value > best.value)) best = std::move(p);
  }

  SolveResult result;
  const auto tuple = space.tuple_at(best.index);
  for (std::size_t t = 0; t < tuple.size(); ++t) {
    result.profile.reports.push_back(strategies[t][tuple[t]]);
  }
  result.joint = joint_partition(inst, result.profile);
  result.revenue = best.found ? best.value : revenue(inst, result.joint);
  result.method = Method::kExact;
  result.stats.profiles_examined = total;
  result.stats.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace dsplab
