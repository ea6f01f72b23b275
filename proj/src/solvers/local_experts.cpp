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
#include <functional>

#include "dsplab/error.hpp"
#include "dsplab/solvers.hpp"

namespace dsplab {

std::optional<ItemSet> is_local_expert(const Instance& inst, std::size_t t) {
  const Partition base = base_partition(inst, t);
  ItemSet singles;
  std::size_t large = 0;
  for (const auto& part : base.parts()) {
    if (part.size() > 1) {
      ++large;
    } else {
      singles.push_back(part.front());
    }
  }
  if (large > 1) return std::nullopt;
  std::sort(singles.begin(), singles.end());
  return singles;
}

ExpertView expert_view(const Instance& inst) {
  validate_instance(inst);
  ExpertView view;
  std::vector<char> in_hat(inst.items(), 0);
  for (std::size_t t = 0; t < inst.mediator_count(); ++t) {
    auto set = is_local_expert(inst, t);
    if (!set) {
      throw PreconditionFailed("mediator " + std::to_string(t) + " is not a local expert");
    }
    for (Item j : *set) in_hat[j] = 1;
    view.expert_sets.push_back(std::move(*set));
  }
  for (Item j = 0; j < inst.items(); ++j) {
    if (in_hat[j]) view.hat_items.push_back(j);
  }

  const Rational total = total_weight(inst);
  view.high.resize(inst.items());
  view.second.resize(inst.items());
  view.owner.assign(inst.items(), 0);
  for (Item j = 0; j < inst.items(); ++j) {
    std::vector<Rational> column;
    for (Bidder i = 0; i < inst.bidders(); ++i) column.push_back(inst.valuations[i][j]);
    const auto top_it = std::max_element(column.begin(), column.end());
    view.owner[j] = top_it == column.end() ? 0 : static_cast<Bidder>(top_it - column.begin());
    const Rational top = top_it == column.end() ? Rational(0) : *top_it;
    std::sort(column.begin(), column.end(), std::greater<>());
    const Rational runner_up = column.size() < 2 ? Rational(0) : column[1];
    const Rational mu = inst.weights[j] / total;
    view.high[j] = mu * top;
    view.second[j] = mu * runner_up;
  }
  return view;
}

ItemSet find_cover(const Instance& inst, const ExpertView& view, Item j, const ItemSet& alive) {
  if (!std::binary_search(alive.begin(), alive.end(), j)) {
    throw PreconditionFailed("item " + std::to_string(j) + " is not alive");
  }
  if (!std::binary_search(view.hat_items.begin(), view.hat_items.end(), j)) {
    throw PreconditionFailed("item " + std::to_string(j) + " lies outside every expert set");
  }
  ItemSet best;
  Rational best_sum;
  bool have = false;
  for (std::size_t t = 0; t < view.expert_sets.size(); ++t) {
    const ItemSet& domain = view.expert_sets[t];
    if (!std::binary_search(domain.begin(), domain.end(), j)) continue;
    for (Bidder other = 0; other < inst.bidders(); ++other) {
      if (other == view.owner[j]) continue;
      ItemSet candidate;
      Rational sum;
      for (Item x : domain) {
        if (view.owner[x] == other && std::binary_search(alive.begin(), alive.end(), x)) {
          candidate.push_back(x);
          sum += view.high[x];
        }
      }
      if (!have || sum > best_sum) {
        best = std::move(candidate);
        best_sum = std::move(sum);
        have = true;
      }
    }
  }
  const Rational& target = view.high[j];
  if (!have || best_sum < target) return best;

  // Trim descending by h, higher index first on ties.
  ItemSet order = best;
  std::sort(order.begin(), order.end(), [&](Item a, Item b) {
    if (view.high[a] != view.high[b]) return view.high[a] > view.high[b];
    return a > b;
  });
  const Rational cap = target * Rational(2);
  std::vector<char> removed(inst.items(), 0);
  for (Item x : order) {
    if (best_sum <= cap) break;
    best_sum -= view.high[x];
    removed[x] = 1;
  }
  ItemSet trimmed;
  for (Item x : best) {
    if (!removed[x]) trimmed.push_back(x);
  }
  return trimmed;
}

Rational phi(const Instance& inst, const ExpertView& view, const ItemSet& bundle) {
  std::vector<Rational> sums(inst.bidders());
  for (Item j : bundle) sums.at(view.owner.at(j)) += view.high[j];
  if (sums.empty()) return Rational(0);
  Rational total, largest = sums.front();
  for (const auto& s : sums) {
    total += s;
    largest = std::max(largest, s);
  }
  return total - largest;
}

SolveResult local_expert_auxiliary(const Instance& inst) {
  const auto start = std::chrono::steady_clock::now();
  const ExpertView view = expert_view(inst);
  const std::size_t n = inst.items();

  std::vector<ItemSet> parts;
  {
    ItemSet rest;
    for (Item j = 0; j < n; ++j) {
      if (!std::binary_search(view.hat_items.begin(), view.hat_items.end(), j)) rest.push_back(j);
    }
    if (!rest.empty()) parts.push_back(std::move(rest));
  }
  const std::size_t remainder_parts = parts.size();

  ItemSet alive = view.hat_items;
  while (!alive.empty()) {
    Item j = alive.front();
    for (Item x : alive) {
      if (view.high[x] > view.high[j]) j = x;
    }
    ItemSet part = find_cover(inst, view, j, alive);
    part.push_back(j);
    std::sort(part.begin(), part.end());
    ItemSet next;
    std::set_difference(alive.begin(), alive.end(), part.begin(), part.end(),
                        std::back_inserter(next));
    alive = std::move(next);
    parts.push_back(std::move(part));
  }

  // Realize each non-remainder part through the lowest-index mediator whose
  // expert set contains it; that mediator reports its assigned parts and
  // lumps everything else together.
  const std::size_t m = inst.mediator_count();
  std::vector<std::vector<ItemSet>> assigned(m);
  for (std::size_t p = remainder_parts; p < parts.size(); ++p) {
    const ItemSet& part = parts[p];
    for (std::size_t t = 0; t < m; ++t) {
      const ItemSet& domain = view.expert_sets[t];
      if (std::includes(domain.begin(), domain.end(), part.begin(), part.end())) {
        assigned[t].push_back(part);
        break;
      }
    }
  }
  SolveResult result;
  for (std::size_t t = 0; t < m; ++t) {
    std::vector<char> used(n, 0);
    std::vector<ItemSet> report = assigned[t];
    for (const auto& part : report) {
      for (Item x : part) used[x] = 1;
    }
    ItemSet rest;
    for (Item x = 0; x < n; ++x) {
      if (!used[x]) rest.push_back(x);
    }
    if (!rest.empty()) report.push_back(std::move(rest));
    result.profile.reports.emplace_back(std::move(report), n);
  }
  result.joint = Partition(std::move(parts), n);
  result.revenue = revenue(inst, result.joint);
  result.method = Method::kLocalExpertsAuxiliary;
  result.stats.profiles_examined = 1;
  result.stats.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

SolveResult local_expert_solve(const Instance& inst) {
  const auto start = std::chrono::steady_clock::now();
  SolveResult candidates[] = {baseline_silent(inst), all_report(inst),
                              local_expert_auxiliary(inst)};
  std::size_t best = 0;
  for (std::size_t c = 1; c < 3; ++c) {
    if (candidates[c].revenue > candidates[best].revenue) best = c;
  }
  SolveResult result = std::move(candidates[best]);
  result.method = Method::kLocalExperts;
  result.stats.profiles_examined = 3;
  result.stats.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace dsplab
