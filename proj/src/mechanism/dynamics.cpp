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

#include <numeric>
#include <string>

#include "dsplab/error.hpp"
#include "dsplab/mechanism.hpp"

namespace dsplab {

namespace {

Rational payment_of(const Game& game, std::span<const std::size_t> profile, std::size_t t,
                    PaymentRule rule, const Limits& limits) {
  if (rule == PaymentRule::kSubsets) return shapley_payment(game, profile, t, limits);
  return shapley_permutation(game, profile, limits).payments[t];
}

}  // namespace

bool is_nash(const Game& game, std::span<const std::size_t> profile, PaymentRule rule,
             const Limits& limits) {
  StrategyTuple a(profile.begin(), profile.end());
  game.space().index_of(a);
  for (std::size_t t = 0; t < game.players(); ++t) {
    const Rational current = payment_of(game, a, t, rule, limits);
    const std::size_t own = a[t];
    for (std::size_t s = 0; s < game.strategy_count(t); ++s) {
      if (s == own) continue;
      a[t] = s;
      const bool better = payment_of(game, a, t, rule, limits) > current;
      a[t] = own;
      if (better) return false;
    }
  }
  return true;
}

std::size_t best_response(const Game& game, std::span<const std::size_t> profile, std::size_t t,
                          const Limits& limits) {
  if (t >= game.players()) throw InvalidInput("player index out of range");
  StrategyTuple a(profile.begin(), profile.end());
  game.space().index_of(a);
  const std::size_t own = a[t];
  std::size_t best = own;
  Rational best_payment = shapley_payment(game, a, t, limits);
  for (std::size_t s = 0; s < game.strategy_count(t); ++s) {
    if (s == own) continue;
    a[t] = s;
    Rational p = shapley_payment(game, a, t, limits);
    if (p > best_payment) {
      best_payment = std::move(p);
      best = s;
    }
  }
  return best;
}

DynamicsTrace run_brd(const Game& game, StrategyTuple start, std::vector<std::size_t> order,
                      const Limits& limits) {
  game.space().index_of(start);
  if (order.empty()) {
    order.resize(game.players());
    std::iota(order.begin(), order.end(), 0);
  }
  for (std::size_t t : order) {
    if (t >= game.players()) throw InvalidInput("player " + std::to_string(t) + " in order is out of range");
  }
  DynamicsTrace trace;
  trace.start = start;
  StrategyTuple a = std::move(start);
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t t : order) {
      const std::size_t next = best_response(game, a, t, limits);
      if (next == a[t]) continue;
      if (trace.steps.size() >= limits.max_steps) {
        trace.final = a;
        return trace;
      }
      DynamicsStep step;
      step.player = t;
      step.from = a[t];
      step.to = next;
      step.potential_before = potential(game, a, limits);
      a[t] = next;
      step.potential_after = potential(game, a, limits);
      trace.steps.push_back(std::move(step));
      improved = true;
    }
  }
  trace.final = std::move(a);
  trace.converged = true;
  return trace;
}

}  // namespace dsplab
