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
#include <bit>
#include <numeric>
#include <string>

#include "dsplab/error.hpp"
#include "dsplab/mechanism.hpp"

namespace dsplab {

namespace {

void require_players(const Game& game, std::size_t cap, const char* what) {
  if (game.players() > cap) {
    throw LimitExceeded(std::string(what) + ": " + std::to_string(game.players()) +
                        " players exceeds the cap of " + std::to_string(cap));
  }
}

}  // namespace

Rational PaymentVector::total() const {
  Rational sum;
  for (const auto& p : payments) sum += p;
  return sum;
}

std::vector<Rational> coalition_values(const Game& game, std::span<const std::size_t> profile) {
  const std::size_t m = game.players();
  if (profile.size() != m) throw InvalidInput("strategy tuple has wrong length");
  if (m >= 63) throw LimitExceeded("too many players for coalition enumeration");
  std::vector<Rational> values(std::uint64_t{1} << m);
  for (std::uint64_t mask = 0; mask < values.size(); ++mask) {
    values[mask] = game.value(restrict_to(profile, mask));
  }
  return values;
}

PaymentVector shapley_permutation(const Game& game, std::span<const std::size_t> profile,
                                  const Limits& limits) {
  require_players(game, limits.max_permutation_players, "permutation Shapley");
  const std::size_t m = game.players();
  const auto values = coalition_values(game, profile);
  std::vector<Rational> sums(m);
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  do {
    std::uint64_t prefix = 0;
    for (std::size_t t : order) {
      const std::uint64_t with = prefix | (std::uint64_t{1} << t);
      sums[t] += values[with] - values[prefix];
      prefix = with;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  const Rational orderings = factorial(static_cast<unsigned>(m));
  PaymentVector out;
  for (auto& s : sums) out.payments.push_back(s / orderings);
  return out;
}

std::vector<Rational> coalition_weights(std::size_t m) {
  std::vector<Rational> gamma(m);
  const Rational mf = factorial(static_cast<unsigned>(m));
  for (std::size_t s = 0; s < m; ++s) {
    gamma[s] = factorial(static_cast<unsigned>(s)) *
               factorial(static_cast<unsigned>(m - s - 1)) / mf;
  }
  return gamma;
}

namespace {

Rational subset_payment(const std::vector<Rational>& values, const std::vector<Rational>& gamma,
                        std::size_t t) {
  const std::uint64_t bit = std::uint64_t{1} << t;
  Rational sum;
  for (std::uint64_t mask = 0; mask < values.size(); ++mask) {
    if (mask & bit) continue;
    sum += gamma[static_cast<std::size_t>(std::popcount(mask))] * (values[mask | bit] - values[mask]);
  }
  return sum;
}

}  // namespace

PaymentVector shapley_subsets(const Game& game, std::span<const std::size_t> profile,
                              const Limits& limits) {
  require_players(game, limits.max_subset_players, "subset Shapley");
  const std::size_t m = game.players();
  const auto values = coalition_values(game, profile);
  const auto gamma = coalition_weights(m);
  PaymentVector out;
  for (std::size_t t = 0; t < m; ++t) out.payments.push_back(subset_payment(values, gamma, t));
  return out;
}

PaymentVector shapley(const Game& game, std::span<const std::size_t> profile, PaymentRule rule,
                      const Limits& limits) {
  return rule == PaymentRule::kPermutation ? shapley_permutation(game, profile, limits)
                                           : shapley_subsets(game, profile, limits);
}

Rational shapley_payment(const Game& game, std::span<const std::size_t> profile, std::size_t t,
                         const Limits& limits) {
  require_players(game, limits.max_subset_players, "subset Shapley");
  if (t >= game.players()) throw InvalidInput("player index out of range");
  const auto values = coalition_values(game, profile);
  return subset_payment(values, coalition_weights(game.players()), t);
}

Rational potential(const Game& game, std::span<const std::size_t> profile, const Limits& limits) {
  require_players(game, limits.max_subset_players, "potential");
  const std::size_t m = game.players();
  const auto values = coalition_values(game, profile);
  // beta[s] = (s-1)!(m-s)!/m! for s >= 1; the empty coalition is skipped.
  std::vector<Rational> beta(m + 1);
  const Rational mf = factorial(static_cast<unsigned>(m));
  for (std::size_t s = 1; s <= m; ++s) {
    beta[s] = factorial(static_cast<unsigned>(s - 1)) *
              factorial(static_cast<unsigned>(m - s)) / mf;
  }
  Rational phi;
  for (std::uint64_t mask = 1; mask < values.size(); ++mask) {
    phi += beta[static_cast<std::size_t>(std::popcount(mask))] * values[mask];
  }
  return phi;
}

}  // namespace dsplab
