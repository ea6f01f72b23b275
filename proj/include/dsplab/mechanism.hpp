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

#ifndef DSPLAB_MECHANISM_HPP
#define DSPLAB_MECHANISM_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dsplab/game.hpp"
#include "dsplab/limits.hpp"
#include "dsplab/rational.hpp"

namespace dsplab {

// Shapley payments Pi_1..Pi_m for one profile.
struct PaymentVector {
  std::vector<Rational> payments;

  Rational total() const;
  friend bool operator==(const PaymentVector&, const PaymentVector&) = default;
};

enum class PaymentRule {
  // Average marginal contribution over all m! player orderings.
  kPermutation,
  // Weighted sum over the 2^(m-1) coalitions preceding each player.
  kSubsets,
};

// v(a_J) for every coalition mask J; entry 0 is v(null).
std::vector<Rational> coalition_values(const Game& game, std::span<const std::size_t> profile);

// gamma[s] = s!(m-s-1)!/m!, the probability that a fixed s-player coalition
// precedes a given player in a uniformly random ordering.
std::vector<Rational> coalition_weights(std::size_t m);

// Throws LimitExceeded when m > limits.max_permutation_players.
PaymentVector shapley_permutation(const Game& game, std::span<const std::size_t> profile,
                                  const Limits& limits = {});
// Throws LimitExceeded when m > limits.max_subset_players.
PaymentVector shapley_subsets(const Game& game, std::span<const std::size_t> profile,
                              const Limits& limits = {});
PaymentVector shapley(const Game& game, std::span<const std::size_t> profile, PaymentRule rule,
                      const Limits& limits = {});

// Pi_t alone via the subset formula.
Rational shapley_payment(const Game& game, std::span<const std::size_t> profile, std::size_t t,
                         const Limits& limits = {});

// Exact potential: sum over nonempty J of (|J|-1)!(m-|J|)!/m! * v(a_J).
Rational potential(const Game& game, std::span<const std::size_t> profile,
                   const Limits& limits = {});

// No player has a unilateral deviation with a strictly larger payment.
bool is_nash(const Game& game, std::span<const std::size_t> profile,
             PaymentRule rule = PaymentRule::kSubsets, const Limits& limits = {});

// Player t's payment-maximizing strategy against profile_{-t}. The current
// strategy is kept when it attains the maximum; other ties go to the lowest
// strategy index.
std::size_t best_response(const Game& game, std::span<const std::size_t> profile, std::size_t t,
                          const Limits& limits = {});

struct DynamicsStep {
  std::size_t player = 0;
  std::size_t from = 0;
  std::size_t to = 0;
  Rational potential_before;
  Rational potential_after;
};

struct DynamicsTrace {
  std::vector<DynamicsStep> steps;
  StrategyTuple start;
  StrategyTuple final;
  bool converged = false;
};

// Best-response dynamics visiting players in `order` (0..m-1 when empty)
// until a full pass makes no strict improvement.
DynamicsTrace run_brd(const Game& game, StrategyTuple start,
                      std::vector<std::size_t> order = {}, const Limits& limits = {});

struct Equilibrium {
  StrategyTuple profile;
  Rational value;
  PaymentVector payments;
};

// Every pure Nash equilibrium under Shapley payments, in profile-index order.
std::vector<Equilibrium> enumerate_equilibria(const Game& game, const Limits& limits = {});

// opt / (NE value), or infinite when the NE value is 0 and opt > 0.
struct PriceRatio {
  bool infinite = false;
  Rational value;

  std::string str() const;
  friend bool operator==(const PriceRatio&, const PriceRatio&) = default;
};

PriceRatio price_ratio(const Rational& opt, const Rational& equilibrium_value);

struct PriceReport {
  PriceRatio anarchy;
  PriceRatio stability;
  Rational opt;
  Rational worst_equilibrium;
  Rational best_equilibrium;
  std::size_t equilibrium_count = 0;
};

// PoA = opt / worst NE value and PoS = opt / best NE value.
PriceReport poa_pos(const Game& game, const Limits& limits = {});

// Given a game whose value equals v(null) everywhere except at `bump`,
// checks that the surplus at `bump` is split equally among its non-null
// players. Throws PreconditionFailed when another profile differs from
// v(null).
bool anonymity_check(const Game& game, std::span<const std::size_t> bump,
                     const Limits& limits = {});

}  // namespace dsplab

#endif  // DSPLAB_MECHANISM_HPP
