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
#include <string>

#include "dsplab/error.hpp"
#include "dsplab/mechanism.hpp"

namespace dsplab {

namespace {

// Shapley payments read from a full value table.
class TablePayments {
 public:
  TablePayments(const ProfileSpace& space, const std::vector<Rational>& table)
      : space_(space), table_(table), gamma_(coalition_weights(space.players())),
        coalition_index_(std::uint64_t{1} << space.players()) {}

  // Loads the coalition indices of `profile`; must precede payment().
  void load(std::span<const std::size_t> profile) {
    coalition_index_[0] = 0;
    for (std::uint64_t mask = 1; mask < coalition_index_.size(); ++mask) {
      const auto low = static_cast<std::size_t>(std::countr_zero(mask));
      coalition_index_[mask] =
          coalition_index_[mask & (mask - 1)] + profile[low] * space_.stride(low);
    }
  }

  Rational payment(std::size_t t) const {
    const std::uint64_t bit = std::uint64_t{1} << t;
    Rational sum;
    for (std::uint64_t mask = 0; mask < coalition_index_.size(); ++mask) {
      if (mask & bit) continue;
      sum += gamma_[static_cast<std::size_t>(std::popcount(mask))] *
             (table_[coalition_index_[mask | bit]] - table_[coalition_index_[mask]]);
    }
    return sum;
  }

 private:
  const ProfileSpace& space_;
  const std::vector<Rational>& table_;
  std::vector<Rational> gamma_;
  std::vector<std::uint64_t> coalition_index_;
};

std::vector<Equilibrium> equilibria_from_table(const Game& game, const std::vector<Rational>& table,
                                               const Limits& limits) {
  const ProfileSpace& space = game.space();
  const std::size_t m = space.players();
  if (m > limits.max_subset_players || m >= 63) {
    throw LimitExceeded("equilibrium enumeration: " + std::to_string(m) +
                        " players exceeds the cap of " + std::to_string(limits.max_subset_players));
  }
  TablePayments pay(space, table);
  // stable[idx] counts the players with no profitable deviation at idx.
  std::vector<std::uint8_t> stable(space.size(), 0);
  for (std::size_t t = 0; t < m; ++t) {
    std::vector<std::size_t> context_radices = space.radices();
    context_radices[t] = 1;
    const ProfileSpace contexts(context_radices);
    std::vector<std::size_t> tuple(m, 0);
    std::vector<Rational> payments(space.radices()[t]);
    do {
      for (std::size_t s = 0; s < payments.size(); ++s) {
        tuple[t] = s;
        pay.load(tuple);
        payments[s] = pay.payment(t);
      }
      const Rational& best = *std::max_element(payments.begin(), payments.end());
      for (std::size_t s = 0; s < payments.size(); ++s) {
        if (payments[s] == best) {
          tuple[t] = s;
          ++stable[space.index_of(tuple)];
        }
      }
      tuple[t] = 0;
    } while (contexts.next(tuple));
  }

  std::vector<Equilibrium> out;
  for (std::uint64_t idx = 0; idx < space.size(); ++idx) {
    if (stable[idx] != m) continue;
    Equilibrium eq;
    eq.profile = space.tuple_at(idx);
    eq.value = table[idx];
    pay.load(eq.profile);
    for (std::size_t t = 0; t < m; ++t) eq.payments.payments.push_back(pay.payment(t));
    out.push_back(std::move(eq));
  }
  return out;
}

}  // namespace

std::vector<Equilibrium> enumerate_equilibria(const Game& game, const Limits& limits) {
  const auto table = value_table(game, limits);
  return equilibria_from_table(game, *table, limits);
}

std::string PriceRatio::str() const { return infinite ? "infinite" : value.str(); }

PriceRatio price_ratio(const Rational& opt, const Rational& equilibrium_value) {
  PriceRatio r;
  if (equilibrium_value.is_zero()) {
    if (opt.is_zero()) {
      r.value = Rational(1);
    } else {
      r.infinite = true;
    }
    return r;
  }
  r.value = opt / equilibrium_value;
  return r;
}

PriceReport poa_pos(const Game& game, const Limits& limits) {
  const auto table = value_table(game, limits);
  const auto equilibria = equilibria_from_table(game, *table, limits);
  if (equilibria.empty()) throw Error("game has no pure Nash equilibrium");
  PriceReport report;
  report.opt = *std::max_element(table->begin(), table->end());
  report.worst_equilibrium = equilibria.front().value;
  report.best_equilibrium = equilibria.front().value;
  for (const auto& eq : equilibria) {
    report.worst_equilibrium = std::min(report.worst_equilibrium, eq.value);
    report.best_equilibrium = std::max(report.best_equilibrium, eq.value);
  }
  report.anarchy = price_ratio(report.opt, report.worst_equilibrium);
  report.stability = price_ratio(report.opt, report.best_equilibrium);
  report.equilibrium_count = equilibria.size();
  return report;
}

bool anonymity_check(const Game& game, std::span<const std::size_t> bump, const Limits& limits) {
  const auto table = value_table(game, limits);
  const ProfileSpace& space = game.space();
  const std::uint64_t bump_index = space.index_of(bump);
  const Rational& base = (*table)[0];
  for (std::uint64_t idx = 0; idx < space.size(); ++idx) {
    if (idx != bump_index && (*table)[idx] != base) {
      throw PreconditionFailed("profile " + std::to_string(idx) +
                               " differs from the null value; not a single-bump game");
    }
  }
  const Rational surplus = (*table)[bump_index] - base;
  std::size_t active = 0;
  for (std::size_t s : bump) active += s != 0 ? 1 : 0;
  const auto payments = shapley_subsets(game, bump, limits);
  for (std::size_t t = 0; t < game.players(); ++t) {
    const Rational expected = bump[t] == 0 ? Rational(0) : surplus / Rational(static_cast<std::int64_t>(active));
    if (payments.payments[t] != expected) return false;
  }
  return true;
}

}  // namespace dsplab
