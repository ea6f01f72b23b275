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

#ifndef DSPLAB_TESTS_RANDOM_GAMES_HPP
#define DSPLAB_TESTS_RANDOM_GAMES_HPP

#include <memory>
#include <random>
#include <vector>

#include "dsplab/game.hpp"
#include "oracles.hpp"

namespace testing_games {

// A game with a seeded random rational value on every profile, together
// with the same game in oracle form.
struct RandomGame {
  dsplab::Game game;
  oracle::TableGame table;
};

inline dsplab::Rational random_rational(std::mt19937_64& rng) {
  const auto num = static_cast<std::int64_t>(rng() % 41) - 20;
  const auto den = static_cast<std::int64_t>(rng() % 12) + 1;
  return dsplab::Rational(num, den);
}

inline RandomGame random_game(std::uint64_t seed, std::size_t max_players = 6,
                              std::size_t max_strategies = 3) {
  std::mt19937_64 rng(seed);
  const std::size_t m = 1 + rng() % max_players;
  std::vector<std::size_t> counts(m);
  for (auto& c : counts) c = 1 + rng() % max_strategies;
  dsplab::ProfileSpace space(counts);
  auto values = std::make_shared<std::vector<dsplab::Rational>>();
  for (std::uint64_t i = 0; i < space.size(); ++i) values->push_back(random_rational(rng));
  auto lookup = [space, values](std::span<const std::size_t> a) {
    return (*values)[space.index_of(a)];
  };
  oracle::TableGame table{counts, [space, values](const std::vector<std::size_t>& a) {
                            return (*values)[space.index_of(a)];
                          }};
  return {dsplab::Game(counts, lookup), table};
}

// Value v0 everywhere except v0 + surplus at `bump`.
inline RandomGame bump_game(std::vector<std::size_t> counts, std::vector<std::size_t> bump,
                            dsplab::Rational v0, dsplab::Rational surplus) {
  auto f = [bump, v0, surplus](std::span<const std::size_t> a) {
    return std::equal(a.begin(), a.end(), bump.begin(), bump.end()) ? v0 + surplus : v0;
  };
  oracle::TableGame table{counts, [f](const std::vector<std::size_t>& a) { return f(a); }};
  return {dsplab::Game(counts, f), table};
}

}  // namespace testing_games

#endif  // DSPLAB_TESTS_RANDOM_GAMES_HPP
