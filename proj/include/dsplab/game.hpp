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

#ifndef DSPLAB_GAME_HPP
#define DSPLAB_GAME_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "dsplab/limits.hpp"
#include "dsplab/profile_space.hpp"
#include "dsplab/rational.hpp"

namespace dsplab {

// Strategy indices, one per player. Index 0 is always the null strategy.
using StrategyTuple = std::vector<std::size_t>;
using ValueFunction = std::function<Rational(std::span<const std::size_t>)>;
// Produces an independent value function for one worker thread.
using ValueFunctionFactory = std::function<ValueFunction()>;

// A finite game with designated null strategies and a total value function.
// Value functions must be pure; copies of a Game share the function.
class Game {
 public:
  Game(std::vector<std::size_t> strategy_counts, ValueFunction value,
       ValueFunctionFactory worker_factory = {});

  std::size_t players() const { return space_.players(); }
  std::size_t strategy_count(std::size_t t) const { return space_.radices()[t]; }
  const ProfileSpace& space() const { return space_; }

  Rational value(std::span<const std::size_t> profile) const { return value_(profile); }
  StrategyTuple null_profile() const { return StrategyTuple(players(), 0); }

  // Value function safe to call concurrently with other workers' functions.
  ValueFunction worker_value() const;

 private:
  ProfileSpace space_;
  ValueFunction value_;
  ValueFunctionFactory worker_factory_;
};

// Values of every profile in ProfileSpace index order, computed in parallel
// when limits.threads allows. Throws LimitExceeded above limits.max_profiles.
std::shared_ptr<const std::vector<Rational>> value_table(const Game& game,
                                                         const Limits& limits = {});

// The same game with every profile's value precomputed (in parallel when
// limits.threads allows). Throws LimitExceeded above limits.max_profiles.
Game tabulate(const Game& game, const Limits& limits = {});

// a_J: players in `mask` keep their strategy, the rest play null.
StrategyTuple restrict_to(std::span<const std::size_t> profile, std::uint64_t mask);

}  // namespace dsplab

#endif  // DSPLAB_GAME_HPP
