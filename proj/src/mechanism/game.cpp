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

#include "dsplab/game.hpp"

#include <algorithm>
#include <thread>

#include "dsplab/error.hpp"

namespace dsplab {

Game::Game(std::vector<std::size_t> strategy_counts, ValueFunction value,
           ValueFunctionFactory worker_factory)
    : space_(std::move(strategy_counts)),
      value_(std::move(value)),
      worker_factory_(std::move(worker_factory)) {
  if (!value_) throw InvalidInput("game needs a value function");
}

ValueFunction Game::worker_value() const {
  return worker_factory_ ? worker_factory_() : value_;
}

std::shared_ptr<const std::vector<Rational>> value_table(const Game& game,
                                                         const Limits& limits) {
  const ProfileSpace& space = game.space();
  space.require_at_most(limits.max_profiles);
  const std::uint64_t total = space.size();
  auto table = std::make_shared<std::vector<Rational>>(total);

  const auto fill = [&](std::uint64_t begin, std::uint64_t end, const ValueFunction& value) {
    if (begin >= end) return;
    auto tuple = space.tuple_at(begin);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      (*table)[idx] = value(tuple);
      space.next(tuple);
    }
  };
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(effective_threads(limits), total));
  if (workers <= 1) {
    fill(0, total, game.worker_value());
  } else {
    std::vector<ValueFunction> values;
    for (unsigned w = 0; w < workers; ++w) values.push_back(game.worker_value());
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] { fill(total * w / workers, total * (w + 1) / workers, values[w]); });
    }
    for (auto& th : pool) th.join();
  }

  return table;
}

Game tabulate(const Game& game, const Limits& limits) {
  auto table = value_table(game, limits);
  ProfileSpace lookup = game.space();
  return Game(lookup.radices(), [table, lookup](std::span<const std::size_t> profile) {
    return (*table)[lookup.index_of(profile)];
  });
}

StrategyTuple restrict_to(std::span<const std::size_t> profile, std::uint64_t mask) {
  StrategyTuple out(profile.size(), 0);
  for (std::size_t t = 0; t < profile.size(); ++t) {
    if (mask >> t & 1U) out[t] = profile[t];
  }
  return out;
}

}  // namespace dsplab
