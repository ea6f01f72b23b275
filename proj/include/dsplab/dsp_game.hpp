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

#ifndef DSPLAB_DSP_GAME_HPP
#define DSPLAB_DSP_GAME_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "dsplab/game.hpp"
#include "dsplab/instance.hpp"
#include "dsplab/limits.hpp"
#include "dsplab/partition.hpp"
#include "dsplab/profile.hpp"

namespace dsplab {

// The mediator game induced by an instance: player t's strategies are the
// coarsenings of its base partition ({I} at index 0, the base partition
// last) and the value of a profile is the revenue of the joint partition.
struct DspGame {
  Game game;
  std::vector<std::vector<Partition>> strategies;

  StrategyProfile profile(std::span<const std::size_t> tuple) const;
  // Throws InvalidInput when a report is not among the mediator's strategies.
  StrategyTuple tuple_of(const StrategyProfile& profile) const;
  StrategyTuple all_report() const;
  StrategyTuple silent() const { return game.null_profile(); }
};

// Throws LimitExceeded when a base partition has more than limits.max_parts
// parts.
DspGame make_dsp_game(const Instance& inst, const Limits& limits = {});

}  // namespace dsplab

#endif  // DSPLAB_DSP_GAME_HPP
