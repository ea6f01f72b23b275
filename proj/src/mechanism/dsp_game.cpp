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

#include "dsplab/dsp_game.hpp"

#include <algorithm>
#include <mutex>
#include <string>
#include <unordered_map>

#include "dsplab/error.hpp"

namespace dsplab {

namespace {

struct SharedState {
  Instance instance;
  ProfileSpace space;
  std::vector<std::vector<std::vector<std::size_t>>> labels;
};

// Revenue of a profile with a per-bundle memo and an optional per-profile
// memo. One instance per worker; the shared front end is guarded by a mutex.
class DspValue {
 public:
  DspValue(std::shared_ptr<const SharedState> state, bool memoize_profiles)
      : state_(std::move(state)), evaluator_(state_->instance), memoize_(memoize_profiles) {}

  Rational operator()(std::span<const std::size_t> tuple) {
    const std::uint64_t idx = state_->space.index_of(tuple);
    if (memoize_) {
      if (auto it = memo_.find(idx); it != memo_.end()) return it->second;
    }
    chosen_.resize(tuple.size());
    for (std::size_t t = 0; t < tuple.size(); ++t) chosen_[t] = &state_->labels[t][tuple[t]];
    Rational r = evaluator_.revenue_of_labels(chosen_);
    if (memoize_) memo_.emplace(idx, r);
    return r;
  }

 private:
  std::shared_ptr<const SharedState> state_;
  RevenueEvaluator evaluator_;
  bool memoize_;
  std::unordered_map<std::uint64_t, Rational> memo_;
  std::vector<const std::vector<std::size_t>*> chosen_;
};

}  // namespace

DspGame make_dsp_game(const Instance& inst, const Limits& limits) {
  validate_instance(inst);
  std::vector<std::vector<Partition>> strategies;
  std::vector<std::size_t> counts;
  auto state = std::make_shared<SharedState>(SharedState{inst, ProfileSpace({}), {}});
  for (std::size_t t = 0; t < inst.mediator_count(); ++t) {
    const Partition base = base_partition(inst, t);
    if (base.size() > limits.max_parts) {
      throw LimitExceeded("mediator " + std::to_string(t) + ": strategy space too large (" +
                          std::to_string(base.size()) + " parts exceeds the cap of " +
                          std::to_string(limits.max_parts) + ")");
    }
    strategies.push_back(coarsenings(base, limits.max_parts));
    counts.push_back(strategies.back().size());
    auto& l = state->labels.emplace_back();
    for (const auto& s : strategies.back()) l.push_back(s.labels());
  }
  state->space = ProfileSpace(counts);
  std::shared_ptr<const SharedState> shared = state;

  auto front = std::make_shared<DspValue>(shared, true);
  auto lock = std::make_shared<std::mutex>();
  ValueFunction value = [front, lock](std::span<const std::size_t> tuple) {
    std::lock_guard<std::mutex> guard(*lock);
    return (*front)(tuple);
  };
  ValueFunctionFactory factory = [shared]() -> ValueFunction {
    auto worker = std::make_shared<DspValue>(shared, false);
    return [worker](std::span<const std::size_t> tuple) { return (*worker)(tuple); };
  };
  return DspGame{Game(counts, std::move(value), std::move(factory)), std::move(strategies)};
}

StrategyProfile DspGame::profile(std::span<const std::size_t> tuple) const {
  game.space().index_of(tuple);
  StrategyProfile p;
  for (std::size_t t = 0; t < tuple.size(); ++t) p.reports.push_back(strategies[t][tuple[t]]);
  return p;
}

StrategyTuple DspGame::tuple_of(const StrategyProfile& profile) const {
  if (profile.reports.size() != strategies.size()) {
    throw InvalidInput("profile has " + std::to_string(profile.reports.size()) +
                       " reports for " + std::to_string(strategies.size()) + " mediators");
  }
  StrategyTuple tuple;
  for (std::size_t t = 0; t < strategies.size(); ++t) {
    const auto it = std::find(strategies[t].begin(), strategies[t].end(), profile.reports[t]);
    if (it == strategies[t].end()) {
      throw InvalidInput("report " + std::to_string(t) +
                         " is not a coarsening of the mediator's base partition");
    }
    tuple.push_back(static_cast<std::size_t>(it - strategies[t].begin()));
  }
  return tuple;
}

StrategyTuple DspGame::all_report() const {
  StrategyTuple tuple;
  for (const auto& s : strategies) tuple.push_back(s.size() - 1);
  return tuple;
}

}  // namespace dsplab
