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

#include "dsplab/profile.hpp"

#include <string>

#include "dsplab/error.hpp"

namespace dsplab {

void validate_profile(const Instance& inst, const StrategyProfile& profile) {
  if (profile.reports.size() != inst.mediator_count()) {
    throw InvalidInput("profile has " + std::to_string(profile.reports.size()) +
                       " reports for " + std::to_string(inst.mediator_count()) + " mediators");
  }
  for (std::size_t t = 0; t < inst.mediator_count(); ++t) {
    const auto& report = profile.reports[t];
    if (report.ground_size() != inst.items()) {
      throw InvalidInput("report " + std::to_string(t) + ": ground-set mismatch");
    }
    if (!is_refinement(base_partition(inst, t), report)) {
      throw InvalidInput("report " + std::to_string(t) +
                         " is not a coarsening of the mediator's base partition");
    }
  }
}

StrategyProfile silent_profile(const Instance& inst) {
  return StrategyProfile{std::vector<Partition>(inst.mediator_count(),
                                                Partition::whole(inst.items()))};
}

StrategyProfile full_report_profile(const Instance& inst) {
  return StrategyProfile{base_partitions(inst)};
}

Partition joint_partition(const Instance& inst, const StrategyProfile& profile) {
  if (profile.reports.empty()) return Partition::whole(inst.items());
  return meet(profile.reports);
}

std::vector<std::size_t> speaking_mediators(const StrategyProfile& profile) {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < profile.reports.size(); ++t) {
    if (!profile.reports[t].is_whole()) out.push_back(t);
  }
  return out;
}

}  // namespace dsplab
