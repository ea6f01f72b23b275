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

#ifndef DSPLAB_PROFILE_HPP
#define DSPLAB_PROFILE_HPP

#include <cstddef>
#include <vector>

#include "dsplab/instance.hpp"
#include "dsplab/partition.hpp"

namespace dsplab {

// One reported coarsening per mediator.
struct StrategyProfile {
  std::vector<Partition> reports;

  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;
};

// Throws InvalidInput unless reports[t] coarsens mediator t's base partition
// for every t.
void validate_profile(const Instance& inst, const StrategyProfile& profile);

StrategyProfile silent_profile(const Instance& inst);
StrategyProfile full_report_profile(const Instance& inst);

// Meet of all reports; {I} when there are no mediators.
Partition joint_partition(const Instance& inst, const StrategyProfile& profile);

// Mediators whose report differs from {I}.
std::vector<std::size_t> speaking_mediators(const StrategyProfile& profile);

}  // namespace dsplab

#endif  // DSPLAB_PROFILE_HPP
