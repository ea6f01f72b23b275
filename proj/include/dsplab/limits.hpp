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

#ifndef DSPLAB_LIMITS_HPP
#define DSPLAB_LIMITS_HPP

#include <cstddef>
#include <cstdint>

namespace dsplab {

// Enumeration caps shared by the solvers and the mechanism layer.
struct Limits {
  // Largest strategy-profile product that may be enumerated.
  std::uint64_t max_profiles = 10'000'000;
  // Largest base-partition part count whose coarsenings may be enumerated
  // (Bell(10) = 115975).
  std::size_t max_parts = 10;
  // Largest player count for the m!-term Shapley sum.
  std::size_t max_permutation_players = 9;
  // Largest player count for 2^m subset sums (Shapley and potential).
  std::size_t max_subset_players = 20;
  // Improving steps before best-response dynamics gives up.
  std::uint64_t max_steps = 1'000'000;
  // Worker threads for profile enumeration; 0 means hardware concurrency.
  unsigned threads = 0;
};

// Resolves `threads == 0` to the machine's concurrency (at least 1).
unsigned effective_threads(const Limits& limits);

}  // namespace dsplab

#endif  // DSPLAB_LIMITS_HPP
