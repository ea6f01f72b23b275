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

#include "dsplab/profile_space.hpp"

#include <limits>
#include <string>
#include <thread>

#include "dsplab/error.hpp"
#include "dsplab/limits.hpp"

namespace dsplab {

unsigned effective_threads(const Limits& limits) {
  if (limits.threads > 0) return limits.threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

ProfileSpace::ProfileSpace(std::vector<std::size_t> radices)
    : radices_(std::move(radices)), strides_(radices_.size(), 1) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t t = radices_.size(); t-- > 0;) {
    if (radices_[t] == 0) throw InvalidInput("player " + std::to_string(t) + " has no strategies");
    strides_[t] = saturated_ ? kMax : size_;
    if (!saturated_ && size_ > kMax / radices_[t]) {
      saturated_ = true;
      size_ = kMax;
    } else if (!saturated_) {
      size_ *= radices_[t];
    }
  }
}

std::uint64_t ProfileSpace::index_of(std::span<const std::size_t> tuple) const {
  if (tuple.size() != radices_.size()) throw InvalidInput("strategy tuple has wrong length");
  std::uint64_t idx = 0;
  for (std::size_t t = 0; t < tuple.size(); ++t) {
    if (tuple[t] >= radices_[t]) {
      throw InvalidInput("strategy " + std::to_string(tuple[t]) + " out of range for player " +
                         std::to_string(t));
    }
    idx += tuple[t] * strides_[t];
  }
  return idx;
}

std::vector<std::size_t> ProfileSpace::tuple_at(std::uint64_t index) const {
  std::vector<std::size_t> tuple(radices_.size());
  for (std::size_t t = radices_.size(); t-- > 0;) {
    tuple[t] = static_cast<std::size_t>(index % radices_[t]);
    index /= radices_[t];
  }
  return tuple;
}

bool ProfileSpace::next(std::vector<std::size_t>& tuple) const {
  for (std::size_t t = tuple.size(); t-- > 0;) {
    if (++tuple[t] < radices_[t]) return true;
    tuple[t] = 0;
  }
  return false;
}

void ProfileSpace::require_at_most(std::uint64_t cap) const {
  if (!saturated_ && size_ <= cap) return;
  std::string product;
  for (std::size_t t = 0; t < radices_.size(); ++t) {
    if (t) product += " x ";
    product += std::to_string(radices_[t]);
  }
  throw LimitExceeded("profile space " + product + " = " +
                      (saturated_ ? std::string("overflow") : std::to_string(size_)) +
                      " exceeds the cap of " + std::to_string(cap));
}

}  // namespace dsplab
