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

#ifndef DSPLAB_PROFILE_SPACE_HPP
#define DSPLAB_PROFILE_SPACE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dsplab {

// Mixed-radix indexing of strategy tuples; player 0 is the most significant
// digit, so index order is lexicographic order of tuples.
class ProfileSpace {
 public:
  explicit ProfileSpace(std::vector<std::size_t> radices);

  std::size_t players() const { return radices_.size(); }
  const std::vector<std::size_t>& radices() const { return radices_; }
  // Number of tuples, saturated at UINT64_MAX.
  std::uint64_t size() const { return size_; }
  // Index weight of player t's digit.
  std::uint64_t stride(std::size_t t) const { return strides_[t]; }

  std::uint64_t index_of(std::span<const std::size_t> tuple) const;
  std::vector<std::size_t> tuple_at(std::uint64_t index) const;
  // Advances `tuple` to its lexicographic successor; false after the last.
  bool next(std::vector<std::size_t>& tuple) const;

  // Throws LimitExceeded naming the product when size() > cap.
  void require_at_most(std::uint64_t cap) const;

 private:
  std::vector<std::size_t> radices_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t size_ = 1;
  bool saturated_ = false;
};

}  // namespace dsplab

#endif  // DSPLAB_PROFILE_SPACE_HPP
