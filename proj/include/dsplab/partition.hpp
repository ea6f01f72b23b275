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

#ifndef DSPLAB_PARTITION_HPP
#define DSPLAB_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dsplab {

using Item = std::size_t;
// Sorted, duplicate-free list of item indices.
using ItemSet = std::vector<Item>;

// A partition of the ground set {0..n-1} in canonical form: items inside a
// part ascending, parts ordered by their smallest member. Two partitions are
// equal iff they are structurally equal.
class Partition {
 public:
  // Validates and canonicalizes. Throws InvalidInput on overlap, gap, empty
  // part, or out-of-range item.
  Partition(std::vector<ItemSet> parts, std::size_t ground_size);

  // First violated partition invariant, if any.
  static std::optional<std::string> check(const std::vector<ItemSet>& parts,
                                          std::size_t ground_size);

  // {I}: the silent report.
  static Partition whole(std::size_t ground_size);
  static Partition singletons(std::size_t ground_size);
  // Groups items by label; labels may be arbitrary integers.
  static Partition from_labels(std::span<const std::size_t> labels);

  std::size_t ground_size() const { return ground_size_; }
  std::size_t size() const { return parts_.size(); }
  const std::vector<ItemSet>& parts() const { return parts_; }
  const ItemSet& part(std::size_t i) const { return parts_[i]; }
  bool is_whole() const { return parts_.size() == 1; }

  // labels()[j] is the index of the part containing item j.
  std::vector<std::size_t> labels() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  Partition() = default;
  std::vector<ItemSet> parts_;
  std::size_t ground_size_ = 0;
};

// True iff every part of `fine` lies inside some part of `coarse`. Throws
// InvalidInput when the ground sets differ.
bool is_refinement(const Partition& fine, const Partition& coarse);

// Common refinement: all nonempty intersections, one part from each input.
Partition meet(std::span<const Partition> partitions);
Partition meet(const Partition& a, const Partition& b);

// Number of set partitions of a q-element set.
std::size_t bell_number(std::size_t q);

// Every partition obtained by merging parts of `base`, in lexicographic order
// of restricted-growth strings over base's parts; {I} comes first and `base`
// itself last. Throws LimitExceeded when base has more than `max_parts` parts.
std::vector<Partition> coarsenings(const Partition& base, std::size_t max_parts = 10);

// "{{0,1},{2,3}}".
std::string to_string(const Partition& p);
// Inverse of to_string; whitespace is ignored.
Partition parse_partition(std::string_view text, std::size_t ground_size);

}  // namespace dsplab

#endif  // DSPLAB_PARTITION_HPP
