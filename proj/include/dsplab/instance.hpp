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

#ifndef DSPLAB_INSTANCE_HPP
#define DSPLAB_INSTANCE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dsplab/partition.hpp"
#include "dsplab/rational.hpp"

namespace dsplab {

using Bidder = std::size_t;

struct Mediator {
  std::string name;
  // Base partition as given; checked by validate_instance.
  std::vector<ItemSet> parts;

  friend bool operator==(const Mediator&, const Mediator&) = default;
};

// A distributed signaling instance: n items with an unnormalized prior, k
// bidders with a k x n valuation matrix, and m mediators holding base
// partitions of the items.
struct Instance {
  std::vector<std::string> item_names;
  // mu(j) = weights[j] / sum(weights).
  std::vector<Rational> weights;
  std::vector<std::string> bidder_names;
  // valuations[i][j] is bidder i's value for item j.
  std::vector<std::vector<Rational>> valuations;
  std::vector<Mediator> mediators;

  std::size_t items() const { return weights.size(); }
  std::size_t bidders() const { return valuations.size(); }
  std::size_t mediator_count() const { return mediators.size(); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

// First violated invariant, or nullopt when the instance is well formed.
std::optional<std::string> validation_error(const Instance& inst);
// Throws InvalidInput with validation_error's message.
void validate_instance(const Instance& inst);

// Mediator t's base partition in checked canonical form.
Partition base_partition(const Instance& inst, std::size_t t);
std::vector<Partition> base_partitions(const Instance& inst);

Rational total_weight(const Instance& inst);
// mu(S).
Rational mass(const Instance& inst, std::span<const Item> bundle);

// v_{i,S}: bidder i's expected value for the item conditioned on it lying in
// S. Throws InvalidInput("zero-mass bundle") when mu(S) = 0.
Rational bundle_bid(const Instance& inst, Bidder bidder, std::span<const Item> bundle);

// v(S): the second-highest bid on S counted with multiplicity; 0 when there
// is a single bidder or mu(S) = 0.
Rational bundle_value(const Instance& inst, std::span<const Item> bundle);

// mu(S) * v(S), computed as the second-highest of sum_{j in S} mu(j) v_ij.
Rational bundle_contribution(const Instance& inst, std::span<const Item> bundle);

// R(P) = sum over parts of mu(S) * v(S).
Rational revenue(const Instance& inst, const Partition& joint);

// Revenue of joint partitions with a per-bundle memo. Not thread-safe; give
// each worker its own evaluator.
class RevenueEvaluator {
 public:
  explicit RevenueEvaluator(const Instance& inst);

  Rational contribution(std::span<const Item> bundle);
  Rational revenue(const Partition& joint);
  // Revenue of the meet of partitions described by per-item labels; avoids
  // materializing the joint partition.
  Rational revenue_of_labels(std::span<const std::vector<std::size_t>* const> labelings);

  std::size_t items() const { return weights_.size(); }

 private:
  std::vector<mpq_class> weights_;
  // weighted_[i][j] = w_j * v_ij (unnormalized).
  std::vector<std::vector<mpq_class>> weighted_;
  mpq_class inverse_total_;
  std::unordered_map<std::string, Rational> memo_;
  std::vector<std::size_t> scratch_, remap_;
};

}  // namespace dsplab

#endif  // DSPLAB_INSTANCE_HPP
