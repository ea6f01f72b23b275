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

#include "dsplab/instance.hpp"

#include <algorithm>

#include "dsplab/error.hpp"

namespace dsplab {

namespace {

// Second-highest entry with multiplicity; 0 for fewer than two entries.
mpq_class second_highest(const std::vector<mpq_class>& values) {
  if (values.size() < 2) return 0;
  const mpq_class* first = &values[0];
  const mpq_class* second = &values[1];
  if (*second > *first) std::swap(first, second);
  for (std::size_t i = 2; i < values.size(); ++i) {
    if (values[i] > *first) {
      second = first;
      first = &values[i];
    } else if (values[i] > *second) {
      second = &values[i];
    }
  }
  return *second;
}

}  // namespace

std::optional<std::string> validation_error(const Instance& inst) {
  const std::size_t n = inst.items();
  const std::size_t k = inst.bidders();
  if (!inst.item_names.empty() && inst.item_names.size() != n) {
    return "dimension mismatch: " + std::to_string(inst.item_names.size()) +
           " item names for " + std::to_string(n) + " items";
  }
  if (!inst.bidder_names.empty() && inst.bidder_names.size() != k) {
    return "dimension mismatch: " + std::to_string(inst.bidder_names.size()) +
           " bidder names for " + std::to_string(k) + " bidders";
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (inst.valuations[i].size() != n) {
      return "dimension mismatch: valuation row " + std::to_string(i) + " has " +
             std::to_string(inst.valuations[i].size()) + " entries, expected " +
             std::to_string(n);
    }
  }
  Rational total;
  for (std::size_t j = 0; j < n; ++j) {
    if (inst.weights[j].sign() < 0) return "negative weight at item " + std::to_string(j);
    total += inst.weights[j];
  }
  if (total.sign() <= 0) return "zero total weight";
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (inst.valuations[i][j].sign() < 0) {
        return "negative valuation for bidder " + std::to_string(i) + " on item " +
               std::to_string(j);
      }
    }
  }
  for (std::size_t t = 0; t < inst.mediator_count(); ++t) {
    if (auto err = Partition::check(inst.mediators[t].parts, n)) {
      return "mediator " + std::to_string(t) + ": " + *err;
    }
  }
  return std::nullopt;
}

void validate_instance(const Instance& inst) {
  if (auto err = validation_error(inst)) throw InvalidInput(*err);
}

Partition base_partition(const Instance& inst, std::size_t t) {
  if (t >= inst.mediator_count()) throw InvalidInput("mediator index out of range");
  return Partition(inst.mediators[t].parts, inst.items());
}

std::vector<Partition> base_partitions(const Instance& inst) {
  std::vector<Partition> out;
  out.reserve(inst.mediator_count());
  for (std::size_t t = 0; t < inst.mediator_count(); ++t) out.push_back(base_partition(inst, t));
  return out;
}

Rational total_weight(const Instance& inst) {
  Rational total;
  for (const auto& w : inst.weights) total += w;
  return total;
}

Rational mass(const Instance& inst, std::span<const Item> bundle) {
  Rational s;
  for (Item j : bundle) s += inst.weights.at(j);
  return s / total_weight(inst);
}

Rational bundle_bid(const Instance& inst, Bidder bidder, std::span<const Item> bundle) {
  if (bidder >= inst.bidders()) throw InvalidInput("bidder index out of range");
  Rational weight, value;
  for (Item j : bundle) {
    weight += inst.weights.at(j);
    value += inst.weights[j] * inst.valuations[bidder][j];
  }
  if (weight.is_zero()) throw InvalidInput("zero-mass bundle");
  return value / weight;
}

Rational bundle_value(const Instance& inst, std::span<const Item> bundle) {
  Rational weight;
  for (Item j : bundle) weight += inst.weights.at(j);
  if (weight.is_zero() || inst.bidders() < 2) return Rational(0);
  std::vector<mpq_class> bids;
  bids.reserve(inst.bidders());
  for (Bidder i = 0; i < inst.bidders(); ++i) bids.push_back(bundle_bid(inst, i, bundle).raw());
  return Rational(second_highest(bids));
}

Rational bundle_contribution(const Instance& inst, std::span<const Item> bundle) {
  if (inst.bidders() < 2) return Rational(0);
  std::vector<mpq_class> sums(inst.bidders());
  for (Bidder i = 0; i < inst.bidders(); ++i) {
    for (Item j : bundle) sums[i] += inst.weights.at(j).raw() * inst.valuations[i][j].raw();
  }
  return Rational(second_highest(sums)) / total_weight(inst);
}

Rational revenue(const Instance& inst, const Partition& joint) {
  if (joint.ground_size() != inst.items()) throw InvalidInput("ground-set mismatch");
  Rational r;
  for (const auto& part : joint.parts()) r += bundle_contribution(inst, part);
  return r;
}

RevenueEvaluator::RevenueEvaluator(const Instance& inst) {
  mpq_class total;
  for (const auto& w : inst.weights) {
    weights_.push_back(w.raw());
    total += w.raw();
  }
  if (total == 0) throw InvalidInput("zero total weight");
  inverse_total_ = 1 / total;
  for (const auto& row : inst.valuations) {
    std::vector<mpq_class> r(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) r[j] = row[j].raw() * weights_[j];
    weighted_.push_back(std::move(r));
  }
}

Rational RevenueEvaluator::contribution(std::span<const Item> bundle) {
  std::string key((weights_.size() + 7) / 8, '\0');
  for (Item j : bundle) key[j / 8] = static_cast<char>(key[j / 8] | (1 << (j % 8)));
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  Rational value;
  if (weighted_.size() >= 2) {
    std::vector<mpq_class> sums(weighted_.size());
    for (std::size_t i = 0; i < weighted_.size(); ++i) {
      for (Item j : bundle) sums[i] += weighted_[i][j];
    }
    value = Rational(mpq_class(second_highest(sums) * inverse_total_));
  }
  memo_.emplace(std::move(key), value);
  return value;
}

Rational RevenueEvaluator::revenue(const Partition& joint) {
  Rational r;
  for (const auto& part : joint.parts()) r += contribution(part);
  return r;
}

Rational RevenueEvaluator::revenue_of_labels(
    std::span<const std::vector<std::size_t>* const> labelings) {
  const std::size_t n = weights_.size();
  scratch_.assign(n, 0);
  std::size_t classes = 1;
  for (const auto* labels : labelings) {
    std::size_t width = 0;
    for (std::size_t l : *labels) width = std::max(width, l + 1);
    remap_.assign(classes * width, 0);
    std::size_t next = 0;
    for (std::size_t j = 0; j < n; ++j) {
      auto& slot = remap_[scratch_[j] * width + (*labels)[j]];
      if (slot == 0) slot = ++next;
      scratch_[j] = slot - 1;
    }
    classes = next;
  }
  std::vector<ItemSet> parts(classes);
  for (std::size_t j = 0; j < n; ++j) parts[scratch_[j]].push_back(j);
  Rational r;
  for (const auto& part : parts) r += contribution(part);
  return r;
}

}  // namespace dsplab
