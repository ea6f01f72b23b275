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

#include <algorithm>
#include <random>

#include "dsplab/error.hpp"
#include "dsplab/generators.hpp"

namespace dsplab {

namespace {

std::vector<std::string> numbered(const std::string& prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::vector<ItemSet> expert_parts(std::size_t n, const ItemSet& support) {
  std::vector<ItemSet> parts;
  std::vector<char> in(n, 0);
  for (Item j : support) {
    parts.push_back({j});
    in[j] = 1;
  }
  ItemSet rest;
  for (Item j = 0; j < n; ++j) {
    if (!in[j]) rest.push_back(j);
  }
  if (!rest.empty()) parts.push_back(std::move(rest));
  return Partition(std::move(parts), n).parts();
}

ItemSet all_items(std::size_t n) {
  ItemSet s(n);
  for (Item j = 0; j < n; ++j) s[j] = j;
  return s;
}

}  // namespace

Instance local_expert_instance(std::vector<Rational> weights,
                               std::vector<std::vector<Rational>> valuations,
                               const std::vector<ItemSet>& expert_sets) {
  Instance inst;
  const std::size_t n = weights.size();
  inst.item_names = numbered("j", n);
  inst.weights = std::move(weights);
  inst.bidder_names = numbered("b", valuations.size());
  inst.valuations = std::move(valuations);
  for (std::size_t t = 0; t < expert_sets.size(); ++t) {
    inst.mediators.push_back({"m" + std::to_string(t), expert_parts(n, expert_sets[t])});
  }
  validate_instance(inst);
  return inst;
}

Instance gen_identity(std::size_t size, const Rational& value) {
  if (size < 1) throw InvalidInput("identity instance needs at least one item");
  Instance inst;
  inst.item_names = numbered("j", size);
  inst.weights.assign(size, Rational(1));
  inst.bidder_names = numbered("b", size);
  inst.valuations.assign(size, std::vector<Rational>(size, Rational(0)));
  for (std::size_t i = 0; i < size; ++i) inst.valuations[i][i] = value;
  if (size == 4) {
    inst.mediators.push_back({"m0", {{0, 1}, {2, 3}}});
    inst.mediators.push_back({"m1", {{0, 2}, {1, 3}}});
  } else {
    inst.mediators.push_back({"m0", expert_parts(size, all_items(size))});
  }
  validate_instance(inst);
  return inst;
}

Rational default_dspn_eps(std::size_t n) {
  if (n == 1) return Rational(1, 2);
  return Rational(1, static_cast<std::int64_t>(n * n));
}

Instance gen_dspn(std::size_t n, const Rational& eps) {
  if (n < 1) throw InvalidInput("DSP_n needs n >= 1");
  if (eps.sign() <= 0 || eps >= Rational(1)) throw InvalidInput("eps must lie in (0, 1)");
  const std::size_t items = 3 * n + 1;
  const auto a = [](std::size_t l) { return l; };
  const auto b = [n](std::size_t l) { return n + l; };
  const auto c = [n](std::size_t l) { return 2 * n + l; };
  const std::size_t d = 3 * n;

  Instance inst;
  for (std::size_t l = 0; l < n; ++l) inst.item_names.push_back("a" + std::to_string(l + 1));
  for (std::size_t l = 0; l < n; ++l) inst.item_names.push_back("b" + std::to_string(l + 1));
  for (std::size_t l = 0; l < n; ++l) inst.item_names.push_back("c" + std::to_string(l + 1));
  inst.item_names.push_back("d");
  inst.weights.assign(items, Rational(1));

  inst.bidder_names = {"iG", "iO"};
  std::vector<Rational> greedy(items, Rational(1));
  for (std::size_t l = 0; l < n; ++l) greedy[b(l)] = eps;
  std::vector<Rational> outsider(items, Rational(0));
  outsider[d] = Rational(1);
  inst.valuations = {greedy, outsider};
  for (std::size_t l = 0; l < n; ++l) {
    inst.bidder_names.push_back("i" + std::to_string(l + 1));
    std::vector<Rational> row(items, Rational(0));
    row[b(l)] = Rational(1);
    inst.valuations.push_back(std::move(row));
  }

  ItemSet first, second;
  for (std::size_t l = 0; l < n; ++l) {
    first.push_back(a(l));
    first.push_back(b(l));
    second.push_back(b(l));
    second.push_back(c(l));
  }
  std::sort(first.begin(), first.end());
  std::sort(second.begin(), second.end());
  inst.mediators.push_back({"t1", expert_parts(items, first)});
  inst.mediators.push_back({"t2", expert_parts(items, second)});
  validate_instance(inst);
  return inst;
}

Instance gen_dspn(std::size_t n) { return gen_dspn(n, default_dspn_eps(n)); }

Instance gen_random(std::size_t n, std::size_t k, std::size_t m, std::uint64_t seed,
                    const RandomOptions& options) {
  if (n < 1 || k < 1) throw InvalidInput("random instance needs n >= 1 and k >= 1");
  std::mt19937_64 rng(seed);
  // Raw engine output reduced modulo the range keeps streams identical across
  // standard library implementations.
  const auto uniform = [&rng](std::uint64_t lo, std::uint64_t hi) {
    return lo + rng() % (hi - lo + 1);
  };
  Instance inst;
  inst.item_names = numbered("j", n);
  inst.bidder_names = numbered("b", k);
  for (std::size_t j = 0; j < n; ++j) {
    inst.weights.emplace_back(static_cast<std::int64_t>(uniform(1, std::max<std::uint32_t>(1, options.weight_max))));
  }
  for (std::size_t i = 0; i < k; ++i) {
    auto& row = inst.valuations.emplace_back();
    for (std::size_t j = 0; j < n; ++j) {
      row.emplace_back(static_cast<std::int64_t>(uniform(0, options.value_max)));
    }
  }
  for (std::size_t t = 0; t < m; ++t) {
    Mediator med;
    med.name = "m" + std::to_string(t);
    if (options.local_experts) {
      ItemSet support;
      for (Item j = 0; j < n; ++j) {
        if (uniform(0, 1) == 1) support.push_back(j);
      }
      med.parts = expert_parts(n, support);
    } else {
      const std::size_t parts = std::max<std::size_t>(1, options.max_parts);
      std::vector<std::size_t> labels(n);
      for (auto& l : labels) l = static_cast<std::size_t>(uniform(0, parts - 1));
      med.parts = Partition::from_labels(labels).parts();
    }
    inst.mediators.push_back(std::move(med));
  }
  validate_instance(inst);
  return inst;
}

namespace {

std::vector<Rational> row(std::initializer_list<std::int64_t> values) {
  std::vector<Rational> out;
  for (auto v : values) out.emplace_back(v);
  return out;
}

}  // namespace

Instance ident4() { return gen_identity(4, Rational(1)); }

Instance loc2() {
  return local_expert_instance({1, 1}, {row({10, 0}), row({0, 8})}, {{0, 1}});
}

Instance loc3() {
  return local_expert_instance({1, 1, 1}, {row({9, 0, 0}), row({0, 6, 0}), row({0, 0, 6})},
                               {{0, 1, 2}});
}

Instance trim5() {
  return local_expert_instance({1, 1, 1, 1, 1}, {row({12, 0, 0, 0, 0}), row({0, 8, 8, 8, 8})},
                               {{0, 1, 2, 3, 4}});
}

ReductionInstance edge2() {
  Graph g(2);
  g.add_edge(0, 1);
  return gen_mis_reduction(g, 1);
}

}  // namespace dsplab
