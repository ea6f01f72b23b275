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

// Independent reference implementations used only by the tests. They favor
// the most literal reading of each definition over speed and share no code
// with the library beyond the Rational number type.

#ifndef DSPLAB_TESTS_ORACLES_HPP
#define DSPLAB_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "dsplab/instance.hpp"
#include "dsplab/rational.hpp"

namespace oracle {

using dsplab::Rational;
using Block = std::vector<std::size_t>;
using SetPartition = std::vector<Block>;

inline Rational fact(unsigned n) {
  Rational r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= Rational(static_cast<std::int64_t>(i));
  return r;
}

inline SetPartition normalize(SetPartition p) {
  for (auto& b : p) std::sort(b.begin(), b.end());
  std::sort(p.begin(), p.end());
  return p;
}

// Every set partition of `elems`, by inserting each element into an existing
// block or a new one.
inline std::vector<SetPartition> set_partitions(const std::vector<std::size_t>& elems) {
  std::vector<SetPartition> out;
  SetPartition cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == elems.size()) {
      out.push_back(normalize(cur));
      return;
    }
    for (std::size_t b = 0; b < cur.size(); ++b) {
      cur[b].push_back(elems[i]);
      rec(i + 1);
      cur[b].pop_back();
    }
    cur.push_back({elems[i]});
    rec(i + 1);
    cur.pop_back();
  };
  rec(0);
  return out;
}

// Partitions obtained by merging blocks of `base`.
inline std::set<SetPartition> merges(const SetPartition& base) {
  std::vector<std::size_t> idx(base.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::set<SetPartition> out;
  for (const auto& grouping : set_partitions(idx)) {
    SetPartition p;
    for (const auto& g : grouping) {
      Block merged;
      for (auto b : g) merged.insert(merged.end(), base[b].begin(), base[b].end());
      p.push_back(merged);
    }
    out.insert(normalize(p));
  }
  return out;
}

inline bool subset_of(const Block& a, const Block& b) {
  return std::all_of(a.begin(), a.end(),
                     [&](std::size_t x) { return std::find(b.begin(), b.end(), x) != b.end(); });
}

inline bool refines(const SetPartition& fine, const SetPartition& coarse) {
  return std::all_of(fine.begin(), fine.end(), [&](const Block& f) {
    return std::any_of(coarse.begin(), coarse.end(), [&](const Block& c) { return subset_of(f, c); });
  });
}

inline SetPartition meet(const std::vector<SetPartition>& ps, std::size_t n) {
  SetPartition cur{Block(n)};
  std::iota(cur[0].begin(), cur[0].end(), 0);
  for (const auto& p : ps) {
    SetPartition next;
    for (const auto& a : cur) {
      for (const auto& b : p) {
        Block both;
        for (auto x : a) {
          if (std::find(b.begin(), b.end(), x) != b.end()) both.push_back(x);
        }
        if (!both.empty()) next.push_back(both);
      }
    }
    cur = next;
  }
  return normalize(cur);
}

// mu(S) v(S) written straight from the definition.
inline Rational part_revenue(const dsplab::Instance& inst, const Block& part) {
  Rational total = 0;
  for (const auto& w : inst.weights) total += w;
  Rational mass = 0;
  for (auto j : part) mass += inst.weights[j] / total;
  if (mass.is_zero() || inst.valuations.size() < 2) return 0;
  std::vector<Rational> bids;
  for (const auto& row : inst.valuations) {
    Rational s = 0;
    for (auto j : part) s += inst.weights[j] / total * row[j];
    bids.push_back(s / mass);
  }
  std::sort(bids.begin(), bids.end(), std::greater<>());
  return mass * bids[1];
}

inline Rational revenue(const dsplab::Instance& inst, const SetPartition& p) {
  Rational r = 0;
  for (const auto& part : p) r += part_revenue(inst, part);
  return r;
}

// Max revenue over all products of mediator coarsenings.
inline Rational optimum(const dsplab::Instance& inst) {
  std::vector<std::vector<SetPartition>> choices;
  for (const auto& med : inst.mediators) {
    const auto m = merges(med.parts);
    choices.emplace_back(m.begin(), m.end());
  }
  Rational best = 0;
  bool first = true;
  std::vector<SetPartition> pick(choices.size());
  std::function<void(std::size_t)> rec = [&](std::size_t t) {
    if (t == choices.size()) {
      const Rational r = revenue(inst, meet(pick, inst.items()));
      if (first || r > best) best = r;
      first = false;
      return;
    }
    for (const auto& c : choices[t]) {
      pick[t] = c;
      rec(t + 1);
    }
  };
  rec(0);
  return best;
}

// A game given by strategy counts and a value on tuples.
struct TableGame {
  std::vector<std::size_t> counts;
  std::function<Rational(const std::vector<std::size_t>&)> v;
};

// Shapley payments by literal enumeration of all orderings, each coalition
// value recomputed from scratch.
inline std::vector<Rational> shapley(const TableGame& g, const std::vector<std::size_t>& a) {
  const std::size_t m = a.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Rational> pay(m, 0);
  std::size_t perms = 0;
  do {
    std::vector<std::size_t> cur(m, 0);
    for (auto t : order) {
      const Rational before = g.v(cur);
      cur[t] = a[t];
      pay[t] += g.v(cur) - before;
    }
    ++perms;
  } while (std::next_permutation(order.begin(), order.end()));
  for (auto& p : pay) p /= Rational(static_cast<std::int64_t>(perms));
  return pay;
}

// Phi from the potential's definition, over nonempty coalitions.
inline Rational potential(const TableGame& g, const std::vector<std::size_t>& a) {
  const std::size_t m = a.size();
  Rational phi = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<std::size_t> sub(m, 0);
    unsigned s = 0;
    for (std::size_t t = 0; t < m; ++t) {
      if (mask >> t & 1) {
        sub[t] = a[t];
        ++s;
      }
    }
    phi += fact(s - 1) * fact(static_cast<unsigned>(m) - s) / fact(static_cast<unsigned>(m)) * g.v(sub);
  }
  return phi;
}

inline bool nash(const TableGame& g, const std::vector<std::size_t>& a) {
  const auto base = shapley(g, a);
  for (std::size_t t = 0; t < a.size(); ++t) {
    for (std::size_t s = 0; s < g.counts[t]; ++s) {
      auto b = a;
      b[t] = s;
      if (shapley(g, b)[t] > base[t]) return false;
    }
  }
  return true;
}

// Maximum independent set size by branching on the lowest remaining node.
inline std::size_t mis_size(std::size_t n, const std::set<std::pair<std::size_t, std::size_t>>& edges) {
  std::function<std::size_t(std::vector<bool>)> rec = [&](std::vector<bool> alive) -> std::size_t {
    std::size_t v = 0;
    while (v < n && !alive[v]) ++v;
    if (v == n) return 0;
    auto skip = alive;
    skip[v] = false;
    std::size_t best = rec(skip);
    auto take = skip;
    for (const auto& [a, b] : edges) {
      if (a == v) take[b] = false;
      if (b == v) take[a] = false;
    }
    return std::max(best, 1 + rec(take));
  };
  return rec(std::vector<bool>(n, true));
}

}  // namespace oracle

#endif  // DSPLAB_TESTS_ORACLES_HPP
