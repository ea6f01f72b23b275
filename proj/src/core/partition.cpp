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

#include "dsplab/partition.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "dsplab/error.hpp"

namespace dsplab {

std::optional<std::string> Partition::check(const std::vector<ItemSet>& parts,
                                            std::size_t ground_size) {
  std::vector<char> seen(ground_size, 0);
  for (const auto& part : parts) {
    if (part.empty()) return "empty part";
    for (Item j : part) {
      if (j >= ground_size) {
        return "item " + std::to_string(j) + " out of range";
      }
      if (seen[j]) return "overlapping parts";
      seen[j] = 1;
    }
  }
  for (std::size_t j = 0; j < ground_size; ++j) {
    if (!seen[j]) return "item " + std::to_string(j) + " missing from partition";
  }
  return std::nullopt;
}

Partition::Partition(std::vector<ItemSet> parts, std::size_t ground_size)
    : parts_(std::move(parts)), ground_size_(ground_size) {
  if (auto err = check(parts_, ground_size_)) throw InvalidInput(*err);
  for (auto& part : parts_) std::sort(part.begin(), part.end());
  std::sort(parts_.begin(), parts_.end(),
            [](const ItemSet& a, const ItemSet& b) { return a.front() < b.front(); });
}

Partition Partition::whole(std::size_t ground_size) {
  Partition p;
  p.ground_size_ = ground_size;
  if (ground_size > 0) {
    ItemSet all(ground_size);
    for (std::size_t j = 0; j < ground_size; ++j) all[j] = j;
    p.parts_.push_back(std::move(all));
  }
  return p;
}

Partition Partition::singletons(std::size_t ground_size) {
  Partition p;
  p.ground_size_ = ground_size;
  for (std::size_t j = 0; j < ground_size; ++j) p.parts_.push_back({j});
  return p;
}

Partition Partition::from_labels(std::span<const std::size_t> labels) {
  Partition p;
  p.ground_size_ = labels.size();
  std::unordered_map<std::size_t, std::size_t> slot;
  for (std::size_t j = 0; j < labels.size(); ++j) {
    auto [it, inserted] = slot.try_emplace(labels[j], p.parts_.size());
    if (inserted) p.parts_.emplace_back();
    p.parts_[it->second].push_back(j);
  }
  // Items are visited in ascending order, so parts are already canonical.
  return p;
}

std::vector<std::size_t> Partition::labels() const {
  std::vector<std::size_t> out(ground_size_);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    for (Item j : parts_[i]) out[j] = i;
  }
  return out;
}

bool is_refinement(const Partition& fine, const Partition& coarse) {
  if (fine.ground_size() != coarse.ground_size()) {
    throw InvalidInput("ground-set mismatch");
  }
  const auto label = coarse.labels();
  for (const auto& part : fine.parts()) {
    const std::size_t l = label[part.front()];
    for (Item j : part) {
      if (label[j] != l) return false;
    }
  }
  return true;
}

Partition meet(std::span<const Partition> partitions) {
  if (partitions.empty()) throw InvalidInput("need at least one partition");
  const std::size_t n = partitions.front().ground_size();
  std::vector<std::size_t> current(n, 0);
  std::size_t classes = n > 0 ? 1 : 0;
  for (const auto& p : partitions) {
    if (p.ground_size() != n) throw InvalidInput("ground-set mismatch");
    const auto label = p.labels();
    std::vector<std::size_t> remap(classes * p.size(), 0);
    std::size_t next = 0;
    for (std::size_t j = 0; j < n; ++j) {
      auto& slot = remap[current[j] * p.size() + label[j]];
      if (slot == 0) slot = ++next;
      current[j] = slot - 1;
    }
    classes = next;
  }
  return Partition::from_labels(current);
}

Partition meet(const Partition& a, const Partition& b) {
  const Partition both[] = {a, b};
  return meet(both);
}

std::size_t bell_number(std::size_t q) {
  // Bell triangle.
  std::vector<std::size_t> row{1};
  for (std::size_t i = 0; i < q; ++i) {
    std::vector<std::size_t> next{row.back()};
    for (std::size_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

std::vector<Partition> coarsenings(const Partition& base, std::size_t max_parts) {
  const std::size_t q = base.size();
  if (q > max_parts) {
    throw LimitExceeded("strategy space too large: " + std::to_string(q) +
                        " parts exceeds the cap of " + std::to_string(max_parts));
  }
  std::vector<Partition> out;
  if (q == 0) {
    out.push_back(base);
    return out;
  }
  out.reserve(bell_number(q));
  const auto base_label = base.labels();
  // Restricted growth string: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
  std::vector<std::size_t> rgs(q, 0), prefix_max(q, 0);
  std::vector<std::size_t> item_label(base.ground_size());
  while (true) {
    for (std::size_t j = 0; j < item_label.size(); ++j) item_label[j] = rgs[base_label[j]];
    out.push_back(Partition::from_labels(item_label));
    // Advance to the next restricted growth string.
    std::size_t i = q;
    while (i-- > 1) {
      if (rgs[i] <= prefix_max[i - 1]) break;
    }
    if (i == 0) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t r = i + 1; r < q; ++r) {
      rgs[r] = 0;
      prefix_max[r] = prefix_max[i];
    }
  }
  return out;
}

std::string to_string(const Partition& p) {
  std::string s = "{";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += '{';
    for (std::size_t k = 0; k < p.part(i).size(); ++k) {
      if (k) s += ',';
      s += std::to_string(p.part(i)[k]);
    }
    s += '}';
  }
  return s + "}";
}

Partition parse_partition(std::string_view text, std::size_t ground_size) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  const auto fail = [&] { return InvalidInput("malformed partition \"" + std::string(text) + "\""); };
  if (compact.size() < 2 || compact.front() != '{' || compact.back() != '}') throw fail();
  std::vector<ItemSet> parts;
  std::size_t pos = 1;
  const std::size_t end = compact.size() - 1;
  while (pos < end) {
    if (compact[pos] != '{') throw fail();
    const auto close = compact.find('}', pos);
    if (close == std::string::npos || close >= compact.size() - 1) throw fail();
    ItemSet part;
    std::size_t k = pos + 1;
    while (k < close) {
      std::size_t next = k;
      while (next < close && std::isdigit(static_cast<unsigned char>(compact[next]))) ++next;
      if (next == k) throw fail();
      part.push_back(std::stoul(compact.substr(k, next - k)));
      if (next < close && compact[next] != ',') throw fail();
      k = next + 1;
    }
    parts.push_back(std::move(part));
    pos = close + 1;
    if (pos < end) {
      if (compact[pos] != ',') throw fail();
      ++pos;
    }
  }
  return Partition(std::move(parts), ground_size);
}

}  // namespace dsplab
