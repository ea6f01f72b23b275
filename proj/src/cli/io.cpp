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

#include "dsplab/io.hpp"

#include <fstream>
#include <sstream>

#include "dsplab/error.hpp"

namespace dsplab::io {

namespace {

[[noreturn]] void schema_error(const std::string& pointer, const std::string& what) {
  throw InvalidInput("schema error at " + (pointer.empty() ? std::string("/") : pointer) + ": " +
                     what);
}

const Json& require_array(const Json& j, const std::string& pointer) {
  if (!j.is_array()) schema_error(pointer, "expected an array");
  return j;
}

std::vector<std::string> names_from_json(const Json& doc, const char* key, std::size_t count) {
  const std::string pointer = std::string("/") + key;
  if (!doc.contains(key)) {
    std::vector<std::string> out;
    return out;
  }
  const Json& arr = require_array(doc.at(key), pointer);
  if (arr.size() != count) {
    schema_error(pointer, "expected " + std::to_string(count) + " names, got " +
                              std::to_string(arr.size()));
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_string()) schema_error(pointer + "/" + std::to_string(i), "expected a string");
    out.push_back(arr[i].get<std::string>());
  }
  return out;
}

std::vector<std::string> default_names(const std::string& prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::vector<ItemSet> parts_from_json(const Json& j, const std::string& pointer) {
  require_array(j, pointer);
  std::vector<ItemSet> parts;
  for (std::size_t p = 0; p < j.size(); ++p) {
    const std::string here = pointer + "/" + std::to_string(p);
    require_array(j[p], here);
    ItemSet part;
    for (std::size_t k = 0; k < j[p].size(); ++k) {
      const Json& x = j[p][k];
      if (!x.is_number_integer() || x.get<long long>() < 0) {
        schema_error(here + "/" + std::to_string(k), "expected a nonnegative item index");
      }
      part.push_back(x.get<std::size_t>());
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j, const std::string& pointer) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) schema_error(pointer, "expected a rational string \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const InvalidInput& e) {
    schema_error(pointer, e.what());
  }
}

Json to_json(const Partition& p) {
  Json out = Json::array();
  for (const auto& part : p.parts()) out.push_back(part);
  return out;
}

Partition partition_from_json(const Json& j, std::size_t ground_size, const std::string& pointer) {
  auto parts = parts_from_json(j, pointer);
  if (auto err = Partition::check(parts, ground_size)) schema_error(pointer, *err);
  return Partition(std::move(parts), ground_size);
}

Instance instance_from_json(const Json& doc) {
  if (!doc.is_object()) schema_error("", "expected an object");
  for (const char* key : {"weights", "valuations", "mediators"}) {
    if (!doc.contains(key)) schema_error("", std::string("missing required member \"") + key + "\"");
  }
  Instance inst;
  const Json& weights = require_array(doc.at("weights"), "/weights");
  for (std::size_t j = 0; j < weights.size(); ++j) {
    inst.weights.push_back(rational_from_json(weights[j], "/weights/" + std::to_string(j)));
  }
  const std::size_t n = inst.weights.size();

  const Json& rows = require_array(doc.at("valuations"), "/valuations");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string pointer = "/valuations/" + std::to_string(i);
    require_array(rows[i], pointer);
    if (rows[i].size() != n) {
      schema_error(pointer, "valuation row " + std::to_string(i) + " has " +
                                std::to_string(rows[i].size()) + " entries, expected " +
                                std::to_string(n));
    }
    auto& row = inst.valuations.emplace_back();
    for (std::size_t j = 0; j < n; ++j) {
      row.push_back(rational_from_json(rows[i][j], pointer + "/" + std::to_string(j)));
    }
  }
  inst.item_names = names_from_json(doc, "items", n);
  if (inst.item_names.empty()) inst.item_names = default_names("j", n);
  inst.bidder_names = names_from_json(doc, "bidders", inst.valuations.size());
  if (inst.bidder_names.empty()) inst.bidder_names = default_names("b", inst.valuations.size());

  const Json& meds = require_array(doc.at("mediators"), "/mediators");
  for (std::size_t t = 0; t < meds.size(); ++t) {
    const std::string pointer = "/mediators/" + std::to_string(t);
    if (!meds[t].is_object()) schema_error(pointer, "expected an object");
    if (!meds[t].contains("parts")) schema_error(pointer, "missing required member \"parts\"");
    Mediator med;
    med.name = "m" + std::to_string(t);
    if (meds[t].contains("name")) {
      if (!meds[t]["name"].is_string()) schema_error(pointer + "/name", "expected a string");
      med.name = meds[t]["name"].get<std::string>();
    }
    med.parts = parts_from_json(meds[t]["parts"], pointer + "/parts");
    inst.mediators.push_back(std::move(med));
  }
  validate_instance(inst);
  // Canonicalize mediator parts so documents round-trip structurally.
  for (auto& med : inst.mediators) med.parts = Partition(med.parts, n).parts();
  return inst;
}

Json to_json(const Instance& inst) {
  Json doc;
  doc["items"] = inst.item_names.empty() ? default_names("j", inst.items()) : inst.item_names;
  Json weights = Json::array();
  for (const auto& w : inst.weights) weights.push_back(to_json(w));
  doc["weights"] = std::move(weights);
  doc["bidders"] = inst.bidder_names.empty() ? default_names("b", inst.bidders()) : inst.bidder_names;
  Json rows = Json::array();
  for (const auto& row : inst.valuations) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    rows.push_back(std::move(r));
  }
  doc["valuations"] = std::move(rows);
  Json meds = Json::array();
  for (std::size_t t = 0; t < inst.mediator_count(); ++t) {
    Json m;
    m["name"] = inst.mediators[t].name;
    m["parts"] = to_json(base_partition(inst, t));
    meds.push_back(std::move(m));
  }
  doc["mediators"] = std::move(meds);
  return doc;
}

StrategyProfile profile_from_json(const Json& doc, const Instance& inst) {
  if (!doc.is_object() || !doc.contains("reports")) {
    schema_error("", "expected an object with member \"reports\"");
  }
  const Json& reports = require_array(doc.at("reports"), "/reports");
  StrategyProfile profile;
  for (std::size_t t = 0; t < reports.size(); ++t) {
    profile.reports.push_back(
        partition_from_json(reports[t], inst.items(), "/reports/" + std::to_string(t)));
  }
  validate_profile(inst, profile);
  return profile;
}

Json to_json(const StrategyProfile& profile) {
  Json reports = Json::array();
  for (const auto& r : profile.reports) reports.push_back(to_json(r));
  Json doc;
  doc["reports"] = std::move(reports);
  return doc;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
  if (!out) throw InvalidInput("write failed for " + path);
}

Instance load_instance(const std::string& path) { return instance_from_json(read_json_file(path)); }

void save_instance(const Instance& inst, const std::string& path) {
  validate_instance(inst);
  write_text_file(path, to_json(inst).dump(2) + "\n");
}

StrategyProfile load_profile(const std::string& path, const Instance& inst) {
  return profile_from_json(read_json_file(path), inst);
}

}  // namespace dsplab::io
