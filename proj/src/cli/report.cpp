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

#include "dsplab/report.hpp"

namespace dsplab::report {

Json number(const Rational& r) {
  Json j;
  j["exact"] = r.str();
  j["decimal"] = r.decimal(12);
  return j;
}

Json ratio(const PriceRatio& r) {
  if (!r.infinite) return number(r.value);
  Json j;
  j["exact"] = "infinite";
  j["decimal"] = "inf";
  return j;
}

Json payments(const PaymentVector& p) {
  Json arr = Json::array();
  for (const auto& x : p.payments) arr.push_back(number(x));
  return arr;
}

Json solve_result(const SolveResult& result, bool include_timing) {
  Json j;
  j["method"] = to_string(result.method);
  j["revenue"] = number(result.revenue);
  j["profile"] = io::to_json(result.profile)["reports"];
  j["joint"] = io::to_json(result.joint);
  Json stats;
  stats["profiles_examined"] = result.stats.profiles_examined;
  if (include_timing) {
    stats["elapsed_ms"] = std::chrono::duration<double, std::milli>(result.stats.elapsed).count();
  }
  j["stats"] = std::move(stats);
  return j;
}

std::string render_json(const Json& report) { return report.dump(2) + "\n"; }

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

bool is_number_object(const Json& j) {
  return j.is_object() && j.size() == 2 && j.contains("exact") && j.contains("decimal");
}

bool is_index_list(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j) {
    if (!x.is_number_integer()) return false;
  }
  return true;
}

void flatten(const Json& j, const std::string& path, std::string& out) {
  if (is_number_object(j)) {
    out += csv_cell(path) + "," + csv_cell(j["exact"].get<std::string>()) + "," +
           csv_cell(j["decimal"].get<std::string>()) + "\n";
  } else if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, path + "/" + key, out);
  } else if (j.is_array() && !j.empty() && is_index_list(j[0])) {
    // A partition: keep it on one row.
    out += csv_cell(path) + "," + csv_cell(j.dump()) + ",\n";
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "/" + std::to_string(i), out);
  } else {
    out += csv_cell(path) + "," + csv_cell(j.is_string() ? j.get<std::string>() : j.dump()) + ",\n";
  }
}

}  // namespace

std::string render_csv(const Json& report) {
  std::string out = "field,exact,decimal\n";
  flatten(report, "", out);
  return out;
}

}  // namespace dsplab::report
