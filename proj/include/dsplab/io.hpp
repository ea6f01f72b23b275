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

#ifndef DSPLAB_IO_HPP
#define DSPLAB_IO_HPP

#include <string>

#include "json.hpp"

#include "dsplab/instance.hpp"
#include "dsplab/partition.hpp"
#include "dsplab/profile.hpp"
#include "dsplab/rational.hpp"

namespace dsplab::io {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" (or "p") strings; integer JSON numbers are also
// accepted on input.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& pointer);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j, std::size_t ground_size, const std::string& pointer);

// Instance document:
//   { "items": [..]?, "weights": [..], "bidders": [..]?, "valuations": [[..]..],
//     "mediators": [{"name": ..?, "parts": [[..]..]}..] }
// Schema violations throw InvalidInput naming the JSON pointer; the result is
// also checked with validate_instance.
Instance instance_from_json(const Json& doc);
// Canonical form: names always present, mediator parts canonical.
Json to_json(const Instance& inst);

// { "reports": [ partition.. ] }, validated against the instance.
StrategyProfile profile_from_json(const Json& doc, const Instance& inst);
Json to_json(const StrategyProfile& profile);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);
StrategyProfile load_profile(const std::string& path, const Instance& inst);

}  // namespace dsplab::io

#endif  // DSPLAB_IO_HPP
