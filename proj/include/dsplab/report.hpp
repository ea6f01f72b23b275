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

#ifndef DSPLAB_REPORT_HPP
#define DSPLAB_REPORT_HPP

#include <string>

#include "dsplab/io.hpp"
#include "dsplab/mechanism.hpp"
#include "dsplab/rational.hpp"
#include "dsplab/solvers.hpp"

namespace dsplab::report {

using io::Json;

// {"exact": "p/q", "decimal": "<12 significant digits>"}.
Json number(const Rational& r);
Json ratio(const PriceRatio& r);
Json payments(const PaymentVector& p);
Json solve_result(const SolveResult& result, bool include_timing);

// JSON text, two-space indent, trailing newline.
std::string render_json(const Json& report);

// Flattens a report to "field,exact,decimal" rows; field is the JSON pointer
// of each leaf, numbers contribute both renderings.
std::string render_csv(const Json& report);

}  // namespace dsplab::report

#endif  // DSPLAB_REPORT_HPP
