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

#include <chrono>

#include "dsplab/solvers.hpp"

namespace dsplab {

std::string to_string(Method method) {
  switch (method) {
    case Method::kExact: return "exact";
    case Method::kSilent: return "silent";
    case Method::kAllReport: return "all-report";
    case Method::kLocalExperts: return "local-experts";
    case Method::kLocalExpertsAuxiliary: return "local-experts-auxiliary";
  }
  return "unknown";
}

std::optional<Method> parse_method(const std::string& name) {
  if (name == "exact") return Method::kExact;
  if (name == "silent") return Method::kSilent;
  if (name == "all-report") return Method::kAllReport;
  if (name == "local-experts") return Method::kLocalExperts;
  return std::nullopt;
}

namespace {

SolveResult evaluate_profile(const Instance& inst, StrategyProfile profile, Method method) {
  const auto start = std::chrono::steady_clock::now();
  SolveResult result;
  result.joint = joint_partition(inst, profile);
  result.revenue = revenue(inst, result.joint);
  result.profile = std::move(profile);
  result.method = method;
  result.stats.profiles_examined = 1;
  result.stats.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace

SolveResult baseline_silent(const Instance& inst) {
  validate_instance(inst);
  return evaluate_profile(inst, silent_profile(inst), Method::kSilent);
}

SolveResult all_report(const Instance& inst) {
  validate_instance(inst);
  return evaluate_profile(inst, full_report_profile(inst), Method::kAllReport);
}

}  // namespace dsplab
