// Copyright 2026 The bmw-teleport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "bmw/gates.hpp"

namespace bmw {

inline constexpr const char* kToolVersion = "0.1.0";

/// Invalid command, kind or flag value; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;  // verify | teleport | solve | analyze
  std::string kind;     // subcommand argument, e.g. "bmw" or "two-qubit"
  double phi = 0.0;
  int sites = 3;
  std::uint64_t seed = 42;
  double tolerance = kRelationTol;
  std::string format = "text";
  std::optional<std::string> output;
  std::string basis = "pauli";
  std::string mn = "00";
  int solution_class = 0;  // 0 = every class
  std::string gate;
  int trials = 100;
  TConvention t_convention = TConvention::Standard;

  /// Throws UsageError when a field is out of range.
  void validate() const;
};

/// Tolerance from BMW_TOL if set and valid, else the default.
double default_tolerance();

/// Deterministic report: keys command, config, results, pass (in that order).
struct ReportDocument {
  nlohmann::ordered_json config;
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  std::string command;
  bool pass = true;

  /// Appends one result object; it must carry "name", "pass" and "summary".
  void add(nlohmann::ordered_json result);
  std::string to_json() const;
  std::string to_text() const;
};

/// Residual as a decimal string with 15 significant digits.
std::string residual_string(double r);

ReportDocument run_verify(const RunConfig& cfg);
ReportDocument run_teleport(const RunConfig& cfg);
ReportDocument run_solve(const RunConfig& cfg);
ReportDocument run_analyze(const RunConfig& cfg);
/// Dispatches on cfg.command.
ReportDocument run(const RunConfig& cfg);

}  // namespace bmw
