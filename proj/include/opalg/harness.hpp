// Copyright 2026 The opalg Authors
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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "opalg/bessel.hpp"
#include "opalg/gauss.hpp"

namespace opalg::harness {

using Params = std::map<std::string, std::string>;

/// One evaluated identity. For exact checks lhs is the number of mismatching
/// items, rhs is 0 and the tolerance is 0. For numeric checks over several
/// points the fields describe the point with the largest error relative to
/// its own tolerance.
struct IdentityCheck {
  std::string name;
  Params params;
  ComplexF lhs;
  ComplexF rhs;
  double abs_err = 0.0;
  double tolerance = 0.0;
  bool exact = false;
  bool pass = false;

  friend bool operator==(const IdentityCheck&, const IdentityCheck&) = default;
};

struct Counts {
  int pass = 0;
  int fail = 0;

  friend bool operator==(const Counts&, const Counts&) = default;
};

struct Report {
  std::string suite_name;
  std::string timestamp;  // ISO 8601, UTC
  std::vector<IdentityCheck> checks;
  Counts counts;
  std::map<std::string, std::string> config;

  bool all_pass() const noexcept { return counts.fail == 0; }
  friend bool operator==(const Report&, const Report&) = default;
};

struct SuiteConfig {
  std::string suite_name = "opalg-identities";
  std::string filter = "*";  // shell-style glob over check names
  int threads = 0;           // 0 = hardware concurrency
  bessel::BesselEvalConfig bessel;
  std::map<std::string, Params> overrides;  // per-check parameter overrides

  /// Parses the JSON config document; unknown keys are rejected.
  static SuiteConfig from_json(std::string_view text);
  /// Throws Io with the path on read failure.
  static SuiteConfig load(const std::string& path);
  std::map<std::string, std::string> snapshot() const;
};

struct CheckInfo {
  std::string name;
  std::string description;
  Params defaults;
};

/// Registered identities in stable order. Names are public API.
const std::vector<CheckInfo>& registry();

bool matches_filter(const std::string& pattern, const std::string& name);

/// Runs one identity. `params` override the registered defaults; unknown
/// names raise Registry, unknown or malformed keys raise Argument.
IdentityCheck run_check(const std::string& name, const Params& params = {},
                        const bessel::BesselEvalConfig& bessel_cfg = {});

/// Runs every registered check that matches the filter, concurrently, and
/// assembles the report in registry order.
Report run_suite(const SuiteConfig& config = {});

/// Stable JSON text: sorted keys, shortest round-trip floats.
std::string report_serialize(const Report& report);
Report report_parse(std::string_view text);

}  // namespace opalg::harness
