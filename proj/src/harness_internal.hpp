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

#include <string>
#include <vector>

#include "opalg/harness.hpp"
#include "opalg/rational.hpp"

namespace opalg::harness::detail {

/// Typed access to string parameters; every failure names the key.
class ParamReader {
 public:
  explicit ParamReader(const Params& params) : params_(params) {}

  int integer(const std::string& key) const;
  double real(const std::string& key) const;
  std::vector<int> integers(const std::string& key) const;
  std::vector<double> reals(const std::string& key) const;
  std::vector<Rational> rationals(const std::string& key) const;

 private:
  const std::string& raw(const std::string& key) const;
  std::vector<std::string> items(const std::string& key) const;

  const Params& params_;
};

struct Outcome {
  ComplexF lhs;
  ComplexF rhs;
  double abs_err = 0.0;
  double tolerance = 0.0;
  bool exact = false;
};

/// Counts failed exact comparisons.
class ExactTally {
 public:
  void expect(bool ok) {
    if (!ok) ++mismatches_;
  }
  Outcome finish() const;

 private:
  long mismatches_ = 0;
};

/// Tracks the sample point with the largest error-to-tolerance ratio.
class WorstCase {
 public:
  void add(ComplexF lhs, ComplexF rhs, double tolerance);
  Outcome finish() const;

 private:
  bool any_ = false;
  double ratio_ = 0.0;
  Outcome worst_;
};

using CheckFn = Outcome (*)(const ParamReader&, const bessel::BesselEvalConfig&);

struct Registered {
  CheckInfo info;
  CheckFn fn;
};

const std::vector<Registered>& registered_checks();

}  // namespace opalg::harness::detail
