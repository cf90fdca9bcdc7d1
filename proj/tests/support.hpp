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

#ifndef OPALG_TESTS_SUPPORT_HPP
#define OPALG_TESTS_SUPPORT_HPP

#include <complex>
#include <optional>

#include "opalg/error.hpp"

namespace testing {

// The error code raised by fn, or nothing if it returned normally.
template <typename Fn>
std::optional<opalg::ErrorCode> code_of(Fn&& fn) {
  try {
    fn();
  } catch (const opalg::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline bool near(std::complex<double> a, std::complex<double> b, double tol) {
  return std::abs(a - b) <= tol;
}

}  // namespace testing

#endif  // OPALG_TESTS_SUPPORT_HPP
