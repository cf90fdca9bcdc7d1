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

#include <complex>
#include <ostream>
#include <string>

#include "opalg/rational.hpp"

namespace opalg {

/// Numeric evaluation layer.
using ComplexF = std::complex<double>;

/// Exact complex scalar re + im*i over the rationals. This is the coefficient
/// field of every symbolic object in the library.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussRational(int re) : re_(re) {}                  // NOLINT
  GaussRational(long re) : re_(re) {}                 // NOLINT
  GaussRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRational i() { return {Rational(0), Rational(1)}; }
  /// Exact binary value of both parts of a finite complex double.
  static GaussRational from_complex(ComplexF z);

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const noexcept { return im_.is_zero(); }

  GaussRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussRational inverse() const;
  GaussRational pow(unsigned exponent) const;
  ComplexF to_complex() const { return {re_.to_double(), im_.to_double()}; }

  /// "3", "-1/2", "2*i", "(1 - 3/4*i)".
  std::string to_string() const;

  GaussRational operator-() const { return {-re_, -im_}; }
  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) {
    return a += b;
  }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) {
    return a -= b;
  }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) {
    return a *= b;
  }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) {
    return a /= b;
  }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussRational& z) {
    return os << z.to_string();
  }

 private:
  Rational re_;
  Rational im_;
};

}  // namespace opalg
