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

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "opalg/gauss.hpp"

namespace opalg {

/// Sparse univariate polynomial sum c_k x^k with Gaussian-rational
/// coefficients. Zero coefficients are never stored, so two equal
/// polynomials always have identical term maps.
class UniPoly {
 public:
  using Terms = std::map<int, GaussRational>;

  UniPoly() = default;
  UniPoly(GaussRational constant);  // NOLINT(google-explicit-constructor)
  UniPoly(int constant) : UniPoly(GaussRational(constant)) {}  // NOLINT
  UniPoly(std::initializer_list<std::pair<const int, GaussRational>> terms);

  static UniPoly x() { return monomial(1, 1); }
  static UniPoly monomial(int degree, GaussRational coeff);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept;
  GaussRational coeff(int degree) const;
  GaussRational leading() const;
  bool is_real() const;

  UniPoly derivative() const;
  UniPoly scale(const GaussRational& c) const;
  UniPoly shift_degree(int by) const;  // multiply by x^by, by >= 0

  GaussRational eval(const GaussRational& x0) const;
  ComplexF eval(ComplexF x0) const;

  /// Canonical text: descending powers, exact coefficients, e.g.
  /// "4*x^2 - 2" or "1/2*x^2 - 3*x + 3".
  std::string to_string() const;

  UniPoly operator-() const { return scale(GaussRational(-1)); }
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void add_term(int degree, const GaussRational& c);

  Terms terms_;
};

enum class PolyOp { Add, Mul, Scale };

/// Ring operation dispatcher; for Scale only the constant term of `b` is
/// used as the factor.
UniPoly poly_arith(const UniPoly& a, const UniPoly& b, PolyOp op);

/// Sum c_k x^(alpha + k) with a fixed rational offset alpha. Used to carry
/// non-integer powers such as x^(n + alpha) through exact differentiation.
class ShiftedPoly {
 public:
  using Terms = std::map<int, GaussRational>;

  explicit ShiftedPoly(Rational alpha) : alpha_(std::move(alpha)) {}
  ShiftedPoly(Rational alpha, Terms terms);

  /// c x^(alpha + k)
  static ShiftedPoly power(Rational alpha, int k, GaussRational c = 1);

  const Rational& alpha() const noexcept { return alpha_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// c_k x^(alpha+k) -> c_k (alpha+k) x^(alpha+k-1)
  ShiftedPoly derivative() const;
  ShiftedPoly scale(const GaussRational& c) const;
  /// Multiplies by x^shift; the offset becomes alpha + shift.
  ShiftedPoly times_power(const Rational& shift) const;
  /// Requires an integer offset and only nonnegative exponents.
  UniPoly to_unipoly() const;

  ShiftedPoly& operator+=(const ShiftedPoly& o);
  ShiftedPoly& operator-=(const ShiftedPoly& o);
  friend ShiftedPoly operator+(ShiftedPoly a, const ShiftedPoly& b) {
    return a += b;
  }
  friend ShiftedPoly operator-(ShiftedPoly a, const ShiftedPoly& b) {
    return a -= b;
  }
  friend bool operator==(const ShiftedPoly& a, const ShiftedPoly& b) {
    return a.alpha_ == b.alpha_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(int k, const GaussRational& c);
  void require_same_offset(const ShiftedPoly& o) const;

  Rational alpha_;
  Terms terms_;
};

ShiftedPoly shifted_derivative(const ShiftedPoly& s);

/// Generalized binomial C(n + alpha, n - k) = prod_{j=1}^{n-k} (alpha+k+j)/j.
Rational binom_shifted(const Rational& alpha, int n, int k);

}  // namespace opalg
