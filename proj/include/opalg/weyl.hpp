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
#include <utility>
#include <variant>

#include "opalg/gauss.hpp"
#include "opalg/poly.hpp"

namespace opalg {

/// Element of the Weyl algebra generated by x and p = -i d/dx with
/// [x, p] = i, stored normal-ordered as sum c_{jk} x^j p^k (every x to the
/// left of every p). The term map is canonical: no zero coefficients.
class WeylOp {
 public:
  using Key = std::pair<int, int>;  // (x exponent, p exponent)
  using Terms = std::map<Key, GaussRational>;

  WeylOp() = default;
  WeylOp(GaussRational scalar);  // NOLINT(google-explicit-constructor)
  WeylOp(int scalar) : WeylOp(GaussRational(scalar)) {}  // NOLINT

  static WeylOp identity() { return WeylOp(1); }
  static WeylOp x() { return term(1, 0); }
  static WeylOp p() { return term(0, 1); }
  /// c x^j p^k
  static WeylOp term(int j, int k, GaussRational c = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  GaussRational coeff(int j, int k) const;
  /// True when the operator is c * identity (including zero).
  bool is_scalar() const noexcept;
  GaussRational scalar_value() const { return coeff(0, 0); }
  /// Highest total degree j + k; -1 for zero.
  int total_degree() const noexcept;

  WeylOp scale(const GaussRational& c) const;

  std::string to_string() const;

  WeylOp operator-() const { return scale(GaussRational(-1)); }
  WeylOp& operator+=(const WeylOp& o);
  WeylOp& operator-=(const WeylOp& o);
  friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
  friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
  friend WeylOp operator*(const WeylOp& a, const WeylOp& b);
  friend bool operator==(const WeylOp& a, const WeylOp& b) {
    return a.terms_ == b.terms_;
  }

 private:
  friend WeylOp weyl_mul(const WeylOp& a, const WeylOp& b);
  void add_term(int j, int k, const GaussRational& c);

  Terms terms_;
};

/// Normal-ordered product. Uses p^b x^c = sum_r C(b,r) c!/(c-r)! (-i)^r
/// x^(c-r) p^(b-r), the closed form of repeatedly applying px = xp - i.
WeylOp weyl_mul(const WeylOp& a, const WeylOp& b);
WeylOp weyl_pow(const WeylOp& w, int n);
WeylOp commutator(const WeylOp& a, const WeylOp& b);

/// Outcome of e^{xi A} B e^{-xi A}.
struct Terminated {
  WeylOp result;  // finite nested-commutator sum
};
struct Eigen {
  GaussRational lambda;  // [A, B] = lambda B, so the result is e^{xi lambda} B
  WeylOp op;
};
using ConjugationResult = std::variant<Terminated, Eigen>;

inline constexpr int kDefaultMaxDepth = 64;

/// Hadamard-lemma conjugation. Returns Eigen when the first commutator is a
/// scalar multiple of B, Terminated when a nested commutator vanishes within
/// `max_depth` levels, and throws NonConvergence otherwise.
ConjugationResult hadamard_conjugate(const WeylOp& a, const WeylOp& b,
                                     const GaussRational& xi,
                                     int max_depth = kDefaultMaxDepth);

/// Scalar c = [A, B] when [A, B] is central and commutes with A and B, so
/// that e^{A+B} = e^{-c/2} e^A e^B. Throws NotApplicable otherwise.
GaussRational central_bch_prefactor(const WeylOp& a, const WeylOp& b);

/// Action on polynomials: x^j p^k q = x^j (-i)^k q^(k).
UniPoly apply_to_poly(const WeylOp& w, const UniPoly& q);
inline UniPoly apply_to_one(const WeylOp& w) {
  return apply_to_poly(w, UniPoly(1));
}

}  // namespace opalg
