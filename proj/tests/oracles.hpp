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

// Test-only reference implementations. Nothing here calls into the library's
// own algorithms; they exist so results can be checked against code written
// a different way.

#ifndef OPALG_TESTS_ORACLES_HPP
#define OPALG_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <map>
#include <string>

#include "opalg/poly.hpp"
#include "opalg/weyl.hpp"

namespace oracle {

using opalg::GaussRational;
using opalg::Rational;
using opalg::UniPoly;

// Operators as linear combinations of words over {x, p}, normal-ordered by
// the rewriting rule px -> xp - i.
using Words = std::map<std::string, GaussRational>;

inline void add_word(Words& w, const std::string& word, const GaussRational& c) {
  auto& slot = w[word];
  slot += c;
  if (slot.is_zero()) w.erase(word);
}

inline Words word(const std::string& s, const GaussRational& c = 1) {
  Words w;
  add_word(w, s, c);
  return w;
}

inline Words operator+(Words a, const Words& b) {
  for (const auto& [s, c] : b) add_word(a, s, c);
  return a;
}

inline Words operator*(const Words& a, const Words& b) {
  Words out;
  for (const auto& [sa, ca] : a) {
    for (const auto& [sb, cb] : b) add_word(out, sa + sb, ca * cb);
  }
  return out;
}

inline Words scaled(const Words& a, const GaussRational& c) {
  Words out;
  for (const auto& [s, v] : a) add_word(out, s, v * c);
  return out;
}

inline Words normal_order(Words w) {
  const GaussRational minus_i(0, -1);
  for (;;) {
    Words next;
    bool changed = false;
    for (const auto& [s, c] : w) {
      const auto pos = s.find("px");
      if (pos == std::string::npos) {
        add_word(next, s, c);
        continue;
      }
      changed = true;
      std::string swapped = s;
      swapped[pos] = 'x';
      swapped[pos + 1] = 'p';
      add_word(next, swapped, c);
      add_word(next, s.substr(0, pos) + s.substr(pos + 2), c * minus_i);
    }
    w = std::move(next);
    if (!changed) return w;
  }
}

inline opalg::WeylOp to_weyl(const Words& w) {
  opalg::WeylOp out;
  for (const auto& [s, c] : normal_order(w)) {
    const auto j = static_cast<int>(s.find('p') == std::string::npos
                                        ? s.size()
                                        : s.find('p'));
    out += opalg::WeylOp::term(j, static_cast<int>(s.size()) - j, c);
  }
  return out;
}

inline Words commutator(const Words& a, const Words& b) {
  return a * b + scaled(b * a, GaussRational(-1));
}

// H_n(x) = sum_m (-1)^m n! / (m! (n-2m)!) (2x)^(n-2m)
inline UniPoly hermite_explicit(int n) {
  UniPoly out;
  for (int m = 0; 2 * m <= n; ++m) {
    mpz_class num, a, b;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_fac_ui(a.get_mpz_t(), static_cast<unsigned long>(m));
    mpz_fac_ui(b.get_mpz_t(), static_cast<unsigned long>(n - 2 * m));
    mpz_class two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(n - 2 * m));
    mpq_class c(num * two_pow, a * b);
    if (m % 2 == 1) c = -c;
    out += UniPoly::monomial(n - 2 * m, GaussRational(Rational(c)));
  }
  return out;
}

// L_n^a(x) = sum_k (-1)^k / k! * prod_{j=1}^{n-k} (a + k + j) / j * x^k
inline UniPoly laguerre_explicit(int n, const mpq_class& a) {
  UniPoly out;
  mpq_class inv_kfact = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) inv_kfact /= k;
    mpq_class prod = 1;
    for (int j = 1; j <= n - k; ++j) prod *= (a + k + j) / mpq_class(j);
    mpq_class c = prod * inv_kfact;
    if (k % 2 == 1) c = -c;
    out += UniPoly::monomial(k, GaussRational(Rational(c)));
  }
  return out;
}

// J_n(x) from its power series in 512-bit floating point.
inline double bessel_j(int n, double x) {
  const mp_bitcnt_t prec = 512;
  const bool negate = n < 0 && (-n) % 2 == 1;
  if (n < 0) n = -n;
  mpf_class half_x(x, prec);
  half_x /= 2;
  mpf_class q(half_x * half_x, prec);
  mpf_class term(1, prec);
  for (int k = 1; k <= n; ++k) term *= half_x / k;
  mpf_class sum(term, prec);
  mpf_class eps(1, prec);
  mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), 400);
  for (int k = 1; k < 10000; ++k) {
    term *= -q;
    term /= static_cast<double>(k) * static_cast<double>(k + n);
    sum += term;
    if (k > static_cast<int>(std::abs(x)) && abs(term) < eps) break;
  }
  const double v = sum.get_d();
  return negate ? -v : v;
}

}  // namespace oracle

#endif  // OPALG_TESTS_ORACLES_HPP
