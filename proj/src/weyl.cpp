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

#include "opalg/weyl.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "opalg/error.hpp"

namespace opalg {

namespace {

GaussRational minus_i_pow(int r) {
  switch (r & 3) {
    case 0: return GaussRational(1);
    case 1: return {Rational(0), Rational(-1)};
    case 2: return GaussRational(-1);
    default: return {Rational(0), Rational(1)};
  }
}

// Falling factorial c (c-1) ... (c-r+1).
Rational falling(int c, int r) {
  Rational f(1);
  for (int s = 0; s < r; ++s) f *= Rational(c - s);
  return f;
}

}  // namespace

WeylOp::WeylOp(GaussRational scalar) { add_term(0, 0, scalar); }

WeylOp WeylOp::term(int j, int k, GaussRational c) {
  if (j < 0 || k < 0) raise(ErrorCode::Argument, "negative Weyl exponent");
  WeylOp w;
  w.add_term(j, k, c);
  return w;
}

void WeylOp::add_term(int j, int k, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{j, k}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GaussRational WeylOp::coeff(int j, int k) const {
  auto it = terms_.find(Key{j, k});
  return it == terms_.end() ? GaussRational() : it->second;
}

bool WeylOp::is_scalar() const noexcept {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
}

int WeylOp::total_degree() const noexcept {
  int d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, key.first + key.second);
  return d;
}

WeylOp WeylOp::scale(const GaussRational& c) const {
  WeylOp s;
  if (c.is_zero()) return s;
  for (const auto& [key, a] : terms_) s.terms_.emplace(key, a * c);
  return s;
}

std::string WeylOp::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Descending total degree, then descending x power.
  std::vector<std::pair<Key, GaussRational>> sorted(terms_.begin(),
                                                    terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second;
    const int db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  bool first = true;
  for (const auto& [key, c] : sorted) {
    std::string mono;
    auto factor = [&mono](const char* sym, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += sym;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    factor("x", key.first);
    factor("p", key.second);
    bool negative = false;
    std::string coef;
    if (c.is_real()) {
      negative = c.re().sign() < 0;
      coef = c.re().abs().to_string();
    } else if (c.re().is_zero()) {
      negative = c.im().sign() < 0;
      coef = GaussRational(Rational(0), c.im().abs()).to_string();
    } else {
      coef = c.to_string();
    }
    std::string body;
    if (mono.empty()) {
      body = coef;
    } else if (coef == "1") {
      body = mono;
    } else {
      body = coef + "*" + mono;
    }
    if (first) {
      out = (negative ? "-" : "") + body;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

WeylOp& WeylOp::operator+=(const WeylOp& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
  return *this;
}

WeylOp weyl_mul(const WeylOp& a, const WeylOp& b) {
  WeylOp r;
  for (const auto& [ka, ca] : a.terms_) {
    const auto [xa, pa] = ka;
    for (const auto& [kb, cb] : b.terms_) {
      const auto [xb, pb] = kb;
      const GaussRational cab = ca * cb;
      // x^xa (p^pa x^xb) p^pb
      for (int s = 0; s <= std::min(pa, xb); ++s) {
        GaussRational c = cab * GaussRational(binomial(pa, s) * falling(xb, s)) *
                          minus_i_pow(s);
        r.add_term(xa + xb - s, pa + pb - s, c);
      }
    }
  }
  return r;
}

WeylOp operator*(const WeylOp& a, const WeylOp& b) { return weyl_mul(a, b); }

WeylOp weyl_pow(const WeylOp& w, int n) {
  if (n < 0) raise(ErrorCode::Argument, "negative Weyl power");
  WeylOp r = WeylOp::identity();
  for (int i = 0; i < n; ++i) r = weyl_mul(r, w);
  return r;
}

WeylOp commutator(const WeylOp& a, const WeylOp& b) {
  return weyl_mul(a, b) - weyl_mul(b, a);
}

namespace {

// Returns lambda if c == lambda * b exactly.
std::optional<GaussRational> proportionality(const WeylOp& c,
                                             const WeylOp& b) {
  if (b.is_zero() || c.terms().size() != b.terms().size()) return std::nullopt;
  const auto& [key, b0] = *b.terms().begin();
  const GaussRational lambda = c.coeff(key.first, key.second) / b0;
  if (lambda.is_zero()) return std::nullopt;
  if (b.scale(lambda) != c) return std::nullopt;
  return lambda;
}

}  // namespace

ConjugationResult hadamard_conjugate(const WeylOp& a, const WeylOp& b,
                                     const GaussRational& xi, int max_depth) {
  if (max_depth < 1) raise(ErrorCode::Argument, "max_depth must be >= 1");
  WeylOp nested = commutator(a, b);
  if (auto lambda = proportionality(nested, b)) return Eigen{*lambda, b};

  WeylOp sum = b;
  GaussRational weight(1);  // xi^m / m!
  for (int m = 1; m <= max_depth; ++m) {
    if (nested.is_zero()) return Terminated{sum};
    weight *= xi / GaussRational(m);
    sum += nested.scale(weight);
    nested = commutator(a, nested);
  }
  if (nested.is_zero()) return Terminated{sum};
  raise(ErrorCode::NonConvergence,
        "nested commutator series neither terminates nor is an eigen-case "
        "after depth " + std::to_string(max_depth));
}

GaussRational central_bch_prefactor(const WeylOp& a, const WeylOp& b) {
  const WeylOp c = commutator(a, b);
  if (!commutator(c, a).is_zero() || !commutator(c, b).is_zero()) {
    raise(ErrorCode::NotApplicable,
          "[[A,B],A] or [[A,B],B] is nonzero; [A,B] = " + c.to_string());
  }
  if (!c.is_scalar()) {
    raise(ErrorCode::NotApplicable,
          "[A,B] = " + c.to_string() + " is not central");
  }
  return c.scalar_value();
}

UniPoly apply_to_poly(const WeylOp& w, const UniPoly& q) {
  UniPoly result;
  int max_k = 0;
  for (const auto& [key, c] : w.terms()) max_k = std::max(max_k, key.second);
  std::vector<UniPoly> derivs{q};
  for (int k = 1; k <= max_k; ++k) derivs.push_back(derivs.back().derivative());
  for (const auto& [key, c] : w.terms()) {
    const auto [j, k] = key;
    result += derivs[static_cast<std::size_t>(k)].shift_degree(j).scale(
        c * minus_i_pow(k));
  }
  return result;
}

}  // namespace opalg
