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

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <string>

#include "opalg/error.hpp"
#include "opalg/gauss.hpp"
#include "opalg/poly.hpp"
#include "opalg/rational.hpp"

namespace opalg {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Argument: return "argument_error";
    case ErrorCode::Domain: return "domain_error";
    case ErrorCode::Singularity: return "singularity_error";
    case ErrorCode::NonConvergence: return "non_convergence_error";
    case ErrorCode::NotApplicable: return "not_applicable_error";
    case ErrorCode::Accuracy: return "accuracy_error";
    case ErrorCode::BlowUp: return "blow_up_error";
    case ErrorCode::Registry: return "registry_error";
    case ErrorCode::Internal: return "internal_error";
    case ErrorCode::Io: return "io_error";
  }
  return "unknown_error";
}

// ---------------------------------------------------------------- Rational

Rational::Rational(long num, long den) {
  if (den == 0) raise(ErrorCode::Argument, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) {
    raise(ErrorCode::Argument, "cannot convert non-finite double to rational");
  }
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), value);
  return Rational(q);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_number(std::string_view text) {
  raise(ErrorCode::Argument, "not a number: '" + std::string(text) + "'");
}

mpz_class parse_signed_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) bad_number(whole);
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  if (s.empty()) bad_number(text);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_signed_integer(s.substr(0, slash), text);
    mpz_class den = parse_signed_integer(s.substr(slash + 1), text);
    if (den == 0) raise(ErrorCode::Argument, "zero denominator in '" +
                                                 std::string(text) + "'");
    return Rational(mpq_class(num, den));
  }

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mpz_class ez = parse_signed_integer(s.substr(e + 1), text);
    if (!ez.fits_slong_p() || ::abs(ez) > 4000) bad_number(text);
    exponent = ez.get_si();
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) bad_number(text);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) {
      bad_number(text);
    }
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(s)) bad_number(text);
    digits = std::string(s);
  }
  mpz_class mant(digits, 10);
  if (negative) mant = -mant;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(
                                           exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(mpq_class(mant, scale))
                      : Rational(mpq_class(mant * scale));
}

Rational Rational::inverse() const {
  if (is_zero()) raise(ErrorCode::Argument, "inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) raise(ErrorCode::Argument, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(unsigned exponent) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), exponent);
  return Rational(mpq_class(num, den));
}

double parse_real(std::string_view text) {
  if (text.find('/') != std::string_view::npos) {
    const Rational r = Rational::parse(text);
    const mpz_class num = r.numerator();
    const mpz_class den = r.denominator();
    if (::abs(num) < (mpz_class(1) << 53) && den < (mpz_class(1) << 53)) {
      return num.get_d() / den.get_d();
    }
    return r.to_double();
  }
  const std::string s(text);
  if (s.empty() || std::isspace(static_cast<unsigned char>(s.front()))) {
    bad_number(text);
  }
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
    bad_number(text);
  }
  return v;
}

Rational binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Rational(mpq_class(r));
}

Rational factorial(long n) {
  if (n < 0) raise(ErrorCode::Argument, "factorial of negative number");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(r));
}

// ----------------------------------------------------------- GaussRational

GaussRational GaussRational::from_complex(ComplexF z) {
  return {Rational::from_double(z.real()), Rational::from_double(z.imag())};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (o.im_.is_zero()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRational GaussRational::inverse() const {
  if (is_zero()) raise(ErrorCode::Argument, "inverse of zero");
  const Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  return *this *= o.inverse();
}

GaussRational GaussRational::pow(unsigned exponent) const {
  GaussRational result(1);
  GaussRational base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

namespace {

std::string imag_text(const Rational& im) {
  if (im == Rational(1)) return "i";
  if (im == Rational(-1)) return "-i";
  return im.to_string() + "*i";
}

}  // namespace

std::string GaussRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  if (re_.is_zero()) return imag_text(im_);
  std::string s = "(" + re_.to_string();
  s += im_.sign() < 0 ? " - " : " + ";
  s += imag_text(im_.abs()) + ")";
  return s;
}

// ----------------------------------------------------------------- UniPoly

UniPoly::UniPoly(GaussRational constant) { add_term(0, constant); }

UniPoly::UniPoly(
    std::initializer_list<std::pair<const int, GaussRational>> terms) {
  for (const auto& [k, c] : terms) add_term(k, c);
}

UniPoly UniPoly::monomial(int degree, GaussRational coeff) {
  if (degree < 0) raise(ErrorCode::Argument, "negative polynomial degree");
  UniPoly p;
  p.add_term(degree, coeff);
  return p;
}

void UniPoly::add_term(int degree, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(degree, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int UniPoly::degree() const noexcept {
  return terms_.empty() ? -1 : terms_.rbegin()->first;
}

GaussRational UniPoly::coeff(int degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? GaussRational() : it->second;
}

GaussRational UniPoly::leading() const {
  return terms_.empty() ? GaussRational() : terms_.rbegin()->second;
}

bool UniPoly::is_real() const {
  for (const auto& [k, c] : terms_) {
    if (!c.is_real()) return false;
  }
  return true;
}

UniPoly UniPoly::derivative() const {
  UniPoly d;
  for (const auto& [k, c] : terms_) {
    if (k > 0) d.terms_.emplace(k - 1, c * GaussRational(k));
  }
  return d;
}

UniPoly UniPoly::scale(const GaussRational& c) const {
  if (c.is_zero()) return {};
  UniPoly s;
  for (const auto& [k, a] : terms_) s.terms_.emplace(k, a * c);
  return s;
}

UniPoly UniPoly::shift_degree(int by) const {
  if (by < 0) raise(ErrorCode::Argument, "negative degree shift");
  UniPoly s;
  for (const auto& [k, a] : terms_) s.terms_.emplace(k + by, a);
  return s;
}

GaussRational UniPoly::eval(const GaussRational& x0) const {
  GaussRational acc;
  int prev = degree();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (int k = prev; k > it->first; --k) acc *= x0;
    acc += it->second;
    prev = it->first;
  }
  for (int k = prev; k > 0; --k) acc *= x0;
  return acc;
}

ComplexF UniPoly::eval(ComplexF x0) const {
  ComplexF acc = 0.0;
  int prev = degree();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (int k = prev; k > it->first; --k) acc *= x0;
    acc += it->second.to_complex();
    prev = it->first;
  }
  for (int k = prev; k > 0; --k) acc *= x0;
  return acc;
}

std::string UniPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int k = it->first;
    const GaussRational& c = it->second;
    bool negative = false;
    std::string coef;
    bool unit = false;
    if (c.is_real()) {
      negative = c.re().sign() < 0;
      const Rational mag = c.re().abs();
      unit = mag == Rational(1);
      coef = mag.to_string();
    } else if (c.re().is_zero()) {
      negative = c.im().sign() < 0;
      coef = imag_text(c.im().abs());
    } else {
      coef = c.to_string();
    }
    std::string body;
    const std::string power = k == 1 ? "x" : "x^" + std::to_string(k);
    if (k == 0) {
      body = coef;
    } else if (unit) {
      body = power;
    } else {
      body = coef + "*" + power;
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

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
  }
  return r;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly poly_arith(const UniPoly& a, const UniPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return a + b;
    case PolyOp::Mul: return a * b;
    case PolyOp::Scale: return a.scale(b.coeff(0));
  }
  return {};
}

// ------------------------------------------------------------- ShiftedPoly

ShiftedPoly::ShiftedPoly(Rational alpha, Terms terms)
    : alpha_(std::move(alpha)) {
  for (const auto& [k, c] : terms) add_term(k, c);
}

ShiftedPoly ShiftedPoly::power(Rational alpha, int k, GaussRational c) {
  ShiftedPoly s(std::move(alpha));
  s.add_term(k, c);
  return s;
}

void ShiftedPoly::add_term(int k, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void ShiftedPoly::require_same_offset(const ShiftedPoly& o) const {
  if (alpha_ != o.alpha_) {
    raise(ErrorCode::Argument, "shifted polynomials with different offsets (" +
                                   alpha_.to_string() + " vs " +
                                   o.alpha_.to_string() + ")");
  }
}

ShiftedPoly ShiftedPoly::derivative() const {
  ShiftedPoly d(alpha_);
  for (const auto& [k, c] : terms_) {
    d.add_term(k - 1, c * GaussRational(alpha_ + Rational(k)));
  }
  return d;
}

ShiftedPoly ShiftedPoly::scale(const GaussRational& c) const {
  ShiftedPoly s(alpha_);
  for (const auto& [k, a] : terms_) s.add_term(k, a * c);
  return s;
}

ShiftedPoly ShiftedPoly::times_power(const Rational& shift) const {
  ShiftedPoly s(alpha_ + shift);
  s.terms_ = terms_;
  return s;
}

UniPoly ShiftedPoly::to_unipoly() const {
  if (!alpha_.is_integer()) {
    if (terms_.empty()) return {};
    raise(ErrorCode::Internal, "non-integer exponent offset " +
                                   alpha_.to_string() + " survives");
  }
  const long offset = alpha_.numerator().get_si();
  UniPoly p;
  for (const auto& [k, c] : terms_) {
    const long e = offset + k;
    if (e < 0) {
      raise(ErrorCode::Internal,
            "negative exponent x^" + std::to_string(e) + " survives");
    }
    p += UniPoly::monomial(static_cast<int>(e), c);
  }
  return p;
}

ShiftedPoly& ShiftedPoly::operator+=(const ShiftedPoly& o) {
  require_same_offset(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

ShiftedPoly& ShiftedPoly::operator-=(const ShiftedPoly& o) {
  require_same_offset(o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

ShiftedPoly shifted_derivative(const ShiftedPoly& s) { return s.derivative(); }

Rational binom_shifted(const Rational& alpha, int n, int k) {
  if (k < 0 || k > n) {
    raise(ErrorCode::Argument, "binom_shifted: k=" + std::to_string(k) +
                                   " outside [0, " + std::to_string(n) + "]");
  }
  Rational r(1);
  for (int j = 1; j <= n - k; ++j) {
    r *= (alpha + Rational(k + j)) / Rational(j);
  }
  return r;
}

}  // namespace opalg
