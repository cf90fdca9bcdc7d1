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

#include "opalg/polyfam.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "opalg/error.hpp"
#include "opalg/weyl.hpp"

namespace opalg {

namespace {

void require_nonnegative(int n, const char* what) {
  if (n < 0) {
    raise(ErrorCode::Argument,
          std::string(what) + " must be >= 0, got " + std::to_string(n));
  }
}

// a + b sqrt(2) with rational a, b.
struct QuadSqrt2 {
  Rational a;
  Rational b;

  QuadSqrt2& operator+=(const QuadSqrt2& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  friend QuadSqrt2 operator*(const QuadSqrt2& u, const QuadSqrt2& v) {
    return {u.a * v.a + Rational(2) * u.b * v.b, u.a * v.b + u.b * v.a};
  }
};

QuadSqrt2 eval_real_poly(const UniPoly& q, const QuadSqrt2& x) {
  QuadSqrt2 acc{Rational(0), Rational(0)};
  int prev = q.degree();
  const auto& terms = q.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    for (int k = prev; k > it->first; --k) acc = acc * x;
    acc += QuadSqrt2{it->second.re(), Rational(0)};
    prev = it->first;
  }
  for (int k = prev; k > 0; --k) acc = acc * x;
  return acc;
}

}  // namespace

HermiteSet hermite_recurrence(int n_max) {
  require_nonnegative(n_max, "n_max");
  HermiteSet set;
  set.polys.reserve(static_cast<std::size_t>(n_max) + 1);
  set.polys.emplace_back(1);
  if (n_max >= 1) set.polys.push_back(UniPoly::monomial(1, 2));
  const UniPoly two_x = UniPoly::monomial(1, 2);
  for (int n = 1; n < n_max; ++n) {
    const auto& cur = set.polys[static_cast<std::size_t>(n)];
    const auto& prev = set.polys[static_cast<std::size_t>(n) - 1];
    set.polys.push_back(two_x * cur - prev.scale(GaussRational(2 * n)));
  }
  return set;
}

UniPoly hermite_rodrigues(int n) {
  require_nonnegative(n, "n");
  const UniPoly two_x = UniPoly::monomial(1, 2);
  UniPoly q(1);
  for (int m = 0; m < n; ++m) q = two_x * q - q.derivative();
  return q;
}

UniPoly hermite_operator(int n) {
  require_nonnegative(n, "n");
  const WeylOp raising = WeylOp::p() + WeylOp::x().scale(GaussRational(0, 2));
  const GaussRational minus_i(Rational(0), Rational(-1));
  UniPoly h = apply_to_one(weyl_pow(raising, n)).scale(minus_i.pow(
      static_cast<unsigned>(n)));
  if (!h.is_real()) {
    raise(ErrorCode::Internal, "operator route left an imaginary part in H_" +
                                   std::to_string(n) + ": " + h.to_string());
  }
  return h;
}

UniPoly hermite_ode_residual(int n) {
  require_nonnegative(n, "n");
  const UniPoly h = hermite_rodrigues(n);
  const UniPoly d1 = h.derivative();
  return d1.derivative() - UniPoly::monomial(1, 2) * d1 +
         h.scale(GaussRational(2 * n));
}

AdditionSides hermite_addition_check(int n, const Rational& x0,
                                     const Rational& y0) {
  require_nonnegative(n, "n");
  const HermiteSet set = hermite_recurrence(n);
  const GaussRational lhs =
      set.polys.back().eval(GaussRational(x0 + y0));

  const QuadSqrt2 sx{Rational(0), x0};
  const QuadSqrt2 sy{Rational(0), y0};
  QuadSqrt2 sum{Rational(0), Rational(0)};
  for (int k = 0; k <= n; ++k) {
    const QuadSqrt2 hx = eval_real_poly(set.polys[static_cast<std::size_t>(k)], sx);
    const QuadSqrt2 hy =
        eval_real_poly(set.polys[static_cast<std::size_t>(n - k)], sy);
    sum += QuadSqrt2{binomial(n, k), Rational(0)} * hx * hy;
  }
  // 2^{-n/2} = 2^{-(n+1)/2} sqrt 2 for odd n.
  const Rational half(1, 2);
  const QuadSqrt2 prefactor =
      n % 2 == 0 ? QuadSqrt2{half.pow(static_cast<unsigned>(n / 2)), Rational(0)}
                 : QuadSqrt2{Rational(0),
                             half.pow(static_cast<unsigned>((n + 1) / 2))};
  const QuadSqrt2 rhs = prefactor * sum;
  if (!rhs.b.is_zero()) {
    raise(ErrorCode::Internal, "sqrt(2) component " + rhs.b.to_string() +
                                   " survives in the addition formula");
  }
  return {lhs, GaussRational(rhs.a)};
}

ComplexF hermite_genfun_partial(ComplexF gen_alpha, ComplexF x0,
                                int n_terms) {
  require_nonnegative(n_terms, "N");
  // a^n/n! H_n = w_n * hn_n with hn_n = H_n / sqrt(2^n n!).
  const double sqrt2 = std::numbers::sqrt2;
  ComplexF prev = 0.0;
  ComplexF cur = 1.0;
  ComplexF weight = 1.0;
  ComplexF sum = 1.0;
  for (int n = 1; n <= n_terms; ++n) {
    const double nd = n;
    const ComplexF next = std::sqrt(2.0 / nd) * x0 * cur -
                          std::sqrt((nd - 1.0) / nd) * prev;
    prev = cur;
    cur = next;
    weight *= gen_alpha * (sqrt2 / std::sqrt(nd));
    sum += weight * cur;
  }
  return sum;
}

ComplexF hermite_genfun_closed(ComplexF gen_alpha, ComplexF x0) {
  return std::exp(-gen_alpha * gen_alpha + 2.0 * gen_alpha * x0);
}

ComplexF even_hermite_partial(ComplexF t, ComplexF x0, int n_terms) {
  require_nonnegative(n_terms, "N");
  ComplexF prev = 0.0;
  ComplexF cur = 1.0;
  ComplexF weight = 1.0;  // t^n/n! sqrt(4^n (2n)!)
  ComplexF sum = 1.0;
  int order = 0;
  for (int n = 1; n <= n_terms; ++n) {
    for (int step = 0; step < 2; ++step) {
      ++order;
      const double k = order;
      const ComplexF next = std::sqrt(2.0 / k) * x0 * cur -
                            std::sqrt((k - 1.0) / k) * prev;
      prev = cur;
      cur = next;
    }
    const double nd = n;
    weight *= t * (2.0 * std::sqrt(2.0 * nd * (2.0 * nd - 1.0)) / nd);
    sum += weight * cur;
  }
  return sum;
}

ComplexF even_hermite_closed(ComplexF t, ComplexF x0) {
  const ComplexF s = 4.0 * t + 1.0;
  if (s == ComplexF(0.0)) {
    raise(ErrorCode::Singularity, "even-Hermite sum is singular at t = -1/4");
  }
  if (s.imag() == 0.0 && s.real() < 0.0) {
    raise(ErrorCode::Domain,
          "4t+1 lies on the negative real axis (branch cut of the closed form)");
  }
  return std::exp(4.0 * t * x0 * x0 / s) / std::sqrt(s);
}

std::vector<ComplexF> psi_values(int n_max, ComplexF x0) {
  require_nonnegative(n_max, "n");
  std::vector<ComplexF> psi(static_cast<std::size_t>(n_max) + 1);
  psi[0] = std::exp(-0.5 * x0 * x0) / std::sqrt(std::sqrt(std::numbers::pi));
  if (n_max >= 1) psi[1] = std::numbers::sqrt2 * x0 * psi[0];
  for (int k = 1; k < n_max; ++k) {
    const double kd = k;
    const auto i = static_cast<std::size_t>(k);
    psi[i + 1] = std::sqrt(2.0 / (kd + 1.0)) * x0 * psi[i] -
                 std::sqrt(kd / (kd + 1.0)) * psi[i - 1];
  }
  return psi;
}

ComplexF psi_eval(int n, ComplexF x0) { return psi_values(n, x0).back(); }

ComplexF psi_derivative(int n, ComplexF x0) {
  const auto psi = psi_values(n, x0);
  // Follows from H_n' = 2n H_{n-1}.
  ComplexF d = -x0 * psi.back();
  if (n > 0) d += std::sqrt(2.0 * n) * psi[psi.size() - 2];
  return d;
}

std::vector<ComplexF> hermite_expand(const std::function<ComplexF(double)>& f,
                                     int n_max, const ExpansionGrid& grid) {
  require_nonnegative(n_max, "N");
  if (!(grid.half_width > 0.0)) {
    raise(ErrorCode::Argument, "expansion half-width L must be > 0");
  }
  if (grid.nodes < 2) raise(ErrorCode::Argument, "expansion needs M >= 2 nodes");
  const double h = 2.0 * grid.half_width / (grid.nodes - 1);
  std::vector<ComplexF> coeffs(static_cast<std::size_t>(n_max) + 1, 0.0);
  for (int j = 0; j < grid.nodes; ++j) {
    const double xj = -grid.half_width + j * h;
    const double w = (j == 0 || j == grid.nodes - 1) ? 0.5 * h : h;
    const ComplexF fx = f(xj) * w;
    const auto psi = psi_values(n_max, xj);
    for (std::size_t n = 0; n < coeffs.size(); ++n) coeffs[n] += fx * psi[n];
  }
  return coeffs;
}

LaguerreSet laguerre_recurrence(int n_max, const Rational& order_alpha) {
  require_nonnegative(n_max, "n_max");
  LaguerreSet set{order_alpha, {}};
  set.polys.emplace_back(1);
  const UniPoly x = UniPoly::x();
  if (n_max >= 1) set.polys.push_back(UniPoly(GaussRational(order_alpha + 1)) - x);
  for (int n = 1; n < n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const UniPoly lin =
        UniPoly(GaussRational(Rational(2 * n + 1) + order_alpha)) - x;
    UniPoly next = lin * set.polys[i] -
                   set.polys[i - 1].scale(GaussRational(Rational(n) + order_alpha));
    set.polys.push_back(next.scale(GaussRational(Rational(1, n + 1))));
  }
  return set;
}

UniPoly laguerre_operator(int n, const Rational& order_alpha) {
  require_nonnegative(n, "n");
  ShiftedPoly s = ShiftedPoly::power(order_alpha, n);  // x^{n+a}
  for (int m = 0; m < n; ++m) s = shifted_derivative(s) - s;
  return s.times_power(-order_alpha)
      .to_unipoly()
      .scale(GaussRational(factorial(n).inverse()));
}

UniPoly laguerre_explicit(int n, const Rational& order_alpha) {
  require_nonnegative(n, "n");
  UniPoly l;
  for (int k = 0; k <= n; ++k) {
    Rational c = binom_shifted(order_alpha, n, k) / factorial(k);
    if (k % 2 == 1) c = -c;
    l += UniPoly::monomial(k, GaussRational(c));
  }
  return l;
}

UniPoly laguerre_recurrence_residual(int n, const Rational& order_alpha,
                                     const UniPoly& prev, const UniPoly& cur,
                                     const UniPoly& next) {
  const UniPoly lin =
      UniPoly(GaussRational(Rational(2 * n + 1) + order_alpha)) - UniPoly::x();
  return next.scale(GaussRational(n + 1)) - lin * cur +
         prev.scale(GaussRational(Rational(n) + order_alpha));
}

ComplexF laguerre_genfun_partial(ComplexF t, ComplexF x0,
                                 const Rational& order_alpha, int n_terms) {
  require_nonnegative(n_terms, "N");
  if (!(std::abs(t) < 1.0)) {
    raise(ErrorCode::Domain, "Laguerre generating function needs |t| < 1");
  }
  const double a = order_alpha.to_double();
  ComplexF prev = 0.0;
  ComplexF cur = 1.0;
  ComplexF tn = 1.0;
  ComplexF sum = 1.0;
  for (int n = 0; n < n_terms; ++n) {
    const double nd = n;
    const ComplexF next =
        n == 0 ? ComplexF(1.0 + a) - x0
               : ((2.0 * nd + a + 1.0 - x0) * cur - (nd + a) * prev) /
                     (nd + 1.0);
    prev = cur;
    cur = next;
    tn *= t;
    sum += tn * cur;
  }
  return sum;
}

ComplexF laguerre_genfun_closed(ComplexF t, ComplexF x0,
                                const Rational& order_alpha) {
  if (!(std::abs(t) < 1.0)) {
    raise(ErrorCode::Domain, "Laguerre generating function needs |t| < 1");
  }
  const double a = order_alpha.to_double();
  return std::exp(-(a + 1.0) * std::log(1.0 - t) - x0 * t / (1.0 - t));
}

}  // namespace opalg
