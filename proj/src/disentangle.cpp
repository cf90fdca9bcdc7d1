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

#include "opalg/disentangle.hpp"

#include <cmath>
#include <string>

#include "opalg/error.hpp"

namespace opalg::disentangle {

namespace {

constexpr ComplexF kI{0.0, 1.0};

bool finite(ComplexF z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

ComplexF ExpQuadPoly::eval(ComplexF x) const {
  ComplexF acc = 0.0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return std::exp(quad_coeff * x * x) * acc;
}

WeylOp mixed_operator() {
  return WeylOp::x() * WeylOp::p() + WeylOp::p() * WeylOp::x();
}

ExactQuadExponent decompose_quadratic(const WeylOp& w) {
  ExactQuadExponent q;
  GaussRational constant;
  for (const auto& [key, c] : w.terms()) {
    if (key == WeylOp::Key{2, 0}) {
      q.a_x2 = c;
    } else if (key == WeylOp::Key{1, 1}) {
      q.b_mix = c / GaussRational(2);
    } else if (key == WeylOp::Key{0, 2}) {
      q.c_p2 = c;
    } else if (key == WeylOp::Key{0, 0}) {
      constant = c;
    } else {
      raise(ErrorCode::NotApplicable,
            w.to_string() + " is not in span{x^2, xp+px, p^2}");
    }
  }
  // b (xp+px) = 2b xp - i b, so the constant must be exactly -i b.
  if (constant != q.b_mix * GaussRational(Rational(0), Rational(-1))) {
    raise(ErrorCode::NotApplicable,
          w.to_string() + " has a constant part outside span{x^2, xp+px, p^2}");
  }
  return q;
}

WeylOp compose_quadratic(const ExactQuadExponent& q) {
  return WeylOp::term(2, 0, q.a_x2) + mixed_operator().scale(q.b_mix) +
         WeylOp::term(0, 2, q.c_p2);
}

MatchingSystem matching_system(const GaussRational& f) {
  const WeylOp x2 = WeylOp::term(2, 0);
  const WeylOp p2 = WeylOp::term(0, 2);
  const WeylOp mix = mixed_operator();

  // f' multiplies x^2 directly.
  const ExactQuadExponent col_f = decompose_quadratic(x2);

  // g' multiplies e^{f x^2} (xp+px) e^{-f x^2}.
  const auto g_conj = hadamard_conjugate(x2, mix, f);
  if (!std::holds_alternative<Terminated>(g_conj)) {
    raise(ErrorCode::Internal, "x^2 conjugation of xp+px did not terminate");
  }
  const ExactQuadExponent col_g =
      decompose_quadratic(std::get<Terminated>(g_conj).result);

  // h' multiplies e^{f x^2} e^{g(xp+px)} p^2 e^{-g(xp+px)} e^{-f x^2}; the
  // inner conjugation is an eigen-case whose phase stays symbolic in g.
  const auto inner = hadamard_conjugate(mix, p2, GaussRational(1));
  if (!std::holds_alternative<Eigen>(inner)) {
    raise(ErrorCode::Internal, "(xp+px) conjugation of p^2 is not an eigen-case");
  }
  const Eigen& eig = std::get<Eigen>(inner);
  const auto outer = hadamard_conjugate(x2, eig.op, f);
  if (!std::holds_alternative<Terminated>(outer)) {
    raise(ErrorCode::Internal, "x^2 conjugation of p^2 did not terminate");
  }
  const ExactQuadExponent col_h =
      decompose_quadratic(std::get<Terminated>(outer).result);

  MatchingSystem sys;
  const std::array<const ExactQuadExponent*, 3> cols{&col_f, &col_g, &col_h};
  for (std::size_t c = 0; c < 3; ++c) {
    sys.coeff[0][c] = cols[c]->a_x2;
    sys.coeff[1][c] = cols[c]->b_mix;
    sys.coeff[2][c] = cols[c]->c_p2;
  }
  sys.h_phase = eig.lambda;
  return sys;
}

FactorRates factor_rates(const QuadExponent& q, ComplexF f, ComplexF g) {
  const ComplexF dh = q.c_p2 * std::exp(-4.0 * kI * g);
  const ComplexF dg = q.b_mix - 2.0 * kI * q.c_p2 * f;
  const ComplexF df = q.a_x2 - 4.0 * kI * q.b_mix * f - 4.0 * q.c_p2 * f * f;
  return {df, dg, dh};
}

FactoredForm disentangle_closed(double t) {
  const double s = 4.0 * t + 1.0;
  if (!(s > 0.0)) {
    raise(ErrorCode::Singularity,
          "factored form is singular for t <= -1/4 (t = " + std::to_string(t) +
              ")");
  }
  return {4.0 * t / s, -0.5 * kI * std::log(s), -t / s, t};
}

FactorRates disentangle_closed_rates(double t) {
  const double s = 4.0 * t + 1.0;
  if (!(s > 0.0)) {
    raise(ErrorCode::Singularity, "factored form is singular for t <= -1/4");
  }
  return {4.0 / (s * s), -2.0 * kI / s, -1.0 / (s * s)};
}

FactoredForm disentangle_ode(const QuadExponent& q, double t, int steps) {
  if (steps < 1) raise(ErrorCode::Argument, "RK4 needs steps >= 1");
  if (!std::isfinite(t)) raise(ErrorCode::Argument, "t must be finite");
  FactoredForm state{0.0, 0.0, 0.0, 0.0};
  if (t == 0.0) return state;
  const double dt = t / steps;
  auto rates = [&q](ComplexF f, ComplexF g) { return factor_rates(q, f, g); };
  for (int s = 0; s < steps; ++s) {
    const ComplexF f = state.f;
    const ComplexF g = state.g;
    const FactorRates k1 = rates(f, g);
    const FactorRates k2 = rates(f + 0.5 * dt * k1.df, g + 0.5 * dt * k1.dg);
    const FactorRates k3 = rates(f + 0.5 * dt * k2.df, g + 0.5 * dt * k2.dg);
    const FactorRates k4 = rates(f + dt * k3.df, g + dt * k3.dg);
    state.f += dt / 6.0 * (k1.df + 2.0 * k2.df + 2.0 * k3.df + k4.df);
    state.g += dt / 6.0 * (k1.dg + 2.0 * k2.dg + 2.0 * k3.dg + k4.dg);
    state.h += dt / 6.0 * (k1.dh + 2.0 * k2.dh + 2.0 * k3.dh + k4.dh);
    state.t = (s + 1 == steps) ? t : (s + 1) * dt;
    if (!finite(state.f) || !finite(state.g) || !finite(state.h)) {
      raise(ErrorCode::BlowUp, "disentangling ODE blew up at t = " +
                                   std::to_string(state.t));
    }
  }
  return state;
}

ExpQuadPoly apply_factored(const FactoredForm& form, const UniPoly& q) {
  const int deg = q.degree();
  std::vector<ComplexF> coeffs(static_cast<std::size_t>(deg < 0 ? 0 : deg + 1),
                               0.0);
  for (const auto& [k, c] : q.terms()) {
    coeffs[static_cast<std::size_t>(k)] = c.to_complex();
  }

  // exp(h p^2) q = sum_m h^m/m! (-1)^m q^(2m)
  std::vector<ComplexF> smoothed = coeffs;
  std::vector<ComplexF> deriv = coeffs;
  ComplexF weight = 1.0;
  for (int m = 1; 2 * m <= deg; ++m) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k + 1 < deriv.size(); ++k) {
        deriv[k] = deriv[k + 1] * static_cast<double>(k + 1);
      }
      deriv.back() = 0.0;
    }
    weight *= -form.h / static_cast<double>(m);
    for (std::size_t k = 0; k < smoothed.size(); ++k) {
      smoothed[k] += weight * deriv[k];
    }
  }

  // (xp+px) x^k = -i(2k+1) x^k
  for (std::size_t k = 0; k < smoothed.size(); ++k) {
    smoothed[k] *= std::exp(-kI * form.g * (2.0 * static_cast<double>(k) + 1.0));
  }
  return {form.f, smoothed};
}

UniPoly exp_taylor_apply(const QuadExponent& q, double t, const UniPoly& poly,
                         int order) {
  if (order < 0) raise(ErrorCode::Argument, "Taylor order must be >= 0");
  const WeylOp op = compose_quadratic({GaussRational::from_complex(q.a_x2),
                                       GaussRational::from_complex(q.b_mix),
                                       GaussRational::from_complex(q.c_p2)});
  const GaussRational step(Rational::from_double(t));
  UniPoly term = poly;
  UniPoly sum = poly;
  for (int m = 1; m <= order; ++m) {
    term = apply_to_poly(op, term).scale(step / GaussRational(m));
    sum += term;
  }
  return sum;
}

double even_hermite_via_disentangle(double t, double x0) {
  const FactoredForm form = disentangle_closed(t);
  return apply_factored(form, UniPoly(1)).eval(x0).real();
}

}  // namespace opalg::disentangle
