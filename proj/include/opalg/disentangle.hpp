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

#include <array>
#include <vector>

#include "opalg/gauss.hpp"
#include "opalg/poly.hpp"
#include "opalg/weyl.hpp"

namespace opalg::disentangle {

/// Exponent a*x^2 + b*(xp+px) + c*p^2 (multiplied by t at use sites).
struct QuadExponent {
  ComplexF a_x2;
  ComplexF b_mix;
  ComplexF c_p2;
};

/// -(p^2 - 4x^2 + 2i(xp+px)): exp(t * this) applied to 1 generates the
/// series sum_n t^n/n! H_{2n}(x).
inline const QuadExponent kEvenHermiteExponent{{4.0, 0.0}, {0.0, -2.0},
                                               {-1.0, 0.0}};

/// exp(f x^2) exp(g (xp+px)) exp(h p^2) at parameter t.
struct FactoredForm {
  ComplexF f;
  ComplexF g;
  ComplexF h;
  double t = 0.0;
};

/// e^{quad_coeff x^2} * sum_k poly[k] x^k
struct ExpQuadPoly {
  ComplexF quad_coeff;
  std::vector<ComplexF> poly;

  ComplexF eval(ComplexF x) const;
};

struct FactorRates {
  ComplexF df;
  ComplexF dg;
  ComplexF dh;
};

/// xp + px, normal-ordered as 2xp - i.
WeylOp mixed_operator();

/// Exact coordinates of an operator in the span of {x^2, xp+px, p^2}.
struct ExactQuadExponent {
  GaussRational a_x2;
  GaussRational b_mix;
  GaussRational c_p2;

  friend bool operator==(const ExactQuadExponent&,
                         const ExactQuadExponent&) = default;
};

/// Throws NotApplicable if `w` has components outside the span.
ExactQuadExponent decompose_quadratic(const WeylOp& w);
WeylOp compose_quadratic(const ExactQuadExponent& q);

/// Linear system obtained by differentiating the factored ansatz and
/// collecting x^2, (xp+px), p^2 components. coeff[row][col] multiplies the
/// rate of factor col (f, g, h); entries of the h column additionally carry
/// the factor exp(h_phase * g).
struct MatchingSystem {
  std::array<std::array<GaussRational, 3>, 3> coeff;
  GaussRational h_phase;
};

/// Builds the matching system at a concrete f using the Weyl algebra's
/// Hadamard conjugations.
MatchingSystem matching_system(const GaussRational& f);

/// Triangular solution of the matching system:
///   dh = c e^{-4ig},  dg = b - 2icf,  df = a - 4ibf - 4cf^2.
FactorRates factor_rates(const QuadExponent& q, ComplexF f, ComplexF g);

/// Closed-form factors for kEvenHermiteExponent:
///   f = 4t/(4t+1), g = -(i/2) ln(4t+1), h = -t/(4t+1).
/// Throws Singularity for t <= -1/4.
FactoredForm disentangle_closed(double t);
/// d/dt of disentangle_closed.
FactorRates disentangle_closed_rates(double t);

/// Classical RK4 from (0,0,0) over [0, t]. Throws BlowUp on a non-finite
/// state.
FactoredForm disentangle_ode(const QuadExponent& q, double t,
                             int steps = 10000);

/// Action of the factored product on q: exp(h p^2) is a finite derivative
/// series, exp(g(xp+px)) scales x^k by e^{-ig(2k+1)}, exp(f x^2) stays as
/// the Gaussian prefactor.
ExpQuadPoly apply_factored(const FactoredForm& form, const UniPoly& q);

/// sum_{m<=order} t^m/m! Op^m q for the unfactored exponential, computed
/// exactly from the binary values of t and the exponent coefficients.
UniPoly exp_taylor_apply(const QuadExponent& q, double t, const UniPoly& poly,
                         int order);

/// Full factored pipeline applied to the constant 1, evaluated at x0.
double even_hermite_via_disentangle(double t, double x0);

}  // namespace opalg::disentangle
