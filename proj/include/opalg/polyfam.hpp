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

#include <functional>
#include <vector>

#include "opalg/gauss.hpp"
#include "opalg/poly.hpp"
#include "opalg/rational.hpp"

namespace opalg {

/// H_0 .. H_N; polys[n] has degree n and leading coefficient 2^n.
struct HermiteSet {
  std::vector<UniPoly> polys;
};

/// L_0^a .. L_N^a for a fixed rational order a.
struct LaguerreSet {
  Rational alpha;
  std::vector<UniPoly> polys;
};

// Three exact routes to the Hermite polynomials.

/// H_{n+1} = 2x H_n - 2n H_{n-1}, seeds H_0 = 1, H_1 = 2x.
HermiteSet hermite_recurrence(int n_max);
/// Rodrigues form, iterated as q_{m+1} = 2x q_m - q_m'.
UniPoly hermite_rodrigues(int n);
/// (-i)^n (p + 2ix)^n applied to the constant 1.
UniPoly hermite_operator(int n);

/// H_n'' - 2x H_n' + 2n H_n; the zero polynomial for every n.
UniPoly hermite_ode_residual(int n);

struct AdditionSides {
  GaussRational lhs;
  GaussRational rhs;
};

/// lhs = H_n(x0 + y0); rhs = 2^{-n/2} sum_k C(n,k) H_k(sqrt2 x0)
/// H_{n-k}(sqrt2 y0), evaluated exactly in Q(sqrt 2). Throws Internal if the
/// sqrt(2) component of rhs does not cancel.
AdditionSides hermite_addition_check(int n, const Rational& x0,
                                     const Rational& y0);

/// sum_{n<=n_terms} H_n(x) a^n / n!
ComplexF hermite_genfun_partial(ComplexF gen_alpha, ComplexF x0, int n_terms);
/// exp(-a^2 + 2 a x)
ComplexF hermite_genfun_closed(ComplexF gen_alpha, ComplexF x0);

/// sum_{n<=n_terms} t^n / n! H_{2n}(x). Converges for |t| < 1/4.
ComplexF even_hermite_partial(ComplexF t, ComplexF x0, int n_terms);
/// (4t+1)^{-1/2} exp(4 t x^2 / (4t+1)), principal branch. Throws Singularity
/// at t = -1/4 and Domain when 4t+1 lies on the negative real axis.
ComplexF even_hermite_closed(ComplexF t, ComplexF x0);

/// Oscillator functions pi^{-1/4} (2^n n!)^{-1/2} e^{-x^2/2} H_n(x).
ComplexF psi_eval(int n, ComplexF x0);
ComplexF psi_derivative(int n, ComplexF x0);
/// psi_0(x) .. psi_{n_max}(x), by the normalized three-term recurrence.
std::vector<ComplexF> psi_values(int n_max, ComplexF x0);

struct ExpansionGrid {
  double half_width = 10.0;  // integrate over [-L, L]
  int nodes = 400;           // trapezoid nodes, endpoints included
};

/// Coefficients c_n = int f psi_n dx, n = 0..n_max, by the trapezoidal rule.
std::vector<ComplexF> hermite_expand(const std::function<ComplexF(double)>& f,
                                     int n_max, const ExpansionGrid& grid = {});

// Three exact routes to the associated Laguerre polynomials.

/// (n+1) L_{n+1} = (2n + a + 1 - x) L_n - (n + a) L_{n-1}, seeds 1 and
/// 1 + a - x.
LaguerreSet laguerre_recurrence(int n_max, const Rational& order_alpha);
/// (1/n!) x^{-a} (d/dx - 1)^n x^{n+a}, carried through ShiftedPoly.
UniPoly laguerre_operator(int n, const Rational& order_alpha);
/// sum_k C(n+a, n-k) (-1)^k x^k / k!
UniPoly laguerre_explicit(int n, const Rational& order_alpha);

/// (n+1) L_{n+1} - (2n+a+1-x) L_n + (n+a) L_{n-1}
UniPoly laguerre_recurrence_residual(int n, const Rational& order_alpha,
                                     const UniPoly& prev, const UniPoly& cur,
                                     const UniPoly& next);

/// sum_{n<=n_terms} L_n^a(x) t^n; throws Domain for |t| >= 1.
ComplexF laguerre_genfun_partial(ComplexF t, ComplexF x0,
                                 const Rational& order_alpha, int n_terms);
/// (1-t)^{-(a+1)} exp(-x t / (1-t))
ComplexF laguerre_genfun_closed(ComplexF t, ComplexF x0,
                                const Rational& order_alpha);

}  // namespace opalg
