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

#include <utility>
#include <vector>

#include "opalg/gauss.hpp"

namespace opalg::bessel {

/// Evaluation knobs shared by the J_n routines and the identity sums.
struct BesselEvalConfig {
  double series_tol = 1e-17;
  int quad_nodes = 64;   // starting node count, doubled until converged
  int miller_pad = 20;
  int addition_terms = 30;      // K in sum_{|k|<=K}
  int jacobi_anger_terms = 40;  // N in sum_{|n|<=N}
  int translation_terms = 30;   // M in sum_{m<=M}

  /// Throws Argument on an out-of-range field.
  void validate() const;
};

/// Power series sum_m (-1)^m (x/2)^{2m+n} / (m! (m+n)!), n >= 0. Negative x
/// goes through J_n(-x) = (-1)^n J_n(x).
double j_series(int n, double x, double tol = 1e-17);

/// (1/2pi) int_{-pi}^{pi} exp(-i(n tau - x sin tau)) dtau by the periodic
/// trapezoidal rule. Starts at `nodes` and doubles until two successive
/// results agree to 1e-14 (cap 4096). Throws Accuracy if the imaginary part
/// does not cancel.
double j_integral(int n, double x, int nodes = 64);

/// Miller downward recurrence from order n_max + pad + ceil(x), normalized
/// with J_0 + 2 sum J_{2k} = 1. Returns J_0 .. J_{n_max}.
std::vector<double> j_miller(int n_max, double x, int pad = 20);

/// Any integer order, J_{-n} = (-1)^n J_n.
double j_signed(int n, double x, const BesselEvalConfig& cfg = {});

/// d^m/dx^m J_n = 2^{-m} sum_k (-1)^k C(m,k) J_{n-m+2k}.
double j_derivative_m(int n, int m, double x, const BesselEvalConfig& cfg = {});

/// sum_{|k|<=K} J_{n-k}(x) J_k(y)
double j_addition(int n, double x, double y, int terms,
                  const BesselEvalConfig& cfg = {});

struct JacobiAngerSums {
  ComplexF cos_sum;  // sum i^n J_n(x) e^{iny}, compare e^{i x cos y}
  ComplexF sin_sum;  // sum J_n(x) e^{iny},     compare e^{i x sin y}
};
JacobiAngerSums jacobi_anger_partial(double x, double y, int terms,
                                     const BesselEvalConfig& cfg = {});

/// sum_{m<=M} y^m/m! d^m/dx^m J_n(x)
double j_translate_partial(int n, double x, double y, int terms,
                           const BesselEvalConfig& cfg = {});

/// x^2 J'' + x J' + (x^2 - n^2) J, with derivatives from j_derivative_m.
double j_ode_residual(int n, double x, const BesselEvalConfig& cfg = {});

/// sum_{|n|<=N} t^n J_n(x), compare exp(x (t - 1/t) / 2).
double genfun_partial(double x, double t, int terms,
                      const BesselEvalConfig& cfg = {});

/// (2n/x) J_n - J_{n-1} - J_{n+1}
double recurrence_residual(int n, double x, const BesselEvalConfig& cfg = {});

}  // namespace opalg::bessel
