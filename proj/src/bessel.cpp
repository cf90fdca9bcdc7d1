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

#include "opalg/bessel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "opalg/error.hpp"

namespace opalg::bessel {

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    raise(ErrorCode::Domain, std::string(what) + " must be finite");
  }
}

void require_nonnegative(int v, const char* what) {
  if (v < 0) {
    raise(ErrorCode::Argument,
          std::string(what) + " must be >= 0, got " + std::to_string(v));
  }
}

double choose(int m, int k) {
  double c = 1.0;
  for (int j = 1; j <= k; ++j) c = c * (m - k + j) / j;
  return c;
}

}  // namespace

void BesselEvalConfig::validate() const {
  if (!(series_tol > 0.0)) raise(ErrorCode::Argument, "series_tol must be > 0");
  if (quad_nodes < 8 || quad_nodes % 2 != 0) {
    raise(ErrorCode::Argument, "quad_nodes must be even and >= 8");
  }
  if (miller_pad < 10) raise(ErrorCode::Argument, "miller_pad must be >= 10");
  require_nonnegative(addition_terms, "addition_terms");
  require_nonnegative(jacobi_anger_terms, "jacobi_anger_terms");
  require_nonnegative(translation_terms, "translation_terms");
}

double j_series(int n, double x, double tol) {
  require_finite(x, "x");
  require_nonnegative(n, "order n");
  if (x < 0.0) {
    const double v = j_series(n, -x, tol);
    return n % 2 == 0 ? v : -v;
  }
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;

  // Multiplicative term update; long double absorbs the cancellation for
  // moderate x.
  const long double half = static_cast<long double>(x) / 2.0L;
  const long double q = -half * half;
  long double term = 1.0L;
  for (int k = 1; k <= n; ++k) term *= half / k;
  long double sum = term;
  for (int m = 0;; ++m) {
    const long double next = term * q / ((m + 1.0L) * (m + n + 1.0L));
    const bool past_peak = std::fabs(q) < (m + 1.0L) * (m + n + 1.0L);
    if (past_peak && std::fabs(next) < tol * (1.0L + std::fabs(sum))) break;
    term = next;
    sum += term;
    if (m > 10000) {
      raise(ErrorCode::NonConvergence, "Bessel series did not converge");
    }
  }
  return static_cast<double>(sum);
}

double j_integral(int n, double x, int nodes) {
  require_finite(x, "x");
  if (nodes < 8 || nodes % 2 != 0) {
    raise(ErrorCode::Argument, "quadrature node count must be even and >= 8");
  }
  auto trapezoid = [n, x](int m) {
    // Periodic integrand: the rule reduces to the plain node average.
    double re = 0.0;
    double im = 0.0;
    const double h = 2.0 * std::numbers::pi / m;
    for (int j = 0; j < m; ++j) {
      const double tau = -std::numbers::pi + j * h;
      const double phase = x * std::sin(tau) - n * tau;
      re += std::cos(phase);
      im += std::sin(phase);
    }
    return ComplexF(re / m, im / m);
  };

  constexpr int kMaxNodes = 4096;
  ComplexF value = trapezoid(nodes);
  for (int m = 2 * nodes; m <= kMaxNodes; m *= 2) {
    const ComplexF refined = trapezoid(m);
    const bool converged = std::abs(refined - value) < 1e-14;
    value = refined;
    if (converged) break;
  }
  if (std::abs(value.imag()) > 1e-12 * (1.0 + std::abs(value.real()))) {
    raise(ErrorCode::Accuracy,
          "imaginary part of the Bessel integral did not cancel; increase "
          "the node count");
  }
  return value.real();
}

std::vector<double> j_miller(int n_max, double x, int pad) {
  require_finite(x, "x");
  require_nonnegative(n_max, "n_max");
  if (x < 0.0) {
    auto v = j_miller(n_max, -x, pad);
    for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
    return v;
  }
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 0.0);
  if (x == 0.0) {
    out[0] = 1.0;
    return out;
  }
  // Push the start out until J_start(x) is below 1e-30 by the large-order
  // estimate (e x / 2N)^N / sqrt(2 pi N).
  int start = n_max + pad + static_cast<int>(std::ceil(x));
  const auto log_size = [x](int order) {
    const double nn = order;
    return nn * std::log(std::numbers::e * x / (2.0 * nn)) -
           0.5 * std::log(2.0 * std::numbers::pi * nn);
  };
  while (log_size(start) > -69.0) start += 4;
  std::vector<double> j(static_cast<std::size_t>(start) + 2, 0.0);
  j[static_cast<std::size_t>(start) + 1] = 0.0;
  j[static_cast<std::size_t>(start)] = 1.0;
  constexpr double kBig = 1e250;
  for (int k = start; k >= 1; --k) {
    const auto i = static_cast<std::size_t>(k);
    j[i - 1] = (2.0 * k / x) * j[i] - j[i + 1];
    if (std::fabs(j[i - 1]) > kBig) {
      for (std::size_t r = i - 1; r < j.size(); ++r) j[r] /= kBig;
    }
  }
  double norm = j[0];
  for (std::size_t k = 2; k < j.size(); k += 2) norm += 2.0 * j[k];
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = j[k] / norm;
  return out;
}

double j_signed(int n, double x, const BesselEvalConfig& cfg) {
  require_finite(x, "x");
  const int order = n < 0 ? -n : n;
  // The series loses digits to cancellation once |x| is large.
  const double v = std::fabs(x) <= 12.0
                       ? j_series(order, x, cfg.series_tol)
                       : j_miller(order, x, cfg.miller_pad).back();
  return (n < 0 && order % 2 == 1) ? -v : v;
}

double j_derivative_m(int n, int m, double x, const BesselEvalConfig& cfg) {
  require_nonnegative(m, "derivative order m");
  double sum = 0.0;
  for (int k = 0; k <= m; ++k) {
    const double c = choose(m, k) * j_signed(n - m + 2 * k, x, cfg);
    sum += k % 2 == 0 ? c : -c;
  }
  return std::ldexp(sum, -m);
}

double j_addition(int n, double x, double y, int terms,
                  const BesselEvalConfig& cfg) {
  require_nonnegative(terms, "K");
  double sum = 0.0;
  for (int k = -terms; k <= terms; ++k) {
    sum += j_signed(n - k, x, cfg) * j_signed(k, y, cfg);
  }
  return sum;
}

JacobiAngerSums jacobi_anger_partial(double x, double y, int terms,
                                     const BesselEvalConfig& cfg) {
  require_nonnegative(terms, "N");
  // i^n, indexed by n mod 4
  static const ComplexF kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  ComplexF cos_sum = 0.0;
  ComplexF sin_sum = 0.0;
  for (int n = -terms; n <= terms; ++n) {
    const double jn = j_signed(n, x, cfg);
    const ComplexF phase = std::polar(1.0, n * y);
    cos_sum += kIPow[((n % 4) + 4) % 4] * jn * phase;
    sin_sum += jn * phase;
  }
  return {cos_sum, sin_sum};
}

double j_translate_partial(int n, double x, double y, int terms,
                           const BesselEvalConfig& cfg) {
  require_nonnegative(terms, "M");
  double sum = 0.0;
  double weight = 1.0;  // y^m / m!
  for (int m = 0; m <= terms; ++m) {
    if (m > 0) weight *= y / m;
    sum += weight * j_derivative_m(n, m, x, cfg);
  }
  return sum;
}

double j_ode_residual(int n, double x, const BesselEvalConfig& cfg) {
  if (!(x > 0.0)) raise(ErrorCode::Argument, "ODE residual needs x > 0");
  const double y = j_signed(n, x, cfg);
  const double d1 = j_derivative_m(n, 1, x, cfg);
  const double d2 = j_derivative_m(n, 2, x, cfg);
  return x * x * d2 + x * d1 + (x * x - static_cast<double>(n) * n) * y;
}

double genfun_partial(double x, double t, int terms,
                      const BesselEvalConfig& cfg) {
  if (t == 0.0) raise(ErrorCode::Domain, "generating function needs t != 0");
  require_nonnegative(terms, "N");
  double sum = 0.0;
  for (int n = -terms; n <= terms; ++n) {
    sum += std::pow(t, n) * j_signed(n, x, cfg);
  }
  return sum;
}

double recurrence_residual(int n, double x, const BesselEvalConfig& cfg) {
  if (x == 0.0) raise(ErrorCode::Domain, "recurrence residual needs x != 0");
  return (2.0 * n / x) * j_signed(n, x, cfg) - j_signed(n - 1, x, cfg) -
         j_signed(n + 1, x, cfg);
}

}  // namespace opalg::bessel
