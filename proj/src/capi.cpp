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

#include "opalg/opalg.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <string>

#include "opalg/bessel.hpp"
#include "opalg/disentangle.hpp"
#include "opalg/error.hpp"
#include "opalg/harness.hpp"
#include "opalg/polyfam.hpp"

struct opalg_poly_s {
  opalg::UniPoly poly;
};

struct opalg_report_s {
  opalg::harness::Report report;
};

namespace {

thread_local std::string g_last_error;

opalg_status to_status(opalg::ErrorCode code) {
  using opalg::ErrorCode;
  switch (code) {
    case ErrorCode::Argument: return OPALG_ERR_ARGUMENT;
    case ErrorCode::Domain: return OPALG_ERR_DOMAIN;
    case ErrorCode::Singularity: return OPALG_ERR_SINGULARITY;
    case ErrorCode::NonConvergence: return OPALG_ERR_NONCONVERGENCE;
    case ErrorCode::NotApplicable: return OPALG_ERR_NOT_APPLICABLE;
    case ErrorCode::Accuracy: return OPALG_ERR_ACCURACY;
    case ErrorCode::BlowUp: return OPALG_ERR_BLOWUP;
    case ErrorCode::Registry: return OPALG_ERR_REGISTRY;
    case ErrorCode::Internal: return OPALG_ERR_INTERNAL;
    case ErrorCode::Io: return OPALG_ERR_IO;
  }
  return OPALG_ERR_INTERNAL;
}

template <typename Fn>
opalg_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    g_last_error.clear();
    return OPALG_OK;
  } catch (const opalg::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return OPALG_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return OPALG_ERR_INTERNAL;
  }
}

void require(const void* ptr, const char* what) {
  if (ptr == nullptr) {
    opalg::raise(opalg::ErrorCode::Argument,
                 std::string(what) + " must not be NULL");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_factored(const opalg::disentangle::FactoredForm& f,
                  opalg_factored* out) {
  *out = {f.f.real(), f.f.imag(), f.g.real(), f.g.imag(),
          f.h.real(), f.h.imag(), f.t};
}

}  // namespace

extern "C" {

const char* opalg_version(void) { return "0.1.0"; }

const char* opalg_status_name(opalg_status status) {
  switch (status) {
    case OPALG_OK: return "ok";
    case OPALG_ERR_ARGUMENT: return "argument_error";
    case OPALG_ERR_DOMAIN: return "domain_error";
    case OPALG_ERR_SINGULARITY: return "singularity_error";
    case OPALG_ERR_NONCONVERGENCE: return "non_convergence_error";
    case OPALG_ERR_NOT_APPLICABLE: return "not_applicable_error";
    case OPALG_ERR_ACCURACY: return "accuracy_error";
    case OPALG_ERR_BLOWUP: return "blow_up_error";
    case OPALG_ERR_REGISTRY: return "registry_error";
    case OPALG_ERR_INTERNAL: return "internal_error";
    case OPALG_ERR_IO: return "io_error";
  }
  return "unknown_status";
}

const char* opalg_last_error(void) { return g_last_error.c_str(); }

void opalg_string_free(char* s) { std::free(s); }

opalg_status opalg_parse_real(const char* text, double* out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = opalg::parse_real(text);
  });
}

opalg_status opalg_hermite(int n, opalg_hermite_route route, opalg_poly* out) {
  return guarded([&] {
    require(out, "out");
    opalg::UniPoly p;
    switch (route) {
      case OPALG_HERMITE_RECURRENCE:
        p = opalg::hermite_recurrence(n).polys.back();
        break;
      case OPALG_HERMITE_RODRIGUES: p = opalg::hermite_rodrigues(n); break;
      case OPALG_HERMITE_OPERATOR: p = opalg::hermite_operator(n); break;
      default: opalg::raise(opalg::ErrorCode::Argument, "unknown Hermite route");
    }
    *out = new opalg_poly_s{std::move(p)};
  });
}

opalg_status opalg_laguerre(int n, const char* alpha,
                            opalg_laguerre_route route, opalg_poly* out) {
  return guarded([&] {
    require(alpha, "alpha");
    require(out, "out");
    const opalg::Rational a = opalg::Rational::parse(alpha);
    opalg::UniPoly p;
    switch (route) {
      case OPALG_LAGUERRE_RECURRENCE:
        p = opalg::laguerre_recurrence(n, a).polys.back();
        break;
      case OPALG_LAGUERRE_OPERATOR: p = opalg::laguerre_operator(n, a); break;
      case OPALG_LAGUERRE_EXPLICIT: p = opalg::laguerre_explicit(n, a); break;
      default: opalg::raise(opalg::ErrorCode::Argument, "unknown Laguerre route");
    }
    *out = new opalg_poly_s{std::move(p)};
  });
}

void opalg_poly_free(opalg_poly poly) { delete poly; }

int opalg_poly_degree(opalg_poly poly) {
  return poly == nullptr ? -1 : poly->poly.degree();
}

opalg_status opalg_poly_to_string(opalg_poly poly, char** out) {
  return guarded([&] {
    require(poly, "poly");
    require(out, "out");
    *out = dup_string(poly->poly.to_string());
  });
}

opalg_status opalg_poly_coeff_string(opalg_poly poly, int k, char** out) {
  return guarded([&] {
    require(poly, "poly");
    require(out, "out");
    *out = dup_string(poly->poly.coeff(k).to_string());
  });
}

opalg_status opalg_poly_eval(opalg_poly poly, double x_re, double x_im,
                             double* out_re, double* out_im) {
  return guarded([&] {
    require(poly, "poly");
    const opalg::ComplexF v = poly->poly.eval(opalg::ComplexF(x_re, x_im));
    if (out_re != nullptr) *out_re = v.real();
    if (out_im != nullptr) *out_im = v.imag();
  });
}

int opalg_poly_equal(opalg_poly a, opalg_poly b) {
  if (a == nullptr || b == nullptr) return 0;
  return a->poly == b->poly ? 1 : 0;
}

opalg_status opalg_bessel_j(int n, double x, opalg_bessel_method method,
                            double* out) {
  return guarded([&] {
    require(out, "out");
    const opalg::bessel::BesselEvalConfig cfg;
    const int order = n < 0 ? -n : n;
    const double sign = (n < 0 && order % 2 == 1) ? -1.0 : 1.0;
    switch (method) {
      case OPALG_BESSEL_SERIES:
        *out = sign * opalg::bessel::j_series(order, x, cfg.series_tol);
        break;
      case OPALG_BESSEL_INTEGRAL:
        *out = opalg::bessel::j_integral(n, x, cfg.quad_nodes);
        break;
      case OPALG_BESSEL_MILLER:
        *out = sign * opalg::bessel::j_miller(order, x, cfg.miller_pad).back();
        break;
      default: opalg::raise(opalg::ErrorCode::Argument, "unknown Bessel method");
    }
  });
}

opalg_status opalg_psi(int n, double x, double* value, double* derivative) {
  return guarded([&] {
    if (value != nullptr) *value = opalg::psi_eval(n, x).real();
    if (derivative != nullptr) *derivative = opalg::psi_derivative(n, x).real();
  });
}

opalg_status opalg_even_hermite(double t, double x, int n_terms,
                                double* partial, double* closed) {
  return guarded([&] {
    if (partial != nullptr) {
      *partial = opalg::even_hermite_partial(t, x, n_terms).real();
    }
    if (closed != nullptr) *closed = opalg::even_hermite_closed(t, x).real();
  });
}

opalg_status opalg_even_hermite_disentangled(double t, double x, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = opalg::disentangle::even_hermite_via_disentangle(t, x);
  });
}

opalg_status opalg_laguerre_genfun(double t, double x, const char* alpha,
                                   int n_terms, double* partial,
                                   double* closed) {
  return guarded([&] {
    require(alpha, "alpha");
    const opalg::Rational a = opalg::Rational::parse(alpha);
    if (partial != nullptr) {
      *partial = opalg::laguerre_genfun_partial(t, x, a, n_terms).real();
    }
    if (closed != nullptr) {
      *closed = opalg::laguerre_genfun_closed(t, x, a).real();
    }
  });
}

opalg_status opalg_disentangle_closed(double t, opalg_factored* out) {
  return guarded([&] {
    require(out, "out");
    set_factored(opalg::disentangle::disentangle_closed(t), out);
  });
}

opalg_status opalg_disentangle_ode(const double coeffs[6], double t, int steps,
                                   opalg_factored* out) {
  return guarded([&] {
    require(coeffs, "coeffs");
    require(out, "out");
    const opalg::disentangle::QuadExponent q{{coeffs[0], coeffs[1]},
                                             {coeffs[2], coeffs[3]},
                                             {coeffs[4], coeffs[5]}};
    set_factored(opalg::disentangle::disentangle_ode(q, t, steps), out);
  });
}

size_t opalg_check_count(void) { return opalg::harness::registry().size(); }

const char* opalg_check_name(size_t index) {
  const auto& reg = opalg::harness::registry();
  return index < reg.size() ? reg[index].name.c_str() : nullptr;
}

opalg_status opalg_verify(const char* filter, const char* config_path,
                          opalg_report* out) {
  return guarded([&] {
    require(out, "out");
    opalg::harness::SuiteConfig cfg;
    if (config_path != nullptr && *config_path != '\0') {
      cfg = opalg::harness::SuiteConfig::load(config_path);
    }
    if (filter != nullptr && *filter != '\0') cfg.filter = filter;
    *out = new opalg_report_s{opalg::harness::run_suite(cfg)};
  });
}

void opalg_report_free(opalg_report report) { delete report; }

int opalg_report_pass_count(opalg_report report) {
  return report == nullptr ? 0 : report->report.counts.pass;
}

int opalg_report_fail_count(opalg_report report) {
  return report == nullptr ? 0 : report->report.counts.fail;
}

opalg_status opalg_report_to_json(opalg_report report, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = dup_string(opalg::harness::report_serialize(report->report));
  });
}

opalg_status opalg_report_to_text(opalg_report report, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    std::ostringstream os;
    os.precision(3);
    for (const auto& c : report->report.checks) {
      os << (c.pass ? "PASS " : "FAIL ") << c.name << "  abs_err=" << c.abs_err
         << " tol=" << c.tolerance << (c.exact ? " (exact)" : "") << "\n";
    }
    os << report->report.counts.pass << " passed, "
       << report->report.counts.fail << " failed\n";
    *out = dup_string(os.str());
  });
}

}  // extern "C"
