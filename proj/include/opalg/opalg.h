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

/* C interface to the opalg operator-algebra and special-function library.
 *
 * Every function returns an opalg_status; on failure a human-readable
 * message for the calling thread is available from opalg_last_error().
 * Handles are opaque and must be released with the matching _free call.
 * Strings returned through char** out-parameters are owned by the caller
 * and released with opalg_string_free().
 */
#ifndef OPALG_OPALG_H
#define OPALG_OPALG_H

#include <stddef.h>

#if defined(_WIN32)
#define OPALG_API __declspec(dllexport)
#else
#define OPALG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum opalg_status {
  OPALG_OK = 0,
  OPALG_ERR_ARGUMENT = 1,
  OPALG_ERR_DOMAIN = 2,
  OPALG_ERR_SINGULARITY = 3,
  OPALG_ERR_NONCONVERGENCE = 4,
  OPALG_ERR_NOT_APPLICABLE = 5,
  OPALG_ERR_ACCURACY = 6,
  OPALG_ERR_BLOWUP = 7,
  OPALG_ERR_REGISTRY = 8,
  OPALG_ERR_INTERNAL = 9,
  OPALG_ERR_IO = 10
} opalg_status;

typedef enum opalg_hermite_route {
  OPALG_HERMITE_RECURRENCE = 0,
  OPALG_HERMITE_RODRIGUES = 1,
  OPALG_HERMITE_OPERATOR = 2
} opalg_hermite_route;

typedef enum opalg_laguerre_route {
  OPALG_LAGUERRE_RECURRENCE = 0,
  OPALG_LAGUERRE_OPERATOR = 1,
  OPALG_LAGUERRE_EXPLICIT = 2
} opalg_laguerre_route;

typedef enum opalg_bessel_method {
  OPALG_BESSEL_SERIES = 0,
  OPALG_BESSEL_INTEGRAL = 1,
  OPALG_BESSEL_MILLER = 2
} opalg_bessel_method;

typedef struct opalg_poly_s* opalg_poly;
typedef struct opalg_report_s* opalg_report;

/* (f, g, h) of exp(f x^2) exp(g (xp+px)) exp(h p^2) at parameter t. */
typedef struct opalg_factored {
  double f_re, f_im;
  double g_re, g_im;
  double h_re, h_im;
  double t;
} opalg_factored;

OPALG_API const char* opalg_version(void);
OPALG_API const char* opalg_status_name(opalg_status status);
/* Message of the last failed call on this thread; "" if none. */
OPALG_API const char* opalg_last_error(void);
OPALG_API void opalg_string_free(char* s);

/* Decimal literal or exact "p/q". */
OPALG_API opalg_status opalg_parse_real(const char* text, double* out);

/* ------------------------------------------------------- polynomials */

OPALG_API opalg_status opalg_hermite(int n, opalg_hermite_route route,
                                     opalg_poly* out);
/* alpha is a rational literal such as "3/2" or "0.5". */
OPALG_API opalg_status opalg_laguerre(int n, const char* alpha,
                                      opalg_laguerre_route route,
                                      opalg_poly* out);
OPALG_API void opalg_poly_free(opalg_poly poly);
OPALG_API int opalg_poly_degree(opalg_poly poly);
/* Canonical text such as "4*x^2 - 2". */
OPALG_API opalg_status opalg_poly_to_string(opalg_poly poly, char** out);
/* Exact coefficient of x^k as text, "0" if absent. */
OPALG_API opalg_status opalg_poly_coeff_string(opalg_poly poly, int k,
                                               char** out);
OPALG_API opalg_status opalg_poly_eval(opalg_poly poly, double x_re,
                                       double x_im, double* out_re,
                                       double* out_im);
OPALG_API int opalg_poly_equal(opalg_poly a, opalg_poly b);

/* ---------------------------------------------------- numeric values */

OPALG_API opalg_status opalg_bessel_j(int n, double x,
                                      opalg_bessel_method method,
                                      double* out);
OPALG_API opalg_status opalg_psi(int n, double x, double* value,
                                 double* derivative);
/* Partial sum with n_terms terms and the closed form of
 * sum t^n/n! H_2n(x); either output pointer may be NULL. */
OPALG_API opalg_status opalg_even_hermite(double t, double x, int n_terms,
                                          double* partial, double* closed);
OPALG_API opalg_status opalg_even_hermite_disentangled(double t, double x,
                                                       double* out);
OPALG_API opalg_status opalg_laguerre_genfun(double t, double x,
                                             const char* alpha, int n_terms,
                                             double* partial, double* closed);

/* Closed-form factors of the even-Hermite exponent. */
OPALG_API opalg_status opalg_disentangle_closed(double t, opalg_factored* out);
/* RK4 factors for exponent a x^2 + b (xp+px) + c p^2 given as
 * {a_re, a_im, b_re, b_im, c_re, c_im}. */
OPALG_API opalg_status opalg_disentangle_ode(const double coeffs[6], double t,
                                             int steps, opalg_factored* out);

/* ------------------------------------------------------ verification */

OPALG_API size_t opalg_check_count(void);
OPALG_API const char* opalg_check_name(size_t index);

/* Runs all registered checks matching `filter` (NULL = "*"). config_path
 * (may be NULL) names a JSON suite configuration file. */
OPALG_API opalg_status opalg_verify(const char* filter,
                                    const char* config_path,
                                    opalg_report* out);
OPALG_API void opalg_report_free(opalg_report report);
OPALG_API int opalg_report_pass_count(opalg_report report);
OPALG_API int opalg_report_fail_count(opalg_report report);
OPALG_API opalg_status opalg_report_to_json(opalg_report report, char** out);
/* One line per check: "PASS name abs_err=... tol=...". */
OPALG_API opalg_status opalg_report_to_text(opalg_report report, char** out);

#ifdef __cplusplus
}
#endif

#endif /* OPALG_OPALG_H */
