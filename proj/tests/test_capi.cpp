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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "opalg/opalg.h"

namespace {

std::string take(char* s) {
  std::string out(s);
  opalg_string_free(s);
  return out;
}

std::string poly_text(opalg_poly p) {
  char* s = nullptr;
  REQUIRE(opalg_poly_to_string(p, &s) == OPALG_OK);
  return take(s);
}

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(opalg_version()) == "0.1.0");
  CHECK(std::string(opalg_status_name(OPALG_OK)) == "ok");
  CHECK(std::string(opalg_status_name(OPALG_ERR_DOMAIN)) == "domain_error");
  CHECK(std::string(opalg_status_name(OPALG_ERR_IO)) == "io_error");
}

TEST_CASE("Hermite handles") {
  opalg_poly a = nullptr;
  opalg_poly b = nullptr;
  opalg_poly c = nullptr;
  REQUIRE(opalg_hermite(6, OPALG_HERMITE_RECURRENCE, &a) == OPALG_OK);
  REQUIRE(opalg_hermite(6, OPALG_HERMITE_RODRIGUES, &b) == OPALG_OK);
  REQUIRE(opalg_hermite(6, OPALG_HERMITE_OPERATOR, &c) == OPALG_OK);
  CHECK(opalg_poly_equal(a, b) == 1);
  CHECK(opalg_poly_equal(a, c) == 1);
  CHECK(opalg_poly_degree(a) == 6);
  CHECK(poly_text(a) == "64*x^6 - 480*x^4 + 720*x^2 - 120");
  char* coeff = nullptr;
  REQUIRE(opalg_poly_coeff_string(a, 4, &coeff) == OPALG_OK);
  CHECK(take(coeff) == "-480");
  double re = 0.0, im = 0.0;
  REQUIRE(opalg_poly_eval(a, 1.0, 0.0, &re, &im) == OPALG_OK);
  CHECK(re == doctest::Approx(64 - 480 + 720 - 120));
  CHECK(im == 0.0);
  opalg_poly_free(a);
  opalg_poly_free(b);
  opalg_poly_free(c);
  opalg_poly_free(nullptr);
}

TEST_CASE("Laguerre handles") {
  opalg_poly p = nullptr;
  REQUIRE(opalg_laguerre(1, "1/2", OPALG_LAGUERRE_OPERATOR, &p) == OPALG_OK);
  CHECK(poly_text(p) == "-x + 3/2");
  opalg_poly_free(p);
  CHECK(opalg_laguerre(2, "half", OPALG_LAGUERRE_EXPLICIT, &p) == OPALG_ERR_ARGUMENT);
  CHECK(std::string(opalg_last_error()).find("half") != std::string::npos);
}

TEST_CASE("argument errors") {
  opalg_poly p = nullptr;
  CHECK(opalg_hermite(-1, OPALG_HERMITE_RECURRENCE, &p) == OPALG_ERR_ARGUMENT);
  CHECK(opalg_hermite(2, OPALG_HERMITE_RECURRENCE, nullptr) == OPALG_ERR_ARGUMENT);
  CHECK(opalg_hermite(2, static_cast<opalg_hermite_route>(9), &p) == OPALG_ERR_ARGUMENT);
  CHECK(std::string(opalg_last_error()).find("route") != std::string::npos);
  CHECK(opalg_poly_to_string(nullptr, nullptr) == OPALG_ERR_ARGUMENT);
  CHECK(opalg_poly_degree(nullptr) == -1);
  double v = 0.0;
  CHECK(opalg_parse_real("2/8", &v) == OPALG_OK);
  CHECK(v == 0.25);
  CHECK(std::string(opalg_last_error()).empty());
  CHECK(opalg_parse_real("nope", &v) == OPALG_ERR_ARGUMENT);
}

TEST_CASE("numeric entry points") {
  double v = -1.0;
  REQUIRE(opalg_bessel_j(0, 0.0, OPALG_BESSEL_SERIES, &v) == OPALG_OK);
  CHECK(v == 1.0);
  double s = 0.0, i = 0.0, m = 0.0;
  REQUIRE(opalg_bessel_j(-3, 2.5, OPALG_BESSEL_SERIES, &s) == OPALG_OK);
  REQUIRE(opalg_bessel_j(-3, 2.5, OPALG_BESSEL_INTEGRAL, &i) == OPALG_OK);
  REQUIRE(opalg_bessel_j(-3, 2.5, OPALG_BESSEL_MILLER, &m) == OPALG_OK);
  CHECK(s < 0.0);
  CHECK(std::abs(s - i) < 1e-13);
  CHECK(std::abs(s - m) < 1e-13);
  CHECK(opalg_bessel_j(0, INFINITY, OPALG_BESSEL_SERIES, &v) == OPALG_ERR_DOMAIN);

  double psi = 0.0, dpsi = 1.0;
  REQUIRE(opalg_psi(0, 0.0, &psi, &dpsi) == OPALG_OK);
  CHECK(psi == doctest::Approx(0.7511255444649425).epsilon(1e-14));
  CHECK(dpsi == 0.0);

  double partial = 0.0, closed = 0.0, via = 0.0;
  REQUIRE(opalg_even_hermite(0.2, 0.0, 80, &partial, &closed) == OPALG_OK);
  REQUIRE(opalg_even_hermite_disentangled(0.2, 0.0, &via) == OPALG_OK);
  CHECK(closed == doctest::Approx(0.7453559924999299).epsilon(1e-14));
  CHECK(std::abs(partial - closed) < 1e-9);
  CHECK(std::abs(via - closed) < 1e-12);
  CHECK(opalg_even_hermite(-0.25, 0.0, 10, &partial, &closed) == OPALG_ERR_SINGULARITY);

  REQUIRE(opalg_laguerre_genfun(0.3, 0.0, "2", 60, &partial, &closed) == OPALG_OK);
  CHECK(std::abs(closed - std::pow(0.7, -3.0)) < 1e-12);
  CHECK(opalg_laguerre_genfun(1.5, 0.0, "0", 60, &partial, &closed) == OPALG_ERR_DOMAIN);
}

TEST_CASE("disentangling entry points") {
  opalg_factored f{};
  REQUIRE(opalg_disentangle_closed(0.25, &f) == OPALG_OK);
  CHECK(f.f_re == doctest::Approx(0.5));
  CHECK(f.g_im == doctest::Approx(-0.5 * std::log(2.0)));
  CHECK(f.h_re == doctest::Approx(-0.125));
  CHECK(f.t == 0.25);
  const double q[6] = {4, 0, 0, -2, -1, 0};
  opalg_factored g{};
  REQUIRE(opalg_disentangle_ode(q, 0.25, 10000, &g) == OPALG_OK);
  CHECK(std::abs(g.f_re - f.f_re) < 1e-10);
  CHECK(std::abs(g.g_im - f.g_im) < 1e-10);
  CHECK(opalg_disentangle_closed(-1.0, &f) == OPALG_ERR_SINGULARITY);
  const double blow[6] = {1, 0, 0, 0, -1, 0};
  CHECK(opalg_disentangle_ode(blow, 1.0, 1000, &g) == OPALG_ERR_BLOWUP);
}

TEST_CASE("verification through the C API") {
  REQUIRE(opalg_check_count() >= 25);
  CHECK(std::string(opalg_check_name(0)) == "algebra_ring_laws");
  CHECK(opalg_check_name(opalg_check_count()) == nullptr);

  opalg_report r = nullptr;
  REQUIRE(opalg_verify("laguerre_*", nullptr, &r) == OPALG_OK);
  CHECK(opalg_report_pass_count(r) == 3);
  CHECK(opalg_report_fail_count(r) == 0);
  char* json = nullptr;
  REQUIRE(opalg_report_to_json(r, &json) == OPALG_OK);
  const auto doc = nlohmann::json::parse(take(json));
  CHECK(doc["counts"]["total"] == 3);
  char* text = nullptr;
  REQUIRE(opalg_report_to_text(r, &text) == OPALG_OK);
  CHECK(take(text).find("PASS laguerre_triple_equality") != std::string::npos);
  opalg_report_free(r);

  CHECK(opalg_verify(nullptr, "/nonexistent/config.json", &r) == OPALG_ERR_IO);
  CHECK(std::string(opalg_last_error()).find("/nonexistent/config.json") !=
        std::string::npos);
}

TEST_CASE("verification honours a config file") {
  const std::string path = "capi_test_config.json";
  {
    std::FILE* f = std::fopen(path.c_str(), "w");
    REQUIRE(f != nullptr);
    std::fputs(R"({"filter": "bessel_parity", "overrides": {"bessel_parity": {"n_max": "3"}}})", f);
    std::fclose(f);
  }
  opalg_report r = nullptr;
  REQUIRE(opalg_verify(nullptr, path.c_str(), &r) == OPALG_OK);
  CHECK(opalg_report_pass_count(r) == 1);
  char* json = nullptr;
  REQUIRE(opalg_report_to_json(r, &json) == OPALG_OK);
  const auto doc = nlohmann::json::parse(take(json));
  CHECK(doc["checks"][0]["params"]["n_max"] == "3");
  opalg_report_free(r);
  std::remove(path.c_str());
}
