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

#include <cfloat>
#include <cmath>
#include <set>
#include <string>

#include <json.hpp>

#include "opalg/harness.hpp"
#include "support.hpp"

using namespace opalg;
using namespace opalg::harness;
using testing::code_of;

TEST_CASE("registry shape") {
  const auto& reg = registry();
  CHECK(reg.size() >= 25);
  std::set<std::string> names;
  for (const CheckInfo& c : reg) {
    CHECK(!c.description.empty());
    names.insert(c.name);
  }
  CHECK(names.size() == reg.size());
}

TEST_CASE("glob filters") {
  CHECK(matches_filter("*", "anything"));
  CHECK(matches_filter("bessel_*", "bessel_addition"));
  CHECK_FALSE(matches_filter("bessel_*", "hermite_addition"));
  CHECK(matches_filter("*_addition", "hermite_addition"));
  CHECK(matches_filter("hermite_?de_residual", "hermite_ode_residual"));
}

TEST_CASE("run_check examples") {
  const auto triple = run_check("hermite_triple_equality", {{"n_max", "25"}});
  CHECK(triple.pass);
  CHECK(triple.exact);
  CHECK(triple.abs_err == 0.0);
  CHECK(triple.tolerance == 0.0);

  const auto even = run_check("even_hermite_sum",
                              {{"t", "0.2"}, {"x", "0"}, {"N", "80"}, {"tol", "1e-9"}});
  CHECK(even.pass);
  CHECK(std::abs(even.lhs - 1.0 / std::sqrt(1.8)) <= 1e-9);

  const auto add = run_check("bessel_addition", {{"n", "0"},
                                                 {"x", "1.1"},
                                                 {"y", "0.7"},
                                                 {"K", "30"},
                                                 {"tol", "1e-12"}});
  CHECK(add.pass);
  CHECK(add.params.at("K") == "30");
}

TEST_CASE("run_check errors name the problem") {
  CHECK(code_of([] { run_check("no_such_check"); }) == ErrorCode::Registry);
  try {
    run_check("even_hermite_sum", {{"bogus", "1"}});
    FAIL("expected argument error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Argument);
    CHECK(std::string(e.what()).find("bogus") != std::string::npos);
  }
  try {
    run_check("even_hermite_sum", {{"N", "eighty"}});
    FAIL("expected argument error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Argument);
    CHECK(std::string(e.what()).find("'N'") != std::string::npos);
  }
}

TEST_CASE("a tightened tolerance fails instead of passing") {
  const auto strict = run_check("even_hermite_sum", {{"N", "10"}});
  CHECK_FALSE(strict.pass);
  CHECK(strict.abs_err > strict.tolerance);
}

TEST_CASE("default suite passes and respects the filter") {
  const Report all = run_suite();
  CHECK(all.all_pass());
  CHECK(all.counts.pass == static_cast<int>(registry().size()));
  for (std::size_t i = 0; i < all.checks.size(); ++i) {
    CHECK(all.checks[i].name == registry()[i].name);
  }

  SuiteConfig cfg;
  cfg.filter = "hermite_*";
  const Report herm = run_suite(cfg);
  CHECK(!herm.checks.empty());
  for (const auto& c : herm.checks) CHECK(c.name.rfind("hermite_", 0) == 0);
  CHECK(herm.config.at("filter") == "hermite_*");
}

TEST_CASE("thread count does not change the report") {
  SuiteConfig one;
  one.threads = 1;
  one.filter = "bessel_*";
  SuiteConfig many = one;
  many.threads = 8;
  Report a = run_suite(one);
  Report b = run_suite(many);
  CHECK(a.checks == b.checks);
  CHECK(a.counts == b.counts);
}

TEST_CASE("computational errors become failed checks") {
  SuiteConfig cfg;
  cfg.filter = "even_hermite_sum";
  cfg.overrides["even_hermite_sum"] = {{"t", "-0.25"}};
  const Report r = run_suite(cfg);
  REQUIRE(r.checks.size() == 1);
  CHECK_FALSE(r.checks[0].pass);
  CHECK(r.checks[0].abs_err == DBL_MAX);
  CHECK(r.counts.fail == 1);
}

TEST_CASE("serialization round trip") {
  SuiteConfig cfg;
  cfg.filter = "weyl_*";
  const Report r = run_suite(cfg);
  const std::string text = report_serialize(r);
  CHECK(report_parse(text) == r);
  CHECK(report_serialize(report_parse(text)) == text);

  const auto doc = nlohmann::json::parse(text);
  for (const char* key : {"checks", "config", "counts", "suite_name", "timestamp"}) {
    CHECK(doc.contains(key));
  }
  CHECK(doc["counts"]["total"] == r.checks.size());
  CHECK(doc["checks"][0]["lhs"].contains("re"));
  // Keys come out sorted.
  CHECK(text.find("\"checks\"") < text.find("\"config\""));
  CHECK(text.find("\"suite_name\"") < text.find("\"timestamp\""));
  CHECK(code_of([] { report_parse("{not json"); }) != std::nullopt);
}

TEST_CASE("config parsing") {
  const auto cfg = SuiteConfig::from_json(R"({
    "suite_name": "mine", "filter": "bessel_*", "threads": 2,
    "bessel": {"quad_nodes": 128},
    "overrides": {"bessel_addition": {"K": 20, "tol": "1e-10"}}
  })");
  CHECK(cfg.suite_name == "mine");
  CHECK(cfg.threads == 2);
  CHECK(cfg.bessel.quad_nodes == 128);
  CHECK(cfg.overrides.at("bessel_addition").at("K") == "20");
  CHECK(cfg.overrides.at("bessel_addition").at("tol") == "1e-10");
  CHECK(code_of([] { SuiteConfig::from_json(R"({"colour": 1})"); }) ==
        ErrorCode::Argument);
  CHECK(code_of([] { SuiteConfig::from_json(R"({"bessel": {"quad_nodes": 7}})"); }) ==
        ErrorCode::Argument);
  CHECK(code_of([] { SuiteConfig::from_json("[1, 2]"); }) == ErrorCode::Argument);
  try {
    SuiteConfig::load("/nonexistent/opalg.json");
    FAIL("expected io error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
    CHECK(std::string(e.what()).find("/nonexistent/opalg.json") != std::string::npos);
  }
  const auto snap = SuiteConfig{}.snapshot();
  CHECK(snap.at("filter") == "*");
  CHECK(snap.at("bessel.quad_nodes") == "64");
  // Thread count must not leak into the report, or reports would differ
  // between machines.
  CHECK(snap.count("threads") == 0);
}
