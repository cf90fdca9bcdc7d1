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

#include "opalg/harness.hpp"

#include <fnmatch.h>

#include <atomic>
#include <charconv>
#include <chrono>
#include <ctime>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "harness_internal.hpp"
#include "opalg/error.hpp"

namespace opalg::harness {

using json = nlohmann::json;

namespace detail {

const std::string& ParamReader::raw(const std::string& key) const {
  auto it = params_.find(key);
  if (it == params_.end()) {
    raise(ErrorCode::Argument, "missing parameter '" + key + "'");
  }
  return it->second;
}

std::vector<std::string> ParamReader::items(const std::string& key) const {
  std::vector<std::string> out;
  std::stringstream ss(raw(key));
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  if (out.empty()) raise(ErrorCode::Argument, "parameter '" + key + "' is empty");
  return out;
}

int ParamReader::integer(const std::string& key) const {
  const std::string& s = raw(key);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    raise(ErrorCode::Argument,
          "parameter '" + key + "': expected an integer, got '" + s + "'");
  }
  return v;
}

double ParamReader::real(const std::string& key) const {
  try {
    return parse_real(raw(key));
  } catch (const Error& e) {
    raise(ErrorCode::Argument, "parameter '" + key + "': " + e.what());
  }
}

std::vector<int> ParamReader::integers(const std::string& key) const {
  std::vector<int> out;
  for (const std::string& s : items(key)) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      raise(ErrorCode::Argument,
            "parameter '" + key + "': expected integers, got '" + s + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<double> ParamReader::reals(const std::string& key) const {
  std::vector<double> out;
  for (const std::string& s : items(key)) {
    try {
      out.push_back(parse_real(s));
    } catch (const Error& e) {
      raise(ErrorCode::Argument, "parameter '" + key + "': " + e.what());
    }
  }
  return out;
}

std::vector<Rational> ParamReader::rationals(const std::string& key) const {
  std::vector<Rational> out;
  for (const std::string& s : items(key)) {
    try {
      out.push_back(Rational::parse(s));
    } catch (const Error& e) {
      raise(ErrorCode::Argument, "parameter '" + key + "': " + e.what());
    }
  }
  return out;
}

Outcome ExactTally::finish() const {
  const auto m = static_cast<double>(mismatches_);
  return {ComplexF(m), ComplexF(0.0), m, 0.0, true};
}

void WorstCase::add(ComplexF lhs, ComplexF rhs, double tolerance) {
  const double err = std::abs(lhs - rhs);
  double ratio = err / tolerance;
  if (!std::isfinite(err)) ratio = std::numeric_limits<double>::infinity();
  if (!any_ || ratio > ratio_ || std::isnan(ratio)) {
    any_ = true;
    ratio_ = std::isnan(ratio) ? std::numeric_limits<double>::infinity() : ratio;
    worst_ = {lhs, rhs, err, tolerance, false};
  }
}

Outcome WorstCase::finish() const {
  if (!any_) return {ComplexF(0.0), ComplexF(0.0), 0.0, 0.0, false};
  return worst_;
}

}  // namespace detail

namespace {

constexpr double kFailedError = std::numeric_limits<double>::max();

double sanitize(double v) {
  if (std::isnan(v)) return kFailedError;
  if (std::isinf(v)) return v > 0 ? kFailedError : -kFailedError;
  return v;
}

ComplexF sanitize(ComplexF z) { return {sanitize(z.real()), sanitize(z.imag())}; }

std::string shortest(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

const detail::Registered& find_check(const std::string& name) {
  for (const auto& r : detail::registered_checks()) {
    if (r.info.name == name) return r;
  }
  raise(ErrorCode::Registry, "unknown identity check '" + name + "'");
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

IdentityCheck failed_check(const std::string& name, Params params) {
  IdentityCheck c;
  c.name = name;
  c.params = std::move(params);
  c.abs_err = kFailedError;
  return c;
}

json complex_json(ComplexF z) { return {{"re", z.real()}, {"im", z.imag()}}; }

ComplexF complex_from(const json& j) {
  return {j.at("re").get<double>(), j.at("im").get<double>()};
}

}  // namespace

const std::vector<CheckInfo>& registry() {
  static const std::vector<CheckInfo> kInfos = [] {
    std::vector<CheckInfo> v;
    for (const auto& r : detail::registered_checks()) v.push_back(r.info);
    return v;
  }();
  return kInfos;
}

bool matches_filter(const std::string& pattern, const std::string& name) {
  return fnmatch(pattern.c_str(), name.c_str(), 0) == 0;
}

IdentityCheck run_check(const std::string& name, const Params& params,
                        const bessel::BesselEvalConfig& bessel_cfg) {
  const detail::Registered& reg = find_check(name);
  bessel_cfg.validate();
  Params merged = reg.info.defaults;
  for (const auto& [key, value] : params) {
    if (!merged.contains(key)) {
      raise(ErrorCode::Argument,
            "unknown parameter '" + key + "' for check '" + name + "'");
    }
    merged[key] = value;
  }
  const detail::ParamReader reader(merged);
  const detail::Outcome out = reg.fn(reader, bessel_cfg);

  IdentityCheck check;
  check.name = name;
  check.params = std::move(merged);
  check.lhs = sanitize(out.lhs);
  check.rhs = sanitize(out.rhs);
  check.abs_err = sanitize(out.abs_err);
  check.tolerance = out.tolerance;
  check.exact = out.exact;
  check.pass = out.exact ? check.abs_err == 0.0
                         : (std::isfinite(out.abs_err) &&
                            check.abs_err <= check.tolerance);
  return check;
}

Report run_suite(const SuiteConfig& config) {
  config.bessel.validate();
  for (const auto& [name, p] : config.overrides) find_check(name);

  std::vector<const CheckInfo*> selected;
  for (const CheckInfo& info : registry()) {
    if (matches_filter(config.filter, info.name)) selected.push_back(&info);
  }

  std::vector<IdentityCheck> results(selected.size());
  std::vector<std::exception_ptr> config_errors(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      const std::string& name = selected[i]->name;
      Params params;
      if (auto it = config.overrides.find(name); it != config.overrides.end()) {
        params = it->second;
      }
      try {
        results[i] = run_check(name, params, config.bessel);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::Argument || e.code() == ErrorCode::Registry) {
          config_errors[i] = std::current_exception();
        } else {
          Params merged = selected[i]->defaults;
          for (const auto& [k, v] : params) merged[k] = v;
          results[i] = failed_check(name, std::move(merged));
        }
      }
    }
  };

  std::size_t threads = config.threads > 0
                            ? static_cast<std::size_t>(config.threads)
                            : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(1, selected.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& err : config_errors) {
    if (err) std::rethrow_exception(err);
  }

  Report report;
  report.suite_name = config.suite_name;
  report.timestamp = utc_timestamp();
  report.config = config.snapshot();
  report.checks = std::move(results);
  for (const auto& c : report.checks) (c.pass ? report.counts.pass : report.counts.fail)++;
  return report;
}

std::map<std::string, std::string> SuiteConfig::snapshot() const {
  std::map<std::string, std::string> s{
      {"filter", filter},
      {"bessel.series_tol", shortest(bessel.series_tol)},
      {"bessel.quad_nodes", std::to_string(bessel.quad_nodes)},
      {"bessel.miller_pad", std::to_string(bessel.miller_pad)},
      {"bessel.addition_terms", std::to_string(bessel.addition_terms)},
      {"bessel.jacobi_anger_terms", std::to_string(bessel.jacobi_anger_terms)},
      {"bessel.translation_terms", std::to_string(bessel.translation_terms)},
  };
  for (const auto& [check, params] : overrides) {
    for (const auto& [k, v] : params) s["override." + check + "." + k] = v;
  }
  return s;
}

SuiteConfig SuiteConfig::from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    raise(ErrorCode::Argument, std::string("malformed config: ") + e.what());
  }
  if (!doc.is_object()) raise(ErrorCode::Argument, "config must be a JSON object");

  auto as_string = [](const json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
  SuiteConfig cfg;
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "suite_name") {
        cfg.suite_name = value.get<std::string>();
      } else if (key == "filter") {
        cfg.filter = value.get<std::string>();
      } else if (key == "threads") {
        cfg.threads = value.get<int>();
      } else if (key == "bessel") {
        for (const auto& [bk, bv] : value.items()) {
          if (bk == "series_tol") cfg.bessel.series_tol = bv.get<double>();
          else if (bk == "quad_nodes") cfg.bessel.quad_nodes = bv.get<int>();
          else if (bk == "miller_pad") cfg.bessel.miller_pad = bv.get<int>();
          else if (bk == "addition_terms") cfg.bessel.addition_terms = bv.get<int>();
          else if (bk == "jacobi_anger_terms") cfg.bessel.jacobi_anger_terms = bv.get<int>();
          else if (bk == "translation_terms") cfg.bessel.translation_terms = bv.get<int>();
          else raise(ErrorCode::Argument, "unknown config key 'bessel." + bk + "'");
        }
      } else if (key == "overrides") {
        for (const auto& [check, params] : value.items()) {
          for (const auto& [pk, pv] : params.items()) {
            cfg.overrides[check][pk] = as_string(pv);
          }
        }
      } else {
        raise(ErrorCode::Argument, "unknown config key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    raise(ErrorCode::Argument, std::string("malformed config: ") + e.what());
  }
  cfg.bessel.validate();
  return cfg;
}

SuiteConfig SuiteConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::Io, "cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  if (in.bad()) raise(ErrorCode::Io, "error reading config file '" + path + "'");
  return from_json(ss.str());
}

std::string report_serialize(const Report& report) {
  json checks = json::array();
  for (const IdentityCheck& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"params", c.params},
                      {"lhs", complex_json(c.lhs)},
                      {"rhs", complex_json(c.rhs)},
                      {"abs_err", c.abs_err},
                      {"tolerance", c.tolerance},
                      {"exact", c.exact},
                      {"pass", c.pass}});
  }
  const json doc = {
      {"suite_name", report.suite_name},
      {"timestamp", report.timestamp},
      {"checks", checks},
      {"counts",
       {{"pass", report.counts.pass},
        {"fail", report.counts.fail},
        {"total", report.counts.pass + report.counts.fail}}},
      {"config", report.config},
  };
  return doc.dump(2) + "\n";
}

Report report_parse(std::string_view text) {
  try {
    const json doc = json::parse(text);
    Report r;
    r.suite_name = doc.at("suite_name").get<std::string>();
    r.timestamp = doc.at("timestamp").get<std::string>();
    r.config = doc.at("config").get<std::map<std::string, std::string>>();
    r.counts.pass = doc.at("counts").at("pass").get<int>();
    r.counts.fail = doc.at("counts").at("fail").get<int>();
    for (const json& c : doc.at("checks")) {
      IdentityCheck ic;
      ic.name = c.at("name").get<std::string>();
      ic.params = c.at("params").get<Params>();
      ic.lhs = complex_from(c.at("lhs"));
      ic.rhs = complex_from(c.at("rhs"));
      ic.abs_err = c.at("abs_err").get<double>();
      ic.tolerance = c.at("tolerance").get<double>();
      ic.exact = c.at("exact").get<bool>();
      ic.pass = c.at("pass").get<bool>();
      r.checks.push_back(std::move(ic));
    }
    return r;
  } catch (const json::exception& e) {
    raise(ErrorCode::Argument, std::string("malformed report: ") + e.what());
  }
}

}  // namespace opalg::harness
