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

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "opalg/opalg.h"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Raised for a non-OK status from the library.
struct ApiFailure {
  opalg_status status;
  std::string message;
};

void check(opalg_status status) {
  if (status != OPALG_OK) throw ApiFailure{status, opalg_last_error()};
}

std::string take(char* s) {
  std::string out(s);
  opalg_string_free(s);
  return out;
}

std::string fmt(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fmt_complex(double re, double im) {
  if (im == 0.0) return fmt(re == 0.0 ? 0.0 : re);
  if (re == 0.0) return (std::signbit(im) ? "-" : "") + fmt(std::abs(im)) + "*i";
  return fmt(re) + (std::signbit(im) ? " - " : " + ") + fmt(std::abs(im)) +
         "*i";
}

double real_arg(const std::string& name, const std::string& text) {
  double v = 0.0;
  if (opalg_parse_real(text.c_str(), &v) != OPALG_OK) {
    throw CLI::ValidationError("--" + name, opalg_last_error());
  }
  return v;
}

// "re" or "re,im".
std::pair<double, double> complex_arg(const std::string& name,
                                      const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {real_arg(name, text), 0.0};
  return {real_arg(name, text.substr(0, comma)),
          real_arg(name, text.substr(comma + 1))};
}

class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ApiFailure{OPALG_ERR_IO, "cannot open '" + path + "'"};
    }
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct Options {
  std::string output = "text";
  std::string out_path;
  int n = 0;
  int n_max = 10;
  int terms = 80;
  int steps = 10000;
  std::string alpha = "0";
  std::string x = "0";
  std::string t = "0";
  std::string route;
  std::string method = "series";
  std::string filter;
  std::string config;
  std::string format = "csv";
  std::string report_output = "json";
  std::optional<std::string> q_alpha, q_beta, q_gamma;
};

void emit_poly(const Options& o, opalg_poly poly, const json& meta) {
  Sink sink(o.out_path);
  const std::string text = take([&] {
    char* s = nullptr;
    check(opalg_poly_to_string(poly, &s));
    return s;
  }());
  if (o.output == "text") {
    sink.out() << text << "\n";
    return;
  }
  json coeffs = json::object();
  for (int k = opalg_poly_degree(poly); k >= 0; --k) {
    char* s = nullptr;
    check(opalg_poly_coeff_string(poly, k, &s));
    std::string c = take(s);
    if (c != "0") coeffs[std::to_string(k)] = c;
  }
  if (o.output == "json") {
    json j = meta;
    j["polynomial"] = text;
    j["degree"] = opalg_poly_degree(poly);
    j["coefficients"] = coeffs;
    sink.out() << j.dump(2) << "\n";
  } else {
    sink.out() << "k,coefficient\n";
    for (auto& [k, c] : coeffs.items()) {
      sink.out() << k << "," << c.get<std::string>() << "\n";
    }
  }
}

void emit_values(const Options& o, const json& values) {
  Sink sink(o.out_path);
  if (o.output == "json") {
    sink.out() << values.dump(2) << "\n";
  } else if (o.output == "csv") {
    std::string header, row;
    for (auto& [k, v] : values.items()) {
      header += (header.empty() ? "" : ",") + k;
      row += (row.empty() ? "" : ",") +
             (v.is_string() ? v.get<std::string>() : v.dump());
    }
    sink.out() << header << "\n" << row << "\n";
  } else {
    for (auto& [k, v] : values.items()) {
      const std::string text = v.is_string() ? v.get<std::string>() : v.dump();
      if (values.size() == 1) {
        sink.out() << text << "\n";
      } else {
        sink.out() << k << " = " << text << "\n";
      }
    }
  }
}

json number(double v) { return json::parse(fmt(v)); }

int cmd_hermite(const Options& o) {
  opalg_hermite_route route = OPALG_HERMITE_RECURRENCE;
  if (o.route == "rodrigues") route = OPALG_HERMITE_RODRIGUES;
  if (o.route == "operator") route = OPALG_HERMITE_OPERATOR;
  opalg_poly p = nullptr;
  check(opalg_hermite(o.n, route, &p));
  try {
    emit_poly(o, p, {{"family", "hermite"}, {"n", o.n}});
  } catch (...) {
    opalg_poly_free(p);
    throw;
  }
  opalg_poly_free(p);
  return kExitOk;
}

int cmd_laguerre(const Options& o) {
  opalg_laguerre_route route = OPALG_LAGUERRE_RECURRENCE;
  if (o.route == "operator") route = OPALG_LAGUERRE_OPERATOR;
  if (o.route == "explicit") route = OPALG_LAGUERRE_EXPLICIT;
  opalg_poly p = nullptr;
  check(opalg_laguerre(o.n, o.alpha.c_str(), route, &p));
  try {
    emit_poly(o, p, {{"family", "laguerre"}, {"n", o.n}, {"alpha", o.alpha}});
  } catch (...) {
    opalg_poly_free(p);
    throw;
  }
  opalg_poly_free(p);
  return kExitOk;
}

int cmd_bessel(const Options& o) {
  opalg_bessel_method m = OPALG_BESSEL_SERIES;
  if (o.method == "integral") m = OPALG_BESSEL_INTEGRAL;
  if (o.method == "miller") m = OPALG_BESSEL_MILLER;
  double v = 0.0;
  check(opalg_bessel_j(o.n, real_arg("x", o.x), m, &v));
  if (o.output == "text") {
    emit_values(o, {{"value", fmt(v)}});
  } else {
    emit_values(o, {{"n", o.n}, {"x", number(real_arg("x", o.x))},
                    {"method", o.method}, {"value", number(v)}});
  }
  return kExitOk;
}

int cmd_psi(const Options& o) {
  const double x = real_arg("x", o.x);
  double v = 0.0, d = 0.0;
  check(opalg_psi(o.n, x, &v, &d));
  emit_values(o, {{"n", o.n}, {"x", number(x)}, {"value", number(v)},
                  {"derivative", number(d)}});
  return kExitOk;
}

int cmd_even_hermite(const Options& o) {
  const double t = real_arg("t", o.t);
  const double x = real_arg("x", o.x);
  double partial = 0.0, closed = 0.0;
  check(opalg_even_hermite(t, x, o.terms, &partial, &closed));
  emit_values(o, {{"t", number(t)}, {"x", number(x)}, {"N", o.terms},
                  {"partial", number(partial)}, {"closed", number(closed)}});
  return kExitOk;
}

json factored_json(const opalg_factored& f) {
  return {{"t", number(f.t)},
          {"f", fmt_complex(f.f_re, f.f_im)},
          {"g", fmt_complex(f.g_re, f.g_im)},
          {"h", fmt_complex(f.h_re, f.h_im)}};
}

int cmd_disentangle(const Options& o) {
  const double t = real_arg("t", o.t);
  opalg_factored f{};
  if (!o.q_alpha && !o.q_beta && !o.q_gamma) {
    check(opalg_disentangle_closed(t, &f));
    json j = factored_json(f);
    j["method"] = "closed";
    emit_values(o, j);
    return kExitOk;
  }
  // Unspecified coefficients default to the even-Hermite exponent.
  const auto a = complex_arg("alpha", o.q_alpha.value_or("4"));
  const auto b = complex_arg("beta", o.q_beta.value_or("0,-2"));
  const auto c = complex_arg("gamma", o.q_gamma.value_or("-1"));
  const double coeffs[6] = {a.first, a.second, b.first,
                            b.second, c.first, c.second};
  check(opalg_disentangle_ode(coeffs, t, o.steps, &f));
  json j = factored_json(f);
  j["method"] = "ode";
  emit_values(o, j);
  return kExitOk;
}

int cmd_verify(const Options& o) {
  std::string config = o.config;
  if (config.empty()) {
    if (const char* env = std::getenv("OPALG_CONFIG")) config = env;
  }
  opalg_report report = nullptr;
  check(opalg_verify(o.filter.empty() ? nullptr : o.filter.c_str(),
                     config.empty() ? nullptr : config.c_str(), &report));
  const int fails = opalg_report_fail_count(report);
  char* s = nullptr;
  const bool text = o.report_output == "text";
  const opalg_status st = text
                              ? opalg_report_to_text(report, &s)
                              : opalg_report_to_json(report, &s);
  opalg_report_free(report);
  check(st);
  Sink sink(o.out_path);
  sink.out() << take(s);
  if (!text) sink.out() << "\n";
  return fails == 0 ? kExitOk : kExitFail;
}

int cmd_table(const Options& o) {
  if (o.n_max < 0) throw CLI::ValidationError("--n-max", "must be >= 0");
  Sink sink(o.out_path);
  if (o.format == "csv") sink.out() << "n,k,coefficient\n";
  json rows = json::array();
  for (int n = 0; n <= o.n_max; ++n) {
    opalg_poly p = nullptr;
    check(opalg_hermite(n, OPALG_HERMITE_RECURRENCE, &p));
    for (int k = n; k >= 0; --k) {
      char* s = nullptr;
      const opalg_status st = opalg_poly_coeff_string(p, k, &s);
      if (st != OPALG_OK) opalg_poly_free(p);
      check(st);
      const std::string c = take(s);
      if (c == "0") continue;
      if (o.format == "csv") {
        sink.out() << n << "," << k << "," << c << "\n";
      } else {
        rows.push_back({{"n", n}, {"k", k}, {"coefficient", c}});
      }
    }
    opalg_poly_free(p);
  }
  if (o.format == "json") sink.out() << rows.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact operator-algebra evaluation and identity verification",
               "opalg"};
  app.require_subcommand(1);
  app.set_version_flag("--version", opalg_version());
  Options o;
  int (*handler)(const Options&) = nullptr;

  auto output_opts = [&](CLI::App* cmd) {
    cmd->add_option("--output", o.output, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", o.out_path, "Write output to FILE")
        ->type_name("FILE");
  };

  auto* eval = app.add_subcommand("eval", "Evaluate a single quantity");
  eval->require_subcommand(1);

  auto* herm = eval->add_subcommand("hermite", "Exact Hermite polynomial H_n");
  herm->add_option("--n", o.n, "Degree")->required()->check(CLI::NonNegativeNumber);
  herm->add_option("--route", o.route, "recurrence, rodrigues or operator")
      ->check(CLI::IsMember({"recurrence", "rodrigues", "operator"}));
  output_opts(herm);
  herm->callback([&] { handler = cmd_hermite; });

  auto* lag = eval->add_subcommand("laguerre", "Exact Laguerre polynomial L_n^alpha");
  lag->add_option("--n", o.n, "Degree")->required()->check(CLI::NonNegativeNumber);
  lag->add_option("--alpha", o.alpha, "Order, decimal or p/q")->capture_default_str();
  lag->add_option("--route", o.route, "recurrence, operator or explicit")
      ->check(CLI::IsMember({"recurrence", "operator", "explicit"}));
  output_opts(lag);
  lag->callback([&] { handler = cmd_laguerre; });

  auto* bes = eval->add_subcommand("bessel", "Bessel function J_n(x)");
  bes->add_option("--n", o.n, "Integer order")->required();
  bes->add_option("--x", o.x, "Argument")->required();
  bes->add_option("--method", o.method, "series, integral or miller")
      ->check(CLI::IsMember({"series", "integral", "miller"}))
      ->capture_default_str();
  output_opts(bes);
  bes->callback([&] { handler = cmd_bessel; });

  auto* psi = eval->add_subcommand("psi", "Normalized oscillator function psi_n(x)");
  psi->add_option("--n", o.n, "Index")->required()->check(CLI::NonNegativeNumber);
  psi->add_option("--x", o.x, "Argument")->required();
  output_opts(psi);
  psi->callback([&] { handler = cmd_psi; });

  auto* sum = app.add_subcommand("sum", "Generating-function sums");
  sum->require_subcommand(1);
  auto* even = sum->add_subcommand("even-hermite",
                                   "Truncated even-Hermite sum vs closed form");
  even->add_option("--t", o.t, "Parameter")->required();
  even->add_option("--x", o.x, "Argument")->required();
  even->add_option("--N", o.terms, "Number of terms")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  output_opts(even);
  even->callback([&] { handler = cmd_even_hermite; });

  auto* dis = app.add_subcommand(
      "disentangle",
      "Factor exp(t(alpha x^2 + beta (xp+px) + gamma p^2)); closed form when "
      "no coefficients are given, RK4 otherwise (complex values as re,im)");
  dis->add_option("--t", o.t, "Parameter")->required();
  dis->add_option("--alpha", o.q_alpha, "x^2 coefficient (default 4)");
  dis->add_option("--beta", o.q_beta, "xp+px coefficient (default 0,-2)");
  dis->add_option("--gamma", o.q_gamma, "p^2 coefficient (default -1)");
  dis->add_option("--steps", o.steps, "RK4 steps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  output_opts(dis);
  dis->callback([&] { handler = cmd_disentangle; });

  auto* ver = app.add_subcommand("verify", "Run the identity-check suite");
  ver->add_option("--filter", o.filter, "Glob over check names");
  ver->add_option("--config", o.config,
                  "Suite config JSON (default: $OPALG_CONFIG)")
      ->type_name("FILE");
  ver->add_option("--output", o.report_output, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  ver->add_option("--out", o.out_path, "Write report to FILE")->type_name("FILE");
  ver->callback([&] { handler = cmd_verify; });

  auto* table = app.add_subcommand("table", "Coefficient tables");
  table->require_subcommand(1);
  auto* htab = table->add_subcommand("hermite", "Hermite coefficients for n <= n-max");
  htab->add_option("--n-max", o.n_max, "Largest degree")->required();
  htab->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  htab->add_option("--out", o.out_path, "Write table to FILE")->type_name("FILE");
  htab->callback([&] { handler = cmd_table; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return handler(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ApiFailure& e) {
    std::cerr << "error: " << opalg_status_name(e.status) << ": " << e.message
              << "\n";
    return e.status == OPALG_ERR_ARGUMENT ? kExitUsage : kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
