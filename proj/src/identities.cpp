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

// Registered identity checks. Each one reads its parameters, evaluates both
// sides of an identity and reports an Outcome; the runner in harness.cpp
// turns that into an IdentityCheck.

#include <cmath>
#include <numbers>
#include <random>
#include <variant>

#include "harness_internal.hpp"
#include "opalg/bessel.hpp"
#include "opalg/disentangle.hpp"
#include "opalg/error.hpp"
#include "opalg/polyfam.hpp"
#include "opalg/weyl.hpp"

namespace opalg::harness::detail {

namespace {

// ------------------------------------------------------------ random input

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 9);
  return {num(rng), den(rng)};
}

GaussRational random_gauss(std::mt19937_64& rng) {
  std::bernoulli_distribution complex_part(0.4);
  return {random_rational(rng),
          complex_part(rng) ? random_rational(rng) : Rational(0)};
}

UniPoly random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  UniPoly p;
  const int d = deg(rng);
  for (int k = 0; k <= d; ++k) p += UniPoly::monomial(k, random_gauss(rng));
  return p;
}

WeylOp random_weyl(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<int> exp(0, max_degree);
  WeylOp w;
  const int n = count(rng);
  for (int t = 0; t < n; ++t) {
    const int j = exp(rng);
    const int k = std::uniform_int_distribution<int>(0, max_degree - j)(rng);
    w += WeylOp::term(j, k, random_gauss(rng));
  }
  return w;
}

const GaussRational kI(Rational(0), Rational(1));

WeylOp mix() { return disentangle::mixed_operator(); }
WeylOp x2() { return WeylOp::term(2, 0); }
WeylOp p2() { return WeylOp::term(0, 2); }

// --------------------------------------------------------------- algebra

Outcome algebra_ring_laws(const ParamReader& in, const bessel::BesselEvalConfig&) {
  const int cases = in.integer("cases");
  const int max_degree = in.integer("max_degree");
  std::mt19937_64 rng(static_cast<std::uint64_t>(in.integer("seed")));
  ExactTally tally;
  for (int c = 0; c < cases; ++c) {
    const UniPoly a = random_poly(rng, max_degree);
    const UniPoly b = random_poly(rng, max_degree);
    const UniPoly d = random_poly(rng, max_degree);
    tally.expect((a * b) * d == a * (b * d));
    tally.expect(a * (b + d) == a * b + a * d);
    tally.expect(a * b == b * a);
    tally.expect(a + b == b + a);
    tally.expect((a * b).derivative() == a.derivative() * b + a * b.derivative());
    const GaussRational x0(random_rational(rng));
    tally.expect((a * b).eval(x0) == a.eval(x0) * b.eval(x0));
    if (!a.is_zero() && !b.is_zero()) {
      tally.expect((a * b).degree() == a.degree() + b.degree());
    }
  }
  return tally.finish();
}

Outcome algebra_binomial(const ParamReader& in, const bessel::BesselEvalConfig&) {
  const int n_max = in.integer("n_max");
  const int alpha_max = in.integer("alpha_max");
  ExactTally tally;
  for (int a = 0; a <= alpha_max; ++a) {
    for (int n = 0; n <= n_max; ++n) {
      for (int k = 0; k <= n; ++k) {
        tally.expect(binom_shifted(Rational(a), n, k) == binomial(n + a, n - k));
      }
    }
  }
  return tally.finish();
}

// ------------------------------------------------------------------ weyl

Outcome weyl_commutator_table(const ParamReader&, const bessel::BesselEvalConfig&) {
  const WeylOp x = WeylOp::x();
  const WeylOp p = WeylOp::p();
  ExactTally tally;
  tally.expect(commutator(x, p) == WeylOp(kI));
  tally.expect(commutator(x2(), p) == x.scale(GaussRational(0, 2)));
  tally.expect(commutator(x2(), mix()) == x2().scale(GaussRational(0, 4)));
  tally.expect(commutator(mix(), p2()) == p2().scale(GaussRational(0, 4)));
  // -2 + 4i px in normal order
  tally.expect(commutator(x2(), p2()) ==
               WeylOp(2) + WeylOp::term(1, 1, GaussRational(0, 4)));
  tally.expect(commutator(x2(), p2()) ==
               WeylOp(-2) + (p * x).scale(GaussRational(0, 4)));
  tally.expect(commutator(mix(), commutator(mix(), p2())) ==
               p2().scale(GaussRational(-16)));
  tally.expect(commutator(mix(), commutator(mix(), commutator(mix(), p2()))) ==
               p2().scale(GaussRational(0, -64)));
  tally.expect(commutator(x2(), commutator(x2(), p2())) ==
               x2().scale(GaussRational(-8)));
  tally.expect(
      commutator(x2(), commutator(x2(), commutator(x2(), p2()))).is_zero());
  return tally.finish();
}

bool terminated_equals(const ConjugationResult& r, const WeylOp& expected) {
  return std::holds_alternative<Terminated>(r) &&
         std::get<Terminated>(r).result == expected;
}

Outcome weyl_hadamard_cases(const ParamReader& in, const bessel::BesselEvalConfig&) {
  const WeylOp x = WeylOp::x();
  const WeylOp p = WeylOp::p();
  ExactTally tally;
  tally.expect(terminated_equals(hadamard_conjugate(x2(), p, 1),
                                 p + x.scale(GaussRational(0, 2))));
  tally.expect(terminated_equals(hadamard_conjugate(x, p, 1), p + WeylOp(kI)));
  for (const Rational& fr : in.rationals("f")) {
    const GaussRational f(fr);
    tally.expect(terminated_equals(hadamard_conjugate(x2(), mix(), f),
                                   mix() + x2().scale(kI * f * 4)));
    tally.expect(terminated_equals(
        hadamard_conjugate(x2(), p2(), f),
        p2() + mix().scale(kI * f * 2) - x2().scale(f * f * 4)));
    const auto eig = hadamard_conjugate(mix(), p2(), f);
    tally.expect(std::holds_alternative<Eigen>(eig) &&
                 std::get<Eigen>(eig).lambda == GaussRational(0, 4) &&
                 std::get<Eigen>(eig).op == p2());
  }
  return tally.finish();
}

Outcome weyl_baker_hausdorff(const ParamReader& in, const bessel::BesselEvalConfig&) {
  ExactTally tally;
  for (const Rational& ar : in.rationals("alpha")) {
    const GaussRational a(ar);
    const WeylOp lhs = WeylOp::x().scale(a * 2);
    const WeylOp rhs = WeylOp::p().scale(GaussRational(0, -1) * a);
    const GaussRational c = central_bch_prefactor(lhs, rhs);
    tally.expect(c == a * a * 2);
    // exponent of the scalar prefactor e^{-c/2}
    tally.expect(-c / GaussRational(2) == -(a * a));
  }
  tally.expect(central_bch_prefactor(WeylOp::x(), WeylOp::x()).is_zero());
  bool rejected = false;
  try {
    central_bch_prefactor(x2(), WeylOp::p());
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::NotApplicable;
  }
  tally.expect(rejected);
  return tally.finish();
}

Outcome weyl_algebra_laws(const ParamReader& in, const bessel::BesselEvalConfig&) {
  const int cases = in.integer("cases");
  const int max_degree = in.integer("max_degree");
  std::mt19937_64 rng(static_cast<std::uint64_t>(in.integer("seed")));
  ExactTally tally;
  for (int c = 0; c < cases; ++c) {
    const WeylOp a = random_weyl(rng, max_degree);
    const WeylOp b = random_weyl(rng, max_degree);
    const WeylOp d = random_weyl(rng, max_degree);
    const UniPoly q = random_poly(rng, 5);
    tally.expect(commutator(a, b) == -commutator(b, a));
    tally.expect((commutator(a, commutator(b, d)) + commutator(b, commutator(d, a)) +
                  commutator(d, commutator(a, b)))
                     .is_zero());
    tally.expect(apply_to_poly(a * b, q) == apply_to_poly(a, apply_to_poly(b, q)));
    tally.expect((a * b) * d == a * (b * d));
  }
  return tally.finish();
}

// e^{s A} q by truncated Taylor series, exact.
UniPoly exp_apply(const WeylOp& a, const GaussRational& s, const UniPoly& q,
                  int order) {
  UniPoly term = q;
  UniPoly sum = q;
  for (int m = 1; m <= order; ++m) {
    term = apply_to_poly(a, term).scale(s / GaussRational(m));
    sum += term;
  }
  return sum;
}

Outcome weyl_conjugation_numeric(const ParamReader& in,
                                 const bessel::BesselEvalConfig&) {
  const GaussRational xi(Rational::from_double(in.real("xi")));
  const int order = in.integer("order");
  const double tol = in.real("tol");
  const auto points = in.reals("x");
  const WeylOp x = WeylOp::x();
  const WeylOp p = WeylOp::p();
  const std::vector<std::pair<WeylOp, WeylOp>> cases = {
      {x2(), p}, {x, p}, {x2(), mix()}, {x2(), p2()}};
  WorstCase worst;
  for (const auto& [a, b] : cases) {
    const auto conj = hadamard_conjugate(a, b, xi);
    const WeylOp rhs_op = std::get<Terminated>(conj).result;
    for (int deg = 0; deg <= 2; ++deg) {
      const UniPoly q = UniPoly::monomial(deg, 1);
      const UniPoly lhs = exp_apply(
          a, xi, apply_to_poly(b, exp_apply(a, -xi, q, order)), order);
      const UniPoly rhs = apply_to_poly(rhs_op, q);
      for (double x0 : points) {
        worst.add(lhs.eval(ComplexF(x0)), rhs.eval(ComplexF(x0)), tol);
      }
    }
  }
  return worst.finish();
}

// --------------------------------------------------------------- hermite

Outcome hermite_triple_equality(const ParamReader& in,
                                const bessel::BesselEvalConfig&) {
  const int n_max = in.integer("n_max");
  const HermiteSet set = hermite_recurrence(n_max);
  ExactTally tally;
  for (int n = 0; n <= n_max; ++n) {
    const UniPoly& rec = set.polys[static_cast<std::size_t>(n)];
    tally.expect(rec == hermite_rodrigues(n));
    tally.expect(rec == hermite_operator(n));
  }
  return tally.finish();
}

Outcome hermite_derivative_relation(const ParamReader& in,
                                    const bessel::BesselEvalConfig&) {
  const int n_max = in.integer("n_max");
  const HermiteSet set = hermite_recurrence(n_max);
  ExactTally tally;
  tally.expect(set.polys[0].derivative().is_zero());
  for (int n = 1; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    tally.expect(set.polys[i].derivative() ==
                 set.polys[i - 1].scale(GaussRational(2 * n)));
  }
  return tally.finish();
}

Outcome hermite_ode(const ParamReader& in, const bessel::BesselEvalConfig&) {
  ExactTally tally;
  for (int n = 0; n <= in.integer("n_max"); ++n) {
    tally.expect(hermite_ode_residual(n).is_zero());
  }
  return tally.finish();
}

Outcome hermite_structure(const ParamReader& in, const bessel::BesselEvalConfig&) {
  const int n_max = in.integer("n_max");
  const HermiteSet set = hermite_recurrence(n_max);
  ExactTally tally;
  for (int n = 0; n <= n_max; ++n) {
    const UniPoly& h = set.polys[static_cast<std::size_t>(n)];
    tally.expect(h.degree() == n);
    tally.expect(h.leading() == GaussRational(Rational(2).pow(static_cast<unsigned>(n))));
    for (const auto& [k, c] : h.terms()) tally.expect((k - n) % 2 == 0);
  }
  return tally.finish();
}

Outcome hermite_addition(const ParamReader& in, const bessel::BesselEvalConfig&) {
  const int n_max = in.integer("n_max");
  const int pairs = in.integer("pairs");
  std::mt19937_64 rng(static_cast<std::uint64_t>(in.integer("seed")));
  ExactTally tally;
  for (int s = 0; s < pairs; ++s) {
    const Rational x0 = random_rational(rng);
    const Rational y0 = random_rational(rng);
    for (int n = 0; n <= n_max; ++n) {
      const AdditionSides sides = hermite_addition_check(n, x0, y0);
      tally.expect(sides.lhs == sides.rhs);
    }
  }
  return tally.finish();
}

Outcome hermite_generating_function(const ParamReader& in,
                                    const bessel::BesselEvalConfig&) {
  const double alpha = in.real("alpha");
  const double x_min = in.real("x_min");
  const double x_max = in.real("x_max");
  const int points = in.integer("points");
  const int terms = in.integer("N");
  const double tol = in.real("tol");
  if (points < 2) raise(ErrorCode::Argument, "points: must be >= 2");
  WorstCase worst;
  for (int j = 0; j < points; ++j) {
    const double x0 = x_min + (x_max - x_min) * j / (points - 1);
    worst.add(hermite_genfun_partial(alpha, x0, terms),
              hermite_genfun_closed(alpha, x0), tol);
  }
  return worst.finish();
}

Outcome hermite_ladder(const ParamReader& in, const bessel::BesselEvalConfig&) {
  const int n_max = in.integer("n_max");
  const double tol = in.real("tol");
  WorstCase worst;
  for (double x0 : in.reals("x")) {
    const auto psi = psi_values(n_max + 1, x0);
    for (int n = 0; n <= n_max; ++n) {
      const auto i = static_cast<std::size_t>(n);
      const ComplexF d = psi_derivative(n, x0);
      worst.add((x0 * psi[i] - d) / std::numbers::sqrt2,
                std::sqrt(n + 1.0) * psi[i + 1], tol);
      const ComplexF lowered = n == 0 ? ComplexF(0.0) : std::sqrt(double(n)) * psi[i - 1];
      worst.add((x0 * psi[i] + d) / std::numbers::sqrt2, lowered, tol);
    }
  }
  return worst.finish();
}

Outcome hermite_expansion(const ParamReader& in, const bessel::BesselEvalConfig&) {
  const int target = in.integer("n");
  const int n_max = in.integer("n_max");
  const double tol = in.real("tol");
  const ExpansionGrid grid{in.real("L"), in.integer("M")};
  const auto coeffs = hermite_expand(
      [target](double x) { return psi_eval(target, x); }, n_max, grid);
  WorstCase worst;
  for (int n = 0; n <= n_max; ++n) {
    worst.add(coeffs[static_cast<std::size_t>(n)], n == target ? 1.0 : 0.0, tol);
  }
  return worst.finish();
}

Outcome even_hermite_sum(const ParamReader& in, const bessel::BesselEvalConfig&) {
  const int terms = in.integer("N");
  const double tol = in.real("tol");
  WorstCase worst;
  for (double t : in.reals("t")) {
    for (double x0 : in.reals("x")) {
      const ComplexF closed = even_hermite_closed(t, x0);
      worst.add(even_hermite_partial(t, x0, terms), closed,
                tol * (1.0 + std::abs(closed)));
    }
  }
  return worst.finish();
}

Outcome even_hermite_disentangle(const ParamReader& in,
                                 const bessel::BesselEvalConfig&) {
  const double tol = in.real("tol");
  WorstCase worst;
  for (double t : in.reals("t")) {
    for (double x0 : in.reals("x")) {
      const ComplexF closed = even_hermite_closed(t, x0);
      worst.add(disentangle::even_hermite_via_disentangle(t, x0), closed,
                tol * (1.0 + std::abs(closed)));
    }
  }
  return worst.finish();
}

// -------------------------------------------------------------- laguerre

Outcome laguerre_triple_equality(const ParamReader& in,
                                 const bessel::BesselEvalConfig&) {
  const int n_max = in.integer("n_max");
  ExactTally tally;
  for (const Rational& a : in.rationals("alpha")) {
    const LaguerreSet set = laguerre_recurrence(n_max, a);
    for (int n = 0; n <= n_max; ++n) {
      const UniPoly& rec = set.polys[static_cast<std::size_t>(n)];
      tally.expect(rec == laguerre_operator(n, a));
      tally.expect(rec == laguerre_explicit(n, a));
    }
  }
  return tally.finish();
}

Outcome laguerre_recurrence_check(const ParamReader& in,
                                  const bessel::BesselEvalConfig&) {
  const int n_max = in.integer("n_max");
  ExactTally tally;
  for (const Rational& a : in.rationals("alpha")) {
    for (int n = 1; n < n_max; ++n) {
      tally.expect(laguerre_recurrence_residual(n, a, laguerre_explicit(n - 1, a),
                                                laguerre_explicit(n, a),
                                                laguerre_explicit(n + 1, a))
                       .is_zero());
    }
  }
  return tally.finish();
}

Outcome laguerre_generating_function(const ParamReader& in,
                                     const bessel::BesselEvalConfig&) {
  const int terms = in.integer("N");
  const double tol = in.real("tol");
  WorstCase worst;
  for (double t : in.reals("t")) {
    for (const Rational& a : in.rationals("alpha")) {
      for (double x0 : in.reals("x")) {
        worst.add(laguerre_genfun_partial(t, x0, a, terms),
                  laguerre_genfun_closed(t, x0, a), tol);
      }
    }
  }
  return worst.finish();
}

// ---------------------------------------------------------------- bessel

Outcome bessel_cross_method(const ParamReader& in,
                            const bessel::BesselEvalConfig& cfg) {
  const int n_max = in.integer("n_max");
  const double tol = in.real("tol");
  WorstCase worst;
  for (double x : in.reals("x")) {
    const auto miller = bessel::j_miller(n_max, x, cfg.miller_pad);
    for (int n = 0; n <= n_max; ++n) {
      const double s = bessel::j_series(n, x, cfg.series_tol);
      const double q = bessel::j_integral(n, x, cfg.quad_nodes);
      const double bound = tol * (1.0 + std::abs(s));
      worst.add(q, s, bound);
      worst.add(miller[static_cast<std::size_t>(n)], s, bound);
    }
  }
  return worst.finish();
}

Outcome bessel_generating_function(const ParamReader& in,
                                   const bessel::BesselEvalConfig& cfg) {
  const int terms = in.integer("N");
  const double tol = in.real("tol");
  WorstCase worst;
  for (double x : in.reals("x")) {
    for (double t : in.reals("t")) {
      worst.add(bessel::genfun_partial(x, t, terms, cfg),
                std::exp(0.5 * x * (t - 1.0 / t)), tol);
    }
  }
  return worst.finish();
}

Outcome bessel_recurrence(const ParamReader& in,
                          const bessel::BesselEvalConfig& cfg) {
  const double tol = in.real("tol");
  WorstCase worst;
  for (double x : in.reals("x")) {
    for (int n = 0; n <= in.integer("n_max"); ++n) {
      worst.add(bessel::recurrence_residual(n, x, cfg), 0.0, tol);
    }
  }
  return worst.finish();
}

Outcome bessel_addition(const ParamReader& in,
                        const bessel::BesselEvalConfig& cfg) {
  const auto ns = in.integers("n");
  const auto xs = in.reals("x");
  const auto ys = in.reals("y");
  if (ns.size() != xs.size() || ns.size() != ys.size()) {
    raise(ErrorCode::Argument, "n, x, y: lists must have equal length");
  }
  const int terms = in.integer("K");
  const double tol = in.real("tol");
  WorstCase worst;
  for (std::size_t c = 0; c < ns.size(); ++c) {
    worst.add(bessel::j_addition(ns[c], xs[c], ys[c], terms, cfg),
              bessel::j_signed(ns[c], xs[c] + ys[c], cfg), tol);
  }
  return worst.finish();
}

Outcome bessel_jacobi_anger(const ParamReader& in,
                            const bessel::BesselEvalConfig& cfg) {
  const int terms = in.integer("N");
  const double tol = in.real("tol");
  const ComplexF i(0.0, 1.0);
  WorstCase worst;
  for (double x : in.reals("x")) {
    for (double y : in.reals("y")) {
      const auto sums = bessel::jacobi_anger_partial(x, y, terms, cfg);
      worst.add(sums.cos_sum, std::exp(i * x * std::cos(y)), tol);
      worst.add(sums.sin_sum, std::exp(i * x * std::sin(y)), tol);
    }
  }
  return worst.finish();
}

Outcome bessel_translation(const ParamReader& in,
                           const bessel::BesselEvalConfig& cfg) {
  const auto ns = in.integers("n");
  const auto xs = in.reals("x");
  const auto ys = in.reals("y");
  if (ns.size() != xs.size() || ns.size() != ys.size()) {
    raise(ErrorCode::Argument, "n, x, y: lists must have equal length");
  }
  const int terms = in.integer("M");
  const double tol = in.real("tol");
  WorstCase worst;
  for (std::size_t c = 0; c < ns.size(); ++c) {
    worst.add(bessel::j_translate_partial(ns[c], xs[c], ys[c], terms, cfg),
              bessel::j_series(ns[c], xs[c] + ys[c], cfg.series_tol), tol);
  }
  return worst.finish();
}

Outcome bessel_ode(const ParamReader& in, const bessel::BesselEvalConfig& cfg) {
  const double tol = in.real("tol");
  WorstCase worst;
  for (double x : in.reals("x")) {
    for (int n = 0; n <= in.integer("n_max"); ++n) {
      worst.add(bessel::j_ode_residual(n, x, cfg), 0.0, tol * (1.0 + x * x));
    }
  }
  return worst.finish();
}

Outcome bessel_parity(const ParamReader& in, const bessel::BesselEvalConfig& cfg) {
  const double tol = in.real("tol");
  WorstCase worst;
  for (double x : in.reals("x")) {
    for (int n = 0; n <= in.integer("n_max"); ++n) {
      const double sign = n % 2 == 0 ? 1.0 : -1.0;
      worst.add(bessel::j_series(n, -x, cfg.series_tol),
                sign * bessel::j_series(n, x, cfg.series_tol), tol);
    }
  }
  return worst.finish();
}

Outcome bessel_bound(const ParamReader& in, const bessel::BesselEvalConfig& cfg) {
  ExactTally tally;
  for (double x : in.reals("x")) {
    for (int n = -in.integer("n_max"); n <= in.integer("n_max"); ++n) {
      tally.expect(std::abs(bessel::j_signed(n, x, cfg)) <= 1.0);
    }
  }
  return tally.finish();
}

// ----------------------------------------------------------- disentangle

Outcome disentangle_closed_residuals(const ParamReader& in,
                                     const bessel::BesselEvalConfig&) {
  const int samples = in.integer("samples");
  const double t_max = in.real("t_max");
  const double tol = in.real("tol");
  if (samples < 2) raise(ErrorCode::Argument, "samples: must be >= 2");
  WorstCase worst;
  for (int s = 0; s < samples; ++s) {
    const double t = t_max * s / (samples - 1);
    const auto form = disentangle::disentangle_closed(t);
    const auto rate = disentangle::disentangle_closed_rates(t);
    const auto rhs = disentangle::factor_rates(disentangle::kEvenHermiteExponent,
                                               form.f, form.g);
    worst.add(rate.df, rhs.df, tol);
    worst.add(rate.dg, rhs.dg, tol);
    worst.add(rate.dh, rhs.dh, tol);
  }
  return worst.finish();
}

Outcome disentangle_ode_vs_closed(const ParamReader& in,
                                  const bessel::BesselEvalConfig&) {
  const int samples = in.integer("samples");
  const int steps = in.integer("steps");
  const double t_max = in.real("t_max");
  const double tol = in.real("tol");
  if (samples < 2) raise(ErrorCode::Argument, "samples: must be >= 2");
  WorstCase worst;
  for (int s = 0; s < samples; ++s) {
    const double t = t_max * s / (samples - 1);
    const auto ode =
        disentangle::disentangle_ode(disentangle::kEvenHermiteExponent, t, steps);
    const auto closed = disentangle::disentangle_closed(t);
    worst.add(ode.f, closed.f, tol);
    worst.add(ode.g, closed.g, tol);
    worst.add(ode.h, closed.h, tol);
  }
  return worst.finish();
}

Outcome disentangle_specialization(const ParamReader& in,
                                   const bessel::BesselEvalConfig&) {
  ExactTally tally;
  // The exponent of the even-Hermite series in the {x^2, xp+px, p^2} basis.
  const WeylOp exponent =
      -(p2() - x2().scale(GaussRational(4)) + mix().scale(kI * 2));
  const auto coords = disentangle::decompose_quadratic(exponent);
  tally.expect(coords.a_x2 == GaussRational(4));
  tally.expect(coords.b_mix == GaussRational(0, -2));
  tally.expect(coords.c_p2 == GaussRational(-1));
  tally.expect(GaussRational::from_complex(disentangle::kEvenHermiteExponent.a_x2) ==
               coords.a_x2);
  tally.expect(GaussRational::from_complex(disentangle::kEvenHermiteExponent.b_mix) ==
               coords.b_mix);
  tally.expect(GaussRational::from_complex(disentangle::kEvenHermiteExponent.c_p2) ==
               coords.c_p2);

  for (const Rational& fr : in.rationals("f")) {
    const GaussRational f(fr);
    const auto sys = disentangle::matching_system(f);
    const GaussRational zero;
    const GaussRational one(1);
    // x^2 row: f' + 4if g' - 4f^2 e^{4ig} h'
    tally.expect(sys.coeff[0][0] == one);
    tally.expect(sys.coeff[0][1] == kI * f * 4);
    tally.expect(sys.coeff[0][2] == -(f * f * 4));
    // (xp+px) row: g' + 2if e^{4ig} h'
    tally.expect(sys.coeff[1][0] == zero);
    tally.expect(sys.coeff[1][1] == one);
    tally.expect(sys.coeff[1][2] == kI * f * 2);
    // p^2 row: e^{4ig} h'
    tally.expect(sys.coeff[2][0] == zero);
    tally.expect(sys.coeff[2][1] == zero);
    tally.expect(sys.coeff[2][2] == one);
    tally.expect(sys.h_phase == GaussRational(0, 4));

    // The closed-form triangular rates solve this system at sampled g.
    for (double g_im : {-0.3, 0.0, 0.45}) {
      const ComplexF fc = f.to_complex();
      const ComplexF g(0.1, g_im);
      const auto r = disentangle::factor_rates(disentangle::kEvenHermiteExponent, fc, g);
      const ComplexF e = std::exp(sys.h_phase.to_complex() * g);
      const auto c = [&sys](int row, int col) {
        return sys.coeff[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]
            .to_complex();
      };
      const ComplexF row0 = c(0, 0) * r.df + c(0, 1) * r.dg + c(0, 2) * e * r.dh;
      const ComplexF row1 = c(1, 0) * r.df + c(1, 1) * r.dg + c(1, 2) * e * r.dh;
      const ComplexF row2 = c(2, 0) * r.df + c(2, 1) * r.dg + c(2, 2) * e * r.dh;
      tally.expect(std::abs(row0 - 4.0) < 1e-12);
      tally.expect(std::abs(row1 - ComplexF(0.0, -2.0)) < 1e-12);
      tally.expect(std::abs(row2 + 1.0) < 1e-12);
    }
  }
  return tally.finish();
}

Outcome disentangle_operator_equivalence(const ParamReader& in,
                                         const bessel::BesselEvalConfig&) {
  const int order = in.integer("N");
  const double tol = in.real("tol");
  WorstCase worst;
  for (int deg : in.integers("q_degree")) {
    const UniPoly q = UniPoly::monomial(deg, 1);
    for (double t : in.reals("t")) {
      const UniPoly taylor = disentangle::exp_taylor_apply(
          disentangle::kEvenHermiteExponent, t, q, order);
      const auto factored =
          disentangle::apply_factored(disentangle::disentangle_closed(t), q);
      for (double x0 : in.reals("x")) {
        worst.add(factored.eval(x0), taylor.eval(ComplexF(x0)), tol);
      }
    }
  }
  return worst.finish();
}

Outcome disentangle_initial_condition(const ParamReader&,
                                      const bessel::BesselEvalConfig&) {
  ExactTally tally;
  const auto closed = disentangle::disentangle_closed(0.0);
  tally.expect(closed.f == 0.0 && closed.g == 0.0 && closed.h == 0.0);
  for (const auto& q : {disentangle::kEvenHermiteExponent,
                        disentangle::QuadExponent{1.0, 2.0, 3.0}}) {
    const auto ode = disentangle::disentangle_ode(q, 0.0);
    tally.expect(ode.f == 0.0 && ode.g == 0.0 && ode.h == 0.0);
  }
  return tally.finish();
}

}  // namespace

const std::vector<Registered>& registered_checks() {
  static const std::vector<Registered> kChecks = {
      {{"algebra_ring_laws", "ring axioms, Leibniz rule and evaluation homomorphism on random polynomials",
        {{"cases", "100"}, {"max_degree", "8"}, {"seed", "1"}}},
       algebra_ring_laws},
      {{"algebra_binomial", "generalized binomial matches integer binomials for integer order",
        {{"n_max", "12"}, {"alpha_max", "6"}}},
       algebra_binomial},
      {{"weyl_commutator_table", "commutators [x,p], [x^2,p], [x^2,xp+px], [xp+px,p^2], [x^2,p^2] and nested ones", {}},
       weyl_commutator_table},
      {{"weyl_hadamard_cases", "exact Hadamard conjugations including the eigen-case", {{"f", "1,1/3"}}},
       weyl_hadamard_cases},
      {{"weyl_baker_hausdorff", "central Baker-Hausdorff prefactor for A=2ax, B=-iap", {{"alpha", "1,1/2,3"}}},
       weyl_baker_hausdorff},
      {{"weyl_algebra_laws", "antisymmetry, Jacobi identity, action homomorphism, associativity",
        {{"cases", "40"}, {"max_degree", "3"}, {"seed", "7"}}},
       weyl_algebra_laws},
      {{"weyl_conjugation_numeric", "terminated conjugations agree with truncated exponentials acting on 1, x, x^2",
        {{"xi", "0.1"}, {"order", "20"}, {"x", "-1,0.5,1"}, {"tol", "1e-10"}}},
       weyl_conjugation_numeric},
      {{"hermite_triple_equality", "recurrence, Rodrigues and operator routes agree exactly", {{"n_max", "25"}}},
       hermite_triple_equality},
      {{"hermite_derivative_relation", "H_n' = 2n H_{n-1}", {{"n_max", "25"}}},
       hermite_derivative_relation},
      {{"hermite_ode_residual", "H_n'' - 2x H_n' + 2n H_n = 0", {{"n_max", "25"}}},
       hermite_ode},
      {{"hermite_structure", "degree n, leading coefficient 2^n, parity", {{"n_max", "25"}}},
       hermite_structure},
      {{"hermite_addition", "addition formula, exact in Q(sqrt 2)",
        {{"n_max", "12"}, {"pairs", "25"}, {"seed", "2024"}}},
       hermite_addition},
      {{"hermite_generating_function", "sum H_n(x) a^n/n! = exp(-a^2 + 2ax)",
        {{"alpha", "0.5"}, {"x_min", "-2"}, {"x_max", "2"}, {"points", "9"}, {"N", "40"}, {"tol", "1e-12"}}},
       hermite_generating_function},
      {{"hermite_ladder", "raising and lowering relations of psi_n",
        {{"n_max", "10"}, {"x", "-1,0,0.7,2"}, {"tol", "1e-10"}}},
       hermite_ladder},
      {{"hermite_expansion", "trapezoidal expansion of psi_n in the oscillator basis",
        {{"n", "3"}, {"n_max", "8"}, {"L", "10"}, {"M", "400"}, {"tol", "1e-8"}}},
       hermite_expansion},
      {{"even_hermite_sum", "sum t^n/n! H_2n(x) against the closed form, tol*(1+|closed|)",
        {{"t", "0.05,0.1,0.2"}, {"x", "-2,-1,0,1,2"}, {"N", "80"}, {"tol", "1e-9"}}},
       even_hermite_sum},
      {{"even_hermite_disentangle", "factored operator pipeline applied to 1 against the closed form",
        {{"t", "0.05,0.1,0.2"}, {"x", "-2,-1,0,1,2"}, {"tol", "1e-12"}}},
       even_hermite_disentangle},
      {{"laguerre_triple_equality", "recurrence, operator and explicit routes agree exactly",
        {{"n_max", "20"}, {"alpha", "0,1,5,1/2,3/2"}}},
       laguerre_triple_equality},
      {{"laguerre_recurrence_residual", "explicit polynomials satisfy the three-term recurrence",
        {{"n_max", "20"}, {"alpha", "0,1,5,1/2,3/2"}}},
       laguerre_recurrence_check},
      {{"laguerre_generating_function", "sum L_n^a(x) t^n = (1-t)^{-a-1} exp(-xt/(1-t))",
        {{"t", "0.3"}, {"alpha", "0,2"}, {"x", "0,1,3"}, {"N", "60"}, {"tol", "1e-10"}}},
       laguerre_generating_function},
      {{"bessel_cross_method", "series, trapezoidal integral and Miller recurrence agree, tol*(1+|J|)",
        {{"n_max", "10"}, {"x", "0.5,1,5,10"}, {"tol", "1e-12"}}},
       bessel_cross_method},
      {{"bessel_generating_function", "sum t^n J_n(x) = exp(x(t-1/t)/2)",
        {{"x", "1"}, {"t", "0.7,1.3,-0.5"}, {"N", "40"}, {"tol", "1e-12"}}},
       bessel_generating_function},
      {{"bessel_recurrence", "(2n/x) J_n = J_{n-1} + J_{n+1}",
        {{"n_max", "8"}, {"x", "1,5"}, {"tol", "1e-12"}}},
       bessel_recurrence},
      {{"bessel_addition", "J_n(x+y) = sum_k J_{n-k}(x) J_k(y)",
        {{"n", "0,1,3"}, {"x", "1.1,2,2"}, {"y", "0.7,0.5,2"}, {"K", "40"}, {"tol", "1e-12"}}},
       bessel_addition},
      {{"bessel_jacobi_anger", "plane-wave expansions in cos y and sin y",
        {{"x", "2"}, {"y", "0,1.0471975511965976,1.2"}, {"N", "40"}, {"tol", "1e-12"}}},
       bessel_jacobi_anger},
      {{"bessel_translation", "Taylor translation with the m-th derivative formula",
        {{"n", "0,2"}, {"x", "1,2"}, {"y", "0.5,-0.3"}, {"M", "30"}, {"tol", "1e-10"}}},
       bessel_translation},
      {{"bessel_ode_residual", "x^2 J'' + x J' + (x^2 - n^2) J = 0, tol*(1+x^2)",
        {{"n_max", "5"}, {"x", "0.5,1,2,5"}, {"tol", "1e-10"}}},
       bessel_ode},
      {{"bessel_parity", "J_n(-x) = (-1)^n J_n(x)",
        {{"n_max", "10"}, {"x", "0.5,1,5,10"}, {"tol", "1e-15"}}},
       bessel_parity},
      {{"bessel_bound", "|J_n(x)| <= 1", {{"n_max", "10"}, {"x", "0.5,1,5,10,20"}}},
       bessel_bound},
      {{"disentangle_closed_residuals", "closed-form factors satisfy the rate equations",
        {{"samples", "100"}, {"t_max", "0.2"}, {"tol", "1e-12"}}},
       disentangle_closed_residuals},
      {{"disentangle_ode_vs_closed", "RK4 integration of the rate equations against the closed forms",
        {{"samples", "11"}, {"steps", "10000"}, {"t_max", "0.2"}, {"tol", "1e-10"}}},
       disentangle_ode_vs_closed},
      {{"disentangle_specialization", "coefficient matching from the Weyl algebra reproduces the rate system",
        {{"f", "1,1/3,2/7,-3/5"}}},
       disentangle_specialization},
      {{"disentangle_operator_equivalence", "factored product against the Taylor-expanded exponential",
        {{"q_degree", "0,1,2"}, {"t", "0.02,0.05"}, {"x", "0,0.5,1"}, {"N", "30"}, {"tol", "1e-8"}}},
       disentangle_operator_equivalence},
      {{"disentangle_initial_condition", "factors vanish at t = 0", {}},
       disentangle_initial_condition},
  };
  return kChecks;
}

}  // namespace opalg::harness::detail
