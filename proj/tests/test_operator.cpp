#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "fracineq/operator.hpp"

using fracineq::apply_operator;
using fracineq::EvalPoint;
using fracineq::FractionalParams;
using fracineq::graded_axis;
using fracineq::katugampola_integral;
using fracineq::lambda_fn;
using fracineq::operator_input;
using fracineq::OperatorResult;
using fracineq::parse_integrand;
using fracineq::power_closed_form;
using fracineq::reduce;
using fracineq::ReductionKind;
using fracineq::select_grading;

namespace {

fracineq::Integrand power_spec(double sigma) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "pow:%.17g", sigma);
  return parse_integrand(buf);
}

double rel_err(double got, double want) {
  return std::fabs(got - want) / std::max(1.0, std::fabs(want));
}

}  // namespace

TEST_CASE("substitution grading selection") {
  CHECK(select_grading(1.0, {}) == 1);
  CHECK(select_grading(2.0, {}) == 1);
  CHECK(select_grading(0.5, {}) == 2);
  CHECK(select_grading(1.5, {}) == 2);
  CHECK(select_grading(0.25, {0.5}) == 4);
  CHECK(select_grading(1.0, {1.0 / 3.0}) == 3);
  CHECK(select_grading(1.0 / 3.0, {0.5}) == 6);
  // Negative and integer strengths need no clearing.
  CHECK(select_grading(1.0, {-0.5}) == 1);
  CHECK(select_grading(1.0, {2.0}) == 1);
  // Combined grading beyond the cap falls back to clearing rho alone.
  CHECK(select_grading(1.0 / 12.0, {1.0 / 11.0}) == 12);
  // No small denominator at all: honest c = 1.
  CHECK(select_grading(3.14159265358979, {}) == 1);
}

TEST_CASE("graded axis data") {
  auto half = graded_axis(0.5, 0.25, {});
  CHECK(half.c == 2);
  CHECK(half.m == doctest::Approx(1.0));
  CHECK(half.m_int == 1);
  CHECK(half.eta_graded == doctest::Approx(0.25));
  CHECK(half.kernel_factor(0.37, -0.5) == 1.0);
  CHECK(half.map(2.0, 0.5) == doctest::Approx(0.5));

  auto threehalf = graded_axis(1.5, 0.0, {});
  CHECK(threehalf.c == 2);
  CHECK(threehalf.m == doctest::Approx(3.0));
  CHECK(threehalf.m_int == 3);
  double s = 0.3;
  CHECK(threehalf.kernel_factor(s, 2.0) ==
        doctest::Approx(std::pow(1.0 + s + s * s, 2.0)).epsilon(1e-14));

  auto irr = graded_axis(1.57079632679489662, 0.0, {});
  CHECK(irr.c == 1);
  CHECK(irr.m_int == 0);
  CHECK(irr.kernel_factor(1.0, 2.0) == doctest::Approx(irr.m * irr.m).epsilon(1e-13));
  CHECK(irr.kernel_factor(0.5, 1.0) ==
        doctest::Approx((1.0 - std::pow(0.5, irr.m)) / 0.5).epsilon(1e-13));
}

TEST_CASE("power functions match the closed form") {
  struct Tuple {
    double alpha, beta, rho, k, eta, sigma, x;
  };
  const Tuple tuples[] = {
      {1.0, 1.0, 1.0, 0.0, 0.0, 1.0, 1.0},    {0.5, 0.5, 1.0, 0.0, 0.0, 2.0, 2.0},
      {2.5, -1.0, 2.0, 1.0, 0.5, 0.5, 1.5},   {0.75, 0.25, 0.5, -0.5, -0.5, 1.5, 0.75},
      {1.25, 0.0, 1.5, 0.5, 1.0, 1.0 / 3.0, 2.5}, {3.0, 1.5, 0.25, 0.0, 0.25, 0.25, 1.2},
      {0.3, 0.7, 2.5, -1.0, 1.5, 3.0, 3.0},   {1.0, 0.0, 1.0, 0.0, -0.6, -0.3, 0.5},
      {2.0, 2.0, 1.0 / 3.0, 0.25, 0.0, 2.0 / 3.0, 1.1}, {0.6, -0.4, 0.75, 0.3, 0.8, 1.25, 2.0},
  };
  for (const Tuple& t : tuples) {
    FractionalParams p(t.alpha, t.beta, t.rho, t.k, t.eta);
    EvalPoint x(t.x);
    double got = katugampola_integral(p, power_spec(t.sigma), x);
    double want = power_closed_form(p, t.sigma, x);
    CAPTURE(t.alpha);
    CAPTURE(t.rho);
    CAPTURE(t.sigma);
    CHECK(rel_err(got, want) <= 1e-9);
  }
}

TEST_CASE("irrational rho converges algebraically to the closed form") {
  FractionalParams p(1.5, 0.5, 3.14159265358979, 0.0, 0.25);
  EvalPoint x(1.5);
  fracineq::QuadratureConfig cfg;
  OperatorResult diag;
  double got = katugampola_integral(p, power_spec(2.0), x, cfg, &diag);
  double want = power_closed_form(p, 2.0, x);
  CHECK(rel_err(got, want) <= 1e-8);
  CHECK(diag.n_used >= 16);
}

TEST_CASE("operator on the constant function reproduces lambda") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ua(0.3, 3.0), ub(-1.0, 1.5), ue(-0.6, 1.5),
      uk(-1.0, 1.5), ux(0.5, 3.0);
  const double rhos[] = {0.5, 1.0, 1.5, 2.0, 0.25, 2.5};
  for (int i = 0; i < 40; ++i) {
    FractionalParams p(ua(rng), ub(rng), rhos[i % 6], uk(rng), ue(rng));
    EvalPoint x(ux(rng));
    double via_op = katugampola_integral(p, parse_integrand("const:1"), x);
    double lam = lambda_fn(p, x);
    CHECK(rel_err(via_op, lam) <= 1e-10);
    CHECK(rel_err(power_closed_form(p, 0.0, x), lam) <= 1e-13);
  }
}

TEST_CASE("Riemann-Liouville order one is the running integral") {
  FractionalParams rl = reduce(ReductionKind::riemann_liouville, 1.0);
  for (double x : {0.5, 1.0, 2.0}) {
    CHECK(katugampola_integral(rl, parse_integrand("pow:3"), EvalPoint(x)) ==
          doctest::Approx(std::pow(x, 4) / 4.0).epsilon(1e-11));
    CHECK(katugampola_integral(rl, parse_integrand("exp:1"), EvalPoint(x)) ==
          doctest::Approx(std::exp(x) - 1.0).epsilon(1e-11));
    CHECK(katugampola_integral(rl, parse_integrand("log1p"), EvalPoint(x)) ==
          doctest::Approx((1.0 + x) * std::log1p(x) - x).epsilon(1e-11));
  }
}

TEST_CASE("linearity and positivity") {
  FractionalParams p(1.75, 0.5, 1.5, 0.25, 0.5);
  EvalPoint x(1.8);
  double combo = katugampola_integral(p, parse_integrand("poly:0,2,3"), x);
  double parts = 2.0 * katugampola_integral(p, parse_integrand("pow:1"), x) +
                 3.0 * katugampola_integral(p, parse_integrand("pow:2"), x);
  CHECK(combo == doctest::Approx(parts).epsilon(1e-11));

  CHECK(katugampola_integral(p, parse_integrand("exp:-1"), x) > 0.0);
}

TEST_CASE("beta enters only through the rho power") {
  FractionalParams p1(1.2, 0.25, 2.0, 0.5, 0.5);
  FractionalParams p2(1.2, 1.0, 2.0, 0.5, 0.5);
  EvalPoint x(1.3);
  auto f = parse_integrand("exp:0.7");
  double v1 = katugampola_integral(p1, f, x);
  double v2 = katugampola_integral(p2, f, x);
  CHECK(v1 == doctest::Approx(v2 * std::pow(2.0, 1.0 - 0.25) / std::pow(2.0, 1.0 - 1.0))
                  .epsilon(1e-12));
}

TEST_CASE("product inputs add strengths") {
  auto a = parse_integrand("pow:0.5");
  auto b = parse_integrand("pow:1.5");
  auto in2 = operator_input(a, b);
  CHECK(in2.strength == doctest::Approx(2.0));
  CHECK(in2.f(2.0) == doctest::Approx(std::pow(2.0, 2.0)));
  auto in3 = operator_input(a, b, parse_integrand("const:3"));
  CHECK(in3.strength == doctest::Approx(2.0));
  CHECK(in3.f(0.7) == doctest::Approx(3.0 * std::pow(0.7, 2.0)));

  // The product of two half powers is a whole power; values must agree with
  // the closed form for the summed exponent.
  FractionalParams p(0.8, 0.0, 0.5, 0.0, 0.25);
  EvalPoint x(2.2);
  OperatorResult r = apply_operator(p, in2, x);
  CHECK(rel_err(r.value, power_closed_form(p, 2.0, x)) <= 1e-10);
}

TEST_CASE("divergent strength is rejected") {
  FractionalParams p(1.0, 1.0, 1.0, 0.0, -0.6);
  EvalPoint x(1.0);
  // -rho(eta+1) = -0.4: sigma = -0.5 diverges, -0.3 converges.
  CHECK_THROWS_AS(katugampola_integral(p, power_spec(-0.5), x), std::domain_error);
  CHECK_THROWS_AS(power_closed_form(p, -0.5, x), std::domain_error);
  double got = katugampola_integral(p, power_spec(-0.3), x);
  CHECK(rel_err(got, power_closed_form(p, -0.3, x)) <= 1e-9);
}

TEST_CASE("prefactor overflow is reported") {
  FractionalParams p(1.0, 0.0, 1.0, 300.0, 0.0);
  CHECK_THROWS_AS(katugampola_integral(p, parse_integrand("const:1"), EvalPoint(100.0)),
                  std::overflow_error);
}

TEST_CASE("classical reductions") {
  FractionalParams rl = reduce(ReductionKind::riemann_liouville, 0.8);
  CHECK(rl.alpha == 0.8);
  CHECK(rl.beta == 0.8);
  CHECK(rl.rho == 1.0);
  CHECK(rl.k == 0.0);
  CHECK(rl.eta == 0.0);

  FractionalParams la = reduce(ReductionKind::liouville_a0, 0.8);
  CHECK(la.beta == rl.beta);
  CHECK(la.rho == rl.rho);

  FractionalParams kat = reduce(ReductionKind::katugampola, 1.2, 2.5);
  CHECK(kat.alpha == 1.2);
  CHECK(kat.beta == 1.2);
  CHECK(kat.rho == 2.5);
  CHECK(kat.k == 0.0);
  CHECK(kat.eta == 0.0);

  FractionalParams ek = reduce(ReductionKind::erdelyi_kober, 1.0, 2.0, 0.0);
  CHECK(ek.beta == 0.0);
  CHECK(ek.k == doctest::Approx(-2.0));
  // Erdelyi-Kober of t^2 at rho=2, eta=0, alpha=1 is x^2/2.
  double v = katugampola_integral(ek, parse_integrand("pow:2"), EvalPoint(1.7));
  CHECK(v == doctest::Approx(1.7 * 1.7 / 2.0).epsilon(1e-11));

  CHECK_THROWS_AS(reduce(ReductionKind::generalized, 1.0), std::invalid_argument);
  FractionalParams base(1.1, 0.3, 0.7, -0.2, 0.4);
  FractionalParams same = reduce(ReductionKind::generalized, base);
  CHECK(same.alpha == base.alpha);
  CHECK(same.beta == base.beta);
  CHECK(same.rho == base.rho);
  CHECK(same.k == base.k);
  CHECK(same.eta == base.eta);

  // The base overload reuses alpha, rho, eta from the given parameters.
  FractionalParams ek2 = reduce(ReductionKind::erdelyi_kober, base);
  CHECK(ek2.alpha == base.alpha);
  CHECK(ek2.rho == base.rho);
  CHECK(ek2.eta == base.eta);
  CHECK(ek2.k == doctest::Approx(-base.rho * (base.alpha + base.eta)));
}

TEST_CASE("diagnostics flow through the convenience front-end") {
  FractionalParams p(1.5, 0.5, 0.5, 0.0, 0.0);
  OperatorResult diag;
  double v = katugampola_integral(p, parse_integrand("exp:1"), EvalPoint(1.0),
                                  fracineq::QuadratureConfig{}, &diag);
  CHECK(v == doctest::Approx(diag.value));
  CHECK(diag.converged);
  CHECK(diag.n_used >= 16);
  CHECK(diag.est_err >= 0.0);
  CHECK(diag.est_err <= 1e-8 * std::fabs(diag.value));
}
