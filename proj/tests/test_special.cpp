#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "fracineq/special.hpp"

using namespace fracineq;

namespace {

double rel_err(double got, double want) {
  return std::fabs(got - want) / std::fabs(want);
}

// Reference values computed with 50-digit arbitrary-precision arithmetic.
struct GammaCase {
  double z;
  double value;
};
constexpr GammaCase kGammaTable[] = {
    {0.5, 1.772453850905516027298},    {0.75, 1.225416702465177645129},
    {1.5, 0.8862269254527580136491},   {4.5, 11.63172839656744892914},
    {7.25, 1155.381013919989687203},   {15.5, 334838609873.5564569724},
    {24.0, 2.585201673888497664e+22},  {33.75, 3.612655598733190574037e+36},
    {50.0, 6.082818640342675608723e+62}, {66.6, 1.016874589612983814053e+92},
    {100.0, 9.33262154439441526817e+155}, {125.0, 1.506141741511140879795e+207},
    {150.0, 3.808922637630569726986e+260}, {170.0, 4.269068009004705274939e+304},
};

}  // namespace

TEST_CASE("gamma matches high-precision references to 1e-13") {
  for (const auto& c : kGammaTable) {
    CAPTURE(c.z);
    CHECK(rel_err(gamma_fn(c.z), c.value) <= 1e-13);
  }
}

TEST_CASE("gamma integer values are exact factorials") {
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_fn(2.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(gamma_fn(11.0) == doctest::Approx(3628800.0).epsilon(1e-14));
}

TEST_CASE("gamma recurrence z*Gamma(z) = Gamma(z+1)") {
  for (double z = 0.25; z < 170.0; z += 0.739) {
    CAPTURE(z);
    CHECK(rel_err(z * gamma_fn(z), gamma_fn(z + 1.0)) <= 5e-13);
  }
}

TEST_CASE("gamma domain and overflow errors") {
  CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
  CHECK_THROWS_AS(gamma_fn(-1.5), std::domain_error);
  CHECK_THROWS_AS(gamma_fn(172.0), std::overflow_error);
  CHECK(std::isfinite(gamma_fn(171.5)));
}

TEST_CASE("lgamma agrees with log of gamma") {
  for (double z = 0.3; z < 100.0; z += 1.137) {
    CAPTURE(z);
    CHECK(std::fabs(lgamma_fn(z) - std::log(gamma_fn(z))) <=
          1e-12 * std::max(1.0, std::fabs(std::log(gamma_fn(z)))));
  }
}

TEST_CASE("beta function identities") {
  CHECK(rel_err(beta_fn(1.0, 1.0), 1.0) <= 1e-14);
  CHECK(rel_err(beta_fn(1.5, 0.5), 1.5707963267948966) <= 1e-13);
  CHECK(rel_err(beta_fn(2.0, 0.5), 4.0 / 3.0) <= 1e-13);
  for (double a = 0.3; a < 20.0; a += 2.31) {
    for (double b = 0.4; b < 20.0; b += 3.17) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(rel_err(beta_fn(a, b), beta_fn(b, a)) <= 1e-14);
      CHECK(rel_err(beta_fn(a, b), gamma_fn(a) * gamma_fn(b) / gamma_fn(a + b)) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(beta_fn(0.0, 1.0), std::domain_error);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(FractionalParams(0.0, 0.0, 1.0, 0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(FractionalParams(1.0, 0.0, 0.0, 0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(FractionalParams(1.0, 0.0, 1.0, 0.0, -1.0), std::domain_error);
  CHECK_NOTHROW(FractionalParams(0.5, -1.0, 2.0, -0.5, -0.5));
  CHECK_THROWS_AS(EvalPoint(0.0), std::domain_error);
  CHECK_THROWS_AS(EvalPoint(-2.0), std::domain_error);
}

TEST_CASE("normalization constant") {
  // Lambda = Gamma(eta+1)/Gamma(eta+alpha+1) * rho^-beta * x^(k+rho(eta+alpha))
  FractionalParams rl(1.0, 1.0, 1.0, 0.0, 0.0);
  CHECK(rel_err(lambda_fn(rl, EvalPoint(1.0)), 1.0) <= 1e-14);
  CHECK(rel_err(lambda_fn(rl, EvalPoint(2.0)), 2.0) <= 1e-14);

  FractionalParams p(0.5, 0.25, 2.0, 0.5, 0.5);
  double expect = gamma_fn(1.5) / gamma_fn(2.0) * std::pow(2.0, -0.25) *
                  std::pow(1.5, 0.5 + 2.0 * (0.5 + 0.5));
  CHECK(rel_err(lambda_fn(p, EvalPoint(1.5)), expect) <= 1e-13);

  FractionalParams big(1.0, 0.0, 1.0, 300.0, 0.0);
  CHECK_THROWS_AS(lambda_fn(big, EvalPoint(100.0)), std::overflow_error);
}
