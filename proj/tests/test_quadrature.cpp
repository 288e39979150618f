#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "fracineq/quadrature.hpp"
#include "fracineq/special.hpp"

using fracineq::beta_fn;
using fracineq::integrate_double;
using fracineq::integrate_single;
using fracineq::jacobi_rule;
using fracineq::QuadratureConfig;
using fracineq::QuadResult;

namespace {

double rule_moment(const fracineq::JacobiRule& r, int degree) {
  double s = 0.0;
  for (std::size_t i = 0; i < r.n; ++i) s += r.weights[i] * std::pow(r.nodes[i], degree);
  return s;
}

}  // namespace

TEST_CASE("rule metadata and basic structure") {
  auto r = jacobi_rule(1.5, -0.25, 8);
  CHECK(r.alpha == 1.5);
  CHECK(r.eta == -0.25);
  CHECK(r.n == 8);
  CHECK(r.nodes.size() == 8);
  CHECK(r.weights.size() == 8);
  for (std::size_t i = 0; i < r.n; ++i) {
    CHECK(r.nodes[i] > 0.0);
    CHECK(r.nodes[i] < 1.0);
    CHECK(r.weights[i] > 0.0);
    if (i > 0) CHECK(r.nodes[i] > r.nodes[i - 1]);
  }
}

TEST_CASE("two-point Legendre rule on the unit interval") {
  auto r = jacobi_rule(1.0, 0.0, 2);
  const double off = 1.0 / (2.0 * std::sqrt(3.0));
  CHECK(r.nodes[0] == doctest::Approx(0.5 - off).epsilon(1e-14));
  CHECK(r.nodes[1] == doctest::Approx(0.5 + off).epsilon(1e-14));
  CHECK(r.weights[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(r.weights[1] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("weights sum to the zeroth moment") {
  for (double alpha : {0.5, 1.0, 2.5}) {
    for (double eta : {-0.5, 0.0, 1.0}) {
      auto r = jacobi_rule(alpha, eta, 12);
      double s = 0.0;
      for (double w : r.weights) s += w;
      CHECK(s == doctest::Approx(beta_fn(eta + 1.0, alpha)).epsilon(1e-13));
    }
  }

  // B(1.5, 0.5) = pi/2 for the square-root weight pair.
  auto r = jacobi_rule(0.5, 0.5, 8);
  double s = 0.0;
  for (double w : r.weights) s += w;
  CHECK(s == doctest::Approx(std::acos(-1.0) / 2.0).epsilon(1e-13));
}

TEST_CASE("monomial exactness through degree 2n-3") {
  for (double alpha : {0.5, 1.0, 2.5}) {
    for (double eta : {-0.5, 0.0, 1.0}) {
      for (std::size_t n : {2u, 3u, 5u, 9u, 16u}) {
        auto r = jacobi_rule(alpha, eta, n);
        for (int m = 0; m <= static_cast<int>(2 * n - 3); ++m) {
          const double exact = beta_fn(eta + m + 1.0, alpha);
          const double q = rule_moment(r, m);
          CHECK(std::fabs(q - exact) <= 1e-11 * exact);
        }
      }
    }
  }
}

TEST_CASE("rule preconditions") {
  CHECK_THROWS_AS(jacobi_rule(1.0, 0.0, 0), std::domain_error);
  CHECK_THROWS_AS(jacobi_rule(1.0, 0.0, 1), std::domain_error);
  CHECK_THROWS_AS(jacobi_rule(0.0, 0.0, 4), std::domain_error);
  CHECK_THROWS_AS(jacobi_rule(-0.5, 0.0, 4), std::domain_error);
  CHECK_THROWS_AS(jacobi_rule(1.0, -1.0, 4), std::domain_error);
}

TEST_CASE("single integrals with known values") {
  auto one = [](double) { return 1.0; };
  auto sq = [](double t) { return t * t; };
  auto ex = [](double t) { return std::exp(t); };

  QuadResult a = integrate_single(1.0, 0.0, one);
  CHECK(a.converged);
  CHECK(a.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(a.n_used >= 16);

  QuadResult b = integrate_single(1.0, 0.0, sq);
  CHECK(b.converged);
  CHECK(b.value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  QuadResult c = integrate_single(0.5, 1.0, one);
  CHECK(c.converged);
  CHECK(c.value == doctest::Approx(4.0 / 3.0).epsilon(1e-12));

  QuadResult d = integrate_single(1.0, 0.0, ex);
  CHECK(d.converged);
  CHECK(d.value == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));
}

TEST_CASE("successive-difference estimate shrinks as the doubling cap rises") {
  // Raising n_max allows more doublings; on factors the rule handles, the
  // reported successive difference must not grow with extra refinement.
  auto run_with_cap = [](auto f, std::size_t cap) {
    QuadratureConfig cfg;
    cfg.n_start = 16;
    cfg.n_max = cap;
    cfg.rel_tol = 1e-16;
    return integrate_single(1.0, 0.0, f, cfg);
  };

  auto rootish = [](double t) { return std::sqrt(t); };
  QuadResult r32 = run_with_cap(rootish, 32);
  QuadResult r64 = run_with_cap(rootish, 64);
  QuadResult r128 = run_with_cap(rootish, 128);
  CHECK(r64.est_err <= r32.est_err);
  CHECK(r128.est_err <= r64.est_err);
  CHECK(r128.value == doctest::Approx(2.0 / 3.0).epsilon(1e-6));

  // A smooth factor bottoms out at rounding level, so allow noise there.
  auto smooth = [](double t) { return std::exp(t); };
  QuadResult s32 = run_with_cap(smooth, 32);
  QuadResult s64 = run_with_cap(smooth, 64);
  CHECK(s64.est_err <= s32.est_err + 1e-14 * s64.value);
}

TEST_CASE("convergence flag reports failure honestly") {
  QuadratureConfig tight;
  tight.n_start = 16;
  tight.n_max = 64;
  tight.rel_tol = 1e-14;
  auto kink = [](double t) { return std::fabs(t - 1.0 / 3.1415926); };
  QuadResult r = integrate_single(1.0, 0.0, kink, tight);
  CHECK_FALSE(r.converged);
  CHECK(r.est_err > 0.0);
}

TEST_CASE("double integrals: tensor route") {
  auto one = [](double, double) { return 1.0; };
  auto prod = [](double t, double u) { return t * u; };
  auto sqdiff = [](double t, double u) { return (t - u) * (t - u); };

  QuadResult a = integrate_double(1.0, 0.0, 1.0, 0.0, one, false);
  CHECK(a.converged);
  CHECK(a.value == doctest::Approx(1.0).epsilon(1e-12));

  QuadResult b = integrate_double(1.0, 0.0, 1.0, 0.0, prod, false);
  CHECK(b.value == doctest::Approx(0.25).epsilon(1e-12));

  QuadResult c = integrate_double(1.0, 0.0, 1.0, 0.0, sqdiff, false);
  CHECK(c.value == doctest::Approx(1.0 / 6.0).epsilon(1e-12));

  QuadResult w = integrate_double(0.7, -0.3, 2.5, 0.5, one, false);
  CHECK(w.value ==
        doctest::Approx(beta_fn(0.7, 0.7) * beta_fn(1.5, 2.5)).epsilon(1e-12));
}

TEST_CASE("double integrals: diagonal split handles the |t-u| kink") {
  auto absdiff = [](double t, double u) { return std::fabs(t - u); };
  QuadResult s = integrate_double(1.0, 0.0, 1.0, 0.0, absdiff, true);
  CHECK(s.converged);
  CHECK(s.value == doctest::Approx(1.0 / 3.0).epsilon(1e-11));

  // Same weight, kinked factor against a nonuniform kernel:
  // int int (1-u) |t-u| dt du = 1/6.
  auto g = [](double t, double u) { return std::fabs(t - u); };
  QuadResult s2 = integrate_double(1.0, 0.0, 2.0, 0.0, g, true);
  CHECK(s2.converged);
  CHECK(s2.value == doctest::Approx(1.0 / 6.0).epsilon(1e-11));
}

TEST_CASE("split and tensor agree on smooth integrands") {
  // For non-integer alpha the triangle maps leave a (1 - t v)^(alpha-1)
  // factor with limited smoothness at the (1,1) corner, so the split route
  // is a few digits short of the tensor route there; integer alpha is exact.
  auto smooth = [](double t, double u) { return std::exp(t + 0.5 * u) + t * u; };
  for (double alpha : {0.6, 1.0, 1.8}) {
    QuadResult tensor = integrate_double(alpha, -0.2, alpha, 0.4, smooth, false);
    QuadResult split = integrate_double(alpha, -0.2, alpha, 0.4, smooth, true);
    CHECK(tensor.converged);
    CHECK(std::fabs(tensor.value - split.value) <= 5e-8 * std::fabs(tensor.value));
  }
  QuadResult tensor1 = integrate_double(1.0, -0.2, 1.0, 0.4, smooth, false);
  QuadResult split1 = integrate_double(1.0, -0.2, 1.0, 0.4, smooth, true);
  CHECK(split1.converged);
  CHECK(std::fabs(tensor1.value - split1.value) <= 1e-10 * std::fabs(tensor1.value));
}

TEST_CASE("split route is symmetric under axis exchange") {
  auto g = [](double t, double u) { return std::fabs(t - u) * (1.0 + t + 2.0 * u); };
  auto gt = [&](double t, double u) { return g(u, t); };
  QuadResult a = integrate_double(0.8, -0.4, 1.7, 0.3, g, true);
  QuadResult b = integrate_double(1.7, 0.3, 0.8, -0.4, gt, true);
  CHECK(a.converged);
  CHECK(b.converged);
  CHECK(a.value == doctest::Approx(b.value).epsilon(1e-10));
}
