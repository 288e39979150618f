#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "fracineq/functions.hpp"
#include "fracineq/quadrature.hpp"
#include "fracineq/special.hpp"

namespace fracineq {

enum class ReductionKind { riemann_liouville, katugampola, erdelyi_kober, liouville_a0, generalized };

// A sampled function together with the exponent of its leading tau^sigma
// behavior at 0+. For products of catalog integrands the strengths add.
struct OperatorInput {
  std::function<double(double)> f;
  double strength = 0.0;
};

OperatorInput operator_input(const Integrand& a);
OperatorInput operator_input(const Integrand& a, const Integrand& b);
OperatorInput operator_input(const Integrand& a, const Integrand& b, const Integrand& c);

struct OperatorResult {
  double value = 0.0;
  std::size_t n_used = 0;
  double est_err = 0.0;
  bool converged = false;
};

// Left-sided generalized fractional integral at x (lower terminal 0):
//
//   rho^(1-beta) x^k / Gamma(alpha) *
//     integral_0^x tau^(rho(eta+1)-1) (x^rho - tau^rho)^(alpha-1) f(tau) dtau.
//
// Evaluated through the substitution tau = x s^c with an integer grading
// c >= 1, which turns the integral into a Gauss-Jacobi form on [0,1] with
// weight s^(c rho (eta+1) - 1 + c sigma) (1-s)^(alpha-1), where sigma is the
// declared leading strength of f; the remaining factor
// ((1-s^(c rho))/(1-s))^(alpha-1) * f(x s^c) * s^(-c sigma) is handed to
// integrate_single as the smooth part. Folding sigma into the weight keeps
// the sampled part bounded for fractional and negative strengths alike. c is
// chosen so that c*rho (and c*sigma where it helps) is an integer whenever
// small-denominator rationals fit (see select_grading); f itself is only
// ever sampled as a black box at physical points in (0, x).
//
// Throws std::domain_error when strength <= -rho(eta+1) (the integral
// diverges at 0). Non-convergence is reported through the result flag.
OperatorResult apply_operator(const FractionalParams& p, const OperatorInput& in,
                              EvalPoint x, const QuadratureConfig& cfg = {});

// Convenience front-end over apply_operator for a single catalog integrand.
// When diag is non-null the quadrature diagnostics are written there.
double katugampola_integral(const FractionalParams& p, const Integrand& f, EvalPoint x,
                            const QuadratureConfig& cfg = {}, OperatorResult* diag = nullptr);

// Analytic value of the operator on tau^sigma:
//   rho^(-beta) x^(k + rho(eta+alpha) + sigma) *
//     Gamma(eta + sigma/rho + 1) / Gamma(eta + sigma/rho + alpha + 1).
// Requires sigma > -rho(eta+1); this is the primary accuracy oracle.
double power_closed_form(const FractionalParams& p, double sigma, EvalPoint x);

// Substitution grading for the pair (rho, leading strengths of the sampled
// function): the smallest c <= 24 such that c*rho is an integer and
// c*sigma is an integer for every positive fractional strength that has a
// small-denominator rational representation (denominator <= 12). Falls back
// to clearing rho alone when the combined grading would exceed the cap, and
// to c = 1 when rho itself has no small denominator (convergence is then
// only algebraic and shows up in the converged flag). Exposed for tests.
unsigned select_grading(double rho, const std::vector<double>& strengths);

// Precomputed substitution data for one integration axis, tau = x s^c.
// Used by apply_operator and by the double-kernel assemblies built on the
// same change of variables.
struct GradedAxis {
  unsigned c = 1;
  double m = 1.0;         // c * rho
  long m_int = 0;         // round(m) when m is an integer, 0 otherwise
  double eta_graded = 0.0;  // c rho (eta+1) - 1

  double map(double x, double s) const;  // physical point x * s^c
  // ((1 - s^m) / (1 - s))^e, the non-classical part of the transformed
  // kernel; exact polynomial evaluation when m is an integer.
  double kernel_factor(double s, double e) const;
};

GradedAxis graded_axis(double rho, double eta, const std::vector<double>& strengths);

// Named classical specializations of the five-parameter operator. The
// (alpha)-only overload serves riemann_liouville / liouville_a0 (both fix
// rho=1, k=0, eta=0; beta is inert at rho=1 and pinned to alpha for
// reproducible output), katugampola (beta=alpha, k=0, eta=0, caller's rho)
// and erdelyi_kober (beta=0, k=-rho(alpha+eta), caller's rho and eta).
// `generalized` carries no specialization and requires the full-parameter
// overload, which returns its argument unchanged.
FractionalParams reduce(ReductionKind kind, double alpha, double rho = 1.0, double eta = 0.0);
FractionalParams reduce(ReductionKind kind, const FractionalParams& base);

}  // namespace fracineq
