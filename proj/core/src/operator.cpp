#include "fracineq/operator.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fracineq {

namespace {

// Smallest q in [1, 12] with v*q within 1e-9 (relative) of an integer;
// 0 when no small denominator fits.
unsigned small_denominator(double v) {
  for (unsigned q = 1; q <= 12; ++q) {
    double scaled = v * static_cast<double>(q);
    if (std::fabs(scaled - std::round(scaled)) <= 1e-9 * std::max(1.0, std::fabs(scaled))) {
      return q;
    }
  }
  return 0;
}

// (1 - s^m) / (1 - s) for non-integer m > 0, continuous at s = 1 with value m.
double geometric_ratio(double m, double s) {
  double d = s - 1.0;
  if (d == 0.0) return m;
  return std::expm1(m * std::log1p(d)) / d;
}

// Same ratio for integer m: the exact polynomial 1 + s + ... + s^(m-1).
double geometric_ratio_int(long m, double s) {
  double acc = 1.0;
  for (long j = 1; j < m; ++j) acc = acc * s + 1.0;
  return acc;
}

}  // namespace

unsigned select_grading(double rho, const std::vector<double>& strengths) {
  unsigned qr = small_denominator(rho);
  if (qr == 0) return 1;
  unsigned c = qr;
  for (double sigma : strengths) {
    if (!(sigma > 0.0)) continue;  // only positive leading powers benefit from clearing
    unsigned qs = small_denominator(sigma);
    if (qs == 0) continue;
    c = std::lcm(c, qs);
    if (c > 24) return qr;
  }
  return c;
}

double GradedAxis::map(double x, double s) const {
  return x * std::pow(s, static_cast<double>(c));
}

double GradedAxis::kernel_factor(double s, double e) const {
  if (e == 0.0 || m == 1.0) return 1.0;
  double psi = m_int >= 1 ? geometric_ratio_int(m_int, s) : geometric_ratio(m, s);
  return std::pow(psi, e);
}

GradedAxis graded_axis(double rho, double eta, const std::vector<double>& strengths) {
  GradedAxis axis;
  axis.c = select_grading(rho, strengths);
  double cd = static_cast<double>(axis.c);
  axis.m = cd * rho;
  long mi = std::lround(axis.m);
  axis.m_int =
      (mi >= 1 && std::fabs(axis.m - static_cast<double>(mi)) <= 1e-9 * std::max(1.0, axis.m))
          ? mi
          : 0;
  axis.eta_graded = cd * rho * (eta + 1.0) - 1.0;
  return axis;
}

OperatorInput operator_input(const Integrand& a) {
  return {[a](double t) { return a.eval(t); }, a.strength_at_zero()};
}

OperatorInput operator_input(const Integrand& a, const Integrand& b) {
  return {[a, b](double t) { return a.eval(t) * b.eval(t); },
          a.strength_at_zero() + b.strength_at_zero()};
}

OperatorInput operator_input(const Integrand& a, const Integrand& b, const Integrand& c) {
  return {[a, b, c](double t) { return a.eval(t) * b.eval(t) * c.eval(t); },
          a.strength_at_zero() + b.strength_at_zero() + c.strength_at_zero()};
}

OperatorResult apply_operator(const FractionalParams& p, const OperatorInput& in,
                              EvalPoint x, const QuadratureConfig& cfg) {
  if (!(in.strength > -p.rho * (p.eta + 1.0))) {
    throw std::domain_error(
        "apply_operator: integrand grows like tau^sigma with sigma <= -rho(eta+1); "
        "the integral diverges at 0");
  }

  const GradedAxis axis = graded_axis(p.rho, p.eta, {in.strength});
  const double am1 = p.alpha - 1.0;
  const double xv = x.x;

  // The declared leading power of f moves into the quadrature weight:
  // f(x s^c) = s^(c sigma) * (smooth part), so dividing the sample by
  // s^(c sigma) and raising the weight exponent by the same amount leaves a
  // smooth integrand even for fractional or negative sigma. The divergence
  // check above is exactly the condition that keeps the shifted exponent
  // above -1.
  const double w = static_cast<double>(axis.c) * in.strength;

  auto smooth = [&](double s) {
    double g = axis.kernel_factor(s, am1) * in.f(axis.map(xv, s));
    return w == 0.0 ? g : g * std::pow(s, -w);
  };

  QuadResult q = integrate_single(p.alpha, axis.eta_graded + w, smooth, cfg);

  double pref = std::pow(p.rho, 1.0 - p.beta) / gamma_fn(p.alpha) * static_cast<double>(axis.c) *
                std::pow(xv, p.k + p.rho * (p.eta + p.alpha));
  if (!std::isfinite(pref)) {
    throw std::overflow_error("apply_operator: prefactor exceeds floating range");
  }

  OperatorResult res;
  res.value = pref * q.value;
  res.n_used = q.n_used;
  res.est_err = std::fabs(pref) * q.est_err;
  res.converged = q.converged;
  return res;
}

double katugampola_integral(const FractionalParams& p, const Integrand& f, EvalPoint x,
                            const QuadratureConfig& cfg, OperatorResult* diag) {
  OperatorResult r = apply_operator(p, operator_input(f), x, cfg);
  if (diag != nullptr) *diag = r;
  return r.value;
}

double power_closed_form(const FractionalParams& p, double sigma, EvalPoint x) {
  if (!(sigma > -p.rho * (p.eta + 1.0))) {
    throw std::domain_error("power_closed_form: require sigma > -rho(eta+1), got sigma = " +
                            std::to_string(sigma));
  }
  double w = p.eta + sigma / p.rho;
  double ratio = std::exp(lgamma_fn(w + 1.0) - lgamma_fn(w + p.alpha + 1.0));
  return std::pow(p.rho, -p.beta) * std::pow(x.x, p.k + p.rho * (p.eta + p.alpha) + sigma) *
         ratio;
}

FractionalParams reduce(ReductionKind kind, double alpha, double rho, double eta) {
  switch (kind) {
    case ReductionKind::riemann_liouville:
    case ReductionKind::liouville_a0:
      // beta is inert at rho=1; pinned to alpha for reproducible reports.
      return FractionalParams(alpha, alpha, 1.0, 0.0, 0.0);
    case ReductionKind::katugampola:
      return FractionalParams(alpha, alpha, rho, 0.0, 0.0);
    case ReductionKind::erdelyi_kober:
      return FractionalParams(alpha, 0.0, rho, -rho * (alpha + eta), eta);
    case ReductionKind::generalized:
      throw std::invalid_argument(
          "reduce: 'generalized' carries no specialization; pass full parameters");
  }
  throw std::invalid_argument("reduce: unknown kind");
}

FractionalParams reduce(ReductionKind kind, const FractionalParams& base) {
  if (kind == ReductionKind::generalized) return base;
  return reduce(kind, base.alpha, base.rho, base.eta);
}

}  // namespace fracineq
