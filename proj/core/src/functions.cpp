#include "fracineq/functions.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "fracineq/quadrature.hpp"

namespace fracineq {

namespace {

[[noreturn]] void parse_fail(const std::string& spec, std::size_t pos, const char* what) {
  throw std::invalid_argument("parse_integrand: " + std::string(what) + " at position " +
                              std::to_string(pos) + " in '" + spec + "'");
}

std::vector<double> parse_numbers(const std::string& spec, std::size_t start) {
  std::vector<double> out;
  std::size_t pos = start;
  const char* end = spec.data() + spec.size();
  for (;;) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(spec.data() + pos, end, v);
    if (ec != std::errc()) parse_fail(spec, pos, "expected number");
    out.push_back(v);
    pos = static_cast<std::size_t>(ptr - spec.data());
    if (pos == spec.size()) return out;
    if (spec[pos] != ',') parse_fail(spec, pos, "expected ','");
    ++pos;
    if (pos == spec.size()) parse_fail(spec, pos, "expected number");
  }
}

Monotonicity poly_monotonicity(const std::vector<double>& c) {
  bool any_pos = false, any_neg = false;
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] > 0.0) any_pos = true;
    if (c[i] < 0.0) any_neg = true;
  }
  if (!any_pos && !any_neg) return Monotonicity::none;
  if (!any_neg) return Monotonicity::increasing;
  if (!any_pos) return Monotonicity::decreasing;
  return Monotonicity::unknown;
}

double sign_dir(Monotonicity m) {
  if (m == Monotonicity::increasing) return 1.0;
  if (m == Monotonicity::decreasing) return -1.0;
  return 0.0;
}

}  // namespace

double Integrand::eval(double tau) const {
  switch (kind_) {
    case Kind::pow:
      return std::pow(tau, coef_[0]);
    case Kind::poly: {
      double acc = 0.0;
      for (std::size_t i = coef_.size(); i-- > 0;) acc = acc * tau + coef_[i];
      return acc;
    }
    case Kind::exp_scaled:
      return std::exp(coef_[0] * tau);
    case Kind::log1p_fn:
      return std::log1p(tau);
    case Kind::affine:
      return coef_[0] + coef_[1] * tau;
    case Kind::constant:
      return coef_[0];
  }
  return 0.0;
}

double Integrand::derivative(double tau) const {
  switch (kind_) {
    case Kind::pow:
      if (coef_[0] == 0.0) return 0.0;
      return coef_[0] * std::pow(tau, coef_[0] - 1.0);
    case Kind::poly: {
      double acc = 0.0;
      for (std::size_t i = coef_.size(); i-- > 1;)
        acc = acc * tau + coef_[i] * static_cast<double>(i);
      return acc;
    }
    case Kind::exp_scaled:
      return coef_[0] * std::exp(coef_[0] * tau);
    case Kind::log1p_fn:
      return 1.0 / (1.0 + tau);
    case Kind::affine:
      return coef_[1];
    case Kind::constant:
      return 0.0;
  }
  return 0.0;
}

Integrand parse_integrand(const std::string& spec) {
  std::size_t colon = spec.find(':');
  std::string name = spec.substr(0, colon == std::string::npos ? spec.size() : colon);
  Integrand f;
  f.spec_ = spec;

  auto args_at = [&](std::size_t expect_min, std::size_t expect_max) {
    if (colon == std::string::npos) parse_fail(spec, spec.size(), "expected ':' and arguments");
    std::vector<double> a = parse_numbers(spec, colon + 1);
    if (a.size() < expect_min || a.size() > expect_max)
      parse_fail(spec, colon + 1, "wrong number of arguments");
    return a;
  };

  if (name == "pow") {
    f.kind_ = Integrand::Kind::pow;
    f.coef_ = args_at(1, 1);
    double p = f.coef_[0];
    f.strength_ = p;
    f.monotone_ = p > 0.0   ? Monotonicity::increasing
                  : p < 0.0 ? Monotonicity::decreasing
                            : Monotonicity::none;
  } else if (name == "poly") {
    f.kind_ = Integrand::Kind::poly;
    if (colon == std::string::npos) parse_fail(spec, spec.size(), "expected ':' and arguments");
    f.coef_ = parse_numbers(spec, colon + 1);
    f.monotone_ = poly_monotonicity(f.coef_);
  } else if (name == "exp") {
    f.kind_ = Integrand::Kind::exp_scaled;
    f.coef_ = args_at(1, 1);
    double c = f.coef_[0];
    f.monotone_ = c > 0.0   ? Monotonicity::increasing
                  : c < 0.0 ? Monotonicity::decreasing
                            : Monotonicity::none;
  } else if (name == "log1p") {
    if (colon != std::string::npos) parse_fail(spec, colon, "log1p takes no arguments");
    f.kind_ = Integrand::Kind::log1p_fn;
    f.monotone_ = Monotonicity::increasing;
  } else if (name == "affine") {
    f.kind_ = Integrand::Kind::affine;
    f.coef_ = args_at(2, 2);
    double b = f.coef_[1];
    f.monotone_ = b > 0.0   ? Monotonicity::increasing
                  : b < 0.0 ? Monotonicity::decreasing
                            : Monotonicity::none;
  } else if (name == "const") {
    f.kind_ = Integrand::Kind::constant;
    f.coef_ = args_at(1, 1);
    f.monotone_ = Monotonicity::none;
  } else {
    parse_fail(spec, 0, "unknown function name");
  }
  return f;
}

SynchronousPair certify_pair(const Integrand& phi, const Integrand& psi, double x_max) {
  if (!(x_max > 0.0)) throw std::domain_error("certify_pair: x_max must be > 0");
  SynchronousPair pair{phi, psi, Synchrony::unknown};

  // A constant factor makes (phi(t)-phi(g))(psi(t)-psi(g)) vanish identically.
  if (phi.is_constant() || psi.is_constant()) {
    pair.certified = Synchrony::synchronous;
    return pair;
  }
  double d1 = sign_dir(phi.monotone());
  double d2 = sign_dir(psi.monotone());
  if (d1 != 0.0 && d2 != 0.0) {
    pair.certified = d1 * d2 > 0.0 ? Synchrony::synchronous : Synchrony::asynchronous;
    return pair;
  }

  constexpr int kGrid = 200;
  std::vector<double> pv(kGrid), qv(kGrid);
  for (int i = 0; i < kGrid; ++i) {
    double t = x_max * static_cast<double>(i + 1) / kGrid;
    pv[i] = phi.eval(t);
    qv[i] = psi.eval(t);
  }
  double dmin = 0.0, dmax = 0.0;
  for (int i = 0; i < kGrid; ++i) {
    for (int j = i + 1; j < kGrid; ++j) {
      double d = (pv[j] - pv[i]) * (qv[j] - qv[i]);
      dmin = std::min(dmin, d);
      dmax = std::max(dmax, d);
    }
  }
  double eps = 1e-12 * std::max({1.0, dmax, -dmin});
  if (dmin >= -eps) {
    pair.certified = Synchrony::synchronous;
  } else if (dmax <= eps) {
    pair.certified = Synchrony::asynchronous;
  }
  return pair;
}

HolderPair::HolderPair(double s_, double v_) : s(s_), v(v_) {
  if (!(s > 1.0) || !(v > 1.0)) {
    throw std::domain_error("HolderPair: exponents must be > 1");
  }
  if (std::fabs(1.0 / s + 1.0 / v - 1.0) > 1e-12) {
    throw std::domain_error("HolderPair: 1/s + 1/v must equal 1");
  }
}

double lp_norm_derivative(const Integrand& f, double p, double T) {
  if (!f.has_derivative()) throw std::domain_error("lp_norm_derivative: missing derivative");
  if (!(p >= 1.0)) throw std::domain_error("lp_norm_derivative: p must be >= 1");
  if (!(T > 0.0)) throw std::domain_error("lp_norm_derivative: T must be > 0");
  auto g = [&](double r) { return std::pow(std::fabs(f.derivative(T * r)), p); };
  QuadResult q = integrate_single(1.0, 0.0, g, QuadratureConfig{});
  return std::pow(T * q.value, 1.0 / p);
}

}  // namespace fracineq
