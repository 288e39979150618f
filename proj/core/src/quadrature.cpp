#include "fracineq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fracineq/special.hpp"

namespace fracineq {

namespace {

// Implicit QL with shifts on a symmetric tridiagonal matrix, accumulating the
// first component of each eigenvector (the IQPACK scheme). d holds the
// diagonal, e the off-diagonal (e[n-1] unused), z the first-row accumulator.
// On return d carries the eigenvalues ascending and z[i] the first component
// of the i-th normalized eigenvector.
void imtqlx(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  if (n == 1) return;
  const double prec = 2.22e-16;
  const int max_iter = 30;
  e[n - 1] = 0.0;
  for (int l = 1; l <= n; ++l) {
    int iter = 0;
    for (;;) {
      int m = l;
      for (; m <= n; ++m) {
        if (m == n) break;
        if (std::fabs(e[m - 1]) <=
            prec * (std::fabs(d[m - 1]) + std::fabs(d[m]))) {
          break;
        }
      }
      double p = d[l - 1];
      if (m == l) break;
      if (iter >= max_iter) {
        throw std::runtime_error("jacobi_rule: eigenvalue iteration failed to converge");
      }
      ++iter;
      double g = (d[l] - p) / (2.0 * e[l - 1]);
      double r = std::sqrt(g * g + 1.0);
      g = d[m - 1] - p + e[l - 1] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      p = 0.0;
      for (int ii = 1; ii <= m - l; ++ii) {
        int i = m - ii;
        double f = s * e[i - 1];
        double b = c * e[i - 1];
        if (std::fabs(g) <= std::fabs(f)) {
          c = g / f;
          r = std::sqrt(c * c + 1.0);
          e[i] = f * r;
          s = 1.0 / r;
          c *= s;
        } else {
          s = f / g;
          r = std::sqrt(s * s + 1.0);
          e[i] = g * r;
          c = 1.0 / r;
          s *= c;
        }
        g = d[i] - p;
        r = (d[i - 1] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i] = g + p;
        g = c * r - b;
        f = z[i];
        z[i] = s * z[i - 1] + c * f;
        z[i - 1] = c * z[i - 1] - s * f;
      }
      d[l - 1] -= p;
      e[l - 1] = g;
      e[m - 1] = 0.0;
    }
  }
  // Sort eigenvalues (and first components) ascending.
  for (int ii = 2; ii <= n; ++ii) {
    int i = ii - 1;
    int kmin = i;
    double p = d[i - 1];
    for (int j = ii; j <= n; ++j) {
      if (d[j - 1] < p) {
        kmin = j;
        p = d[j - 1];
      }
    }
    if (kmin != i) {
      d[kmin - 1] = d[i - 1];
      d[i - 1] = p;
      std::swap(z[kmin - 1], z[i - 1]);
    }
  }
}

double magnitude_sum_single(const JacobiRule& r, const std::function<double(double)>& f,
                            double* signed_sum) {
  double s = 0.0;
  double mag = 0.0;
  for (std::size_t i = 0; i < r.n; ++i) {
    double v = f(r.nodes[i]);
    s += r.weights[i] * v;
    mag += r.weights[i] * std::fabs(v);
  }
  *signed_sum = s;
  return mag;
}

}  // namespace

JacobiRule jacobi_rule(double alpha, double eta, std::size_t n) {
  if (!(alpha > 0.0)) throw std::domain_error("jacobi_rule: alpha must be > 0");
  if (!(eta > -1.0)) throw std::domain_error("jacobi_rule: eta must be > -1");
  if (n < 2) throw std::domain_error("jacobi_rule: n must be >= 2");

  // Recurrence coefficients for the Jacobi weight (1-x)^aJ (1+x)^bJ on
  // [-1, 1], aJ = alpha - 1, bJ = eta, then affinely mapped to [0, 1] with
  // weight t^eta (1-t)^(alpha-1).
  const double aJ = alpha - 1.0;
  const double bJ = eta;
  const double ab = aJ + bJ;

  std::vector<double> diag(n), off(n);
  diag[0] = (bJ - aJ) / (ab + 2.0);
  if (n > 1) {
    off[0] = std::sqrt(4.0 * (1.0 + aJ) * (1.0 + bJ) /
                       ((ab + 3.0) * (ab + 2.0) * (ab + 2.0)));
  }
  for (std::size_t i = 2; i <= n; ++i) {
    double abi = 2.0 * static_cast<double>(i) + ab;
    diag[i - 1] = (bJ * bJ - aJ * aJ) / ((abi - 2.0) * abi);
    if (i < n) {
      double num = 4.0 * static_cast<double>(i) * (static_cast<double>(i) + aJ) *
                   (static_cast<double>(i) + bJ) * (static_cast<double>(i) + ab);
      off[i - 1] = std::sqrt(num / ((abi * abi - 1.0) * abi * abi));
    }
  }

  // Map x in [-1,1] to t = (1+x)/2 in [0,1]; the three-term recurrence maps
  // affinely, total mass becomes B(eta+1, alpha).
  std::vector<double> d(n), e(n), z(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = 0.5 * (1.0 + diag[i]);
    e[i] = 0.5 * off[i];
  }
  const double zemu = beta_fn(eta + 1.0, alpha);
  z[0] = std::sqrt(zemu);
  imtqlx(d, e, z);

  JacobiRule rule;
  rule.alpha = alpha;
  rule.eta = eta;
  rule.n = n;
  rule.nodes = std::move(d);
  rule.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) rule.weights[i] = z[i] * z[i];
  return rule;
}

QuadResult integrate_single(double alpha, double eta,
                            const std::function<double(double)>& f,
                            const QuadratureConfig& cfg) {
  QuadResult res;
  double prev = 0.0;
  bool have_prev = false;
  for (std::size_t n = cfg.n_start; n <= cfg.n_max; n *= 2) {
    JacobiRule rule = jacobi_rule(alpha, eta, n);
    double value;
    double mag = magnitude_sum_single(rule, f, &value);
    res.value = value;
    res.n_used = n;
    if (have_prev) {
      double diff = std::fabs(value - prev);
      res.est_err = diff;
      if (diff <= cfg.rel_tol * std::max(mag, 1e-300)) {
        res.converged = true;
        return res;
      }
    }
    prev = value;
    have_prev = true;
  }
  return res;
}

namespace {

// One tensor-product evaluation over the unit square with the plain product
// weight; returns the signed sum and writes the magnitude sum.
double tensor_pass(const JacobiRule& rt, const JacobiRule& ru,
                   const std::function<double(double, double)>& g, double* mag_out) {
  double s = 0.0;
  double mag = 0.0;
  for (std::size_t i = 0; i < rt.n; ++i) {
    double ti = rt.nodes[i];
    double wi = rt.weights[i];
    double row = 0.0;
    double row_mag = 0.0;
    for (std::size_t j = 0; j < ru.n; ++j) {
      double v = g(ti, ru.nodes[j]);
      row += ru.weights[j] * v;
      row_mag += ru.weights[j] * std::fabs(v);
    }
    s += wi * row;
    mag += wi * row_mag;
  }
  *mag_out = mag;
  return s;
}

// One evaluation of the two-triangle decomposition.
//
// Triangle {u < t}: u = t*v maps it to the unit square,
//   dt du weight = t^(eta1+eta2+1) (1-t)^(alpha1-1) * v^eta2 * (1 - t v)^(alpha2-1),
// so the outer rule carries (alpha1, eta1+eta2+1), the inner rule (1, eta2),
// and the factor (1 - t v)^(alpha2-1) is applied explicitly. The mirror
// triangle swaps the roles.
double split_pass(const JacobiRule& outer_a, const JacobiRule& inner_a,
                  const JacobiRule& outer_b, const JacobiRule& inner_b,
                  double alpha1, double alpha2,
                  const std::function<double(double, double)>& g, double* mag_out) {
  double s = 0.0;
  double mag = 0.0;
  for (std::size_t i = 0; i < outer_a.n; ++i) {
    double t = outer_a.nodes[i];
    double wi = outer_a.weights[i];
    double row = 0.0, row_mag = 0.0;
    for (std::size_t j = 0; j < inner_a.n; ++j) {
      double v = inner_a.nodes[j];
      double corner = std::pow(1.0 - t * v, alpha2 - 1.0);
      double val = corner * g(t, t * v);
      row += inner_a.weights[j] * val;
      row_mag += inner_a.weights[j] * std::fabs(val);
    }
    s += wi * row;
    mag += wi * row_mag;
  }
  for (std::size_t i = 0; i < outer_b.n; ++i) {
    double u = outer_b.nodes[i];
    double wi = outer_b.weights[i];
    double row = 0.0, row_mag = 0.0;
    for (std::size_t j = 0; j < inner_b.n; ++j) {
      double v = inner_b.nodes[j];
      double corner = std::pow(1.0 - u * v, alpha1 - 1.0);
      double val = corner * g(u * v, u);
      row += inner_b.weights[j] * val;
      row_mag += inner_b.weights[j] * std::fabs(val);
    }
    s += wi * row;
    mag += wi * row_mag;
  }
  *mag_out = mag;
  return s;
}

}  // namespace

QuadResult integrate_double(double alpha1, double eta1, double alpha2, double eta2,
                            const std::function<double(double, double)>& g,
                            bool diagonal_split, const QuadratureConfig& cfg) {
  QuadResult res;
  double prev = 0.0;
  bool have_prev = false;
  for (std::size_t n = cfg.n_start; n <= cfg.n_max; n *= 2) {
    double value, mag;
    if (diagonal_split) {
      JacobiRule outer_a = jacobi_rule(alpha1, eta1 + eta2 + 1.0, n);
      JacobiRule inner_a = jacobi_rule(1.0, eta2, n);
      JacobiRule outer_b = jacobi_rule(alpha2, eta1 + eta2 + 1.0, n);
      JacobiRule inner_b = jacobi_rule(1.0, eta1, n);
      value = split_pass(outer_a, inner_a, outer_b, inner_b, alpha1, alpha2, g, &mag);
    } else {
      JacobiRule rt = jacobi_rule(alpha1, eta1, n);
      JacobiRule ru = jacobi_rule(alpha2, eta2, n);
      value = tensor_pass(rt, ru, g, &mag);
    }
    res.value = value;
    res.n_used = n;
    if (have_prev) {
      double diff = std::fabs(value - prev);
      res.est_err = diff;
      if (diff <= cfg.rel_tol * std::max(mag, 1e-300)) {
        res.converged = true;
        return res;
      }
    }
    prev = value;
    have_prev = true;
  }
  return res;
}

}  // namespace fracineq
