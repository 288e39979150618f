#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace fracineq {

// Gauss-Jacobi rule on [0, 1] for the weight t^eta * (1 - t)^alpha1m
// with alpha1m = alpha - 1. Stored with the generating exponents so a rule
// can be validated against the request that produced it.
struct JacobiRule {
  double alpha;  // exponent on (1 - t) is alpha - 1
  double eta;    // exponent on t
  std::vector<double> nodes;
  std::vector<double> weights;
  std::size_t n;
};

struct QuadratureConfig {
  std::size_t n_start = 16;
  std::size_t n_max = 4096;
  double rel_tol = 1e-10;
};

struct QuadResult {
  double value = 0.0;
  std::size_t n_used = 0;
  double est_err = 0.0;
  bool converged = false;
};

// Builds the n-point rule for weight t^eta (1-t)^(alpha-1) on [0,1].
// Requires alpha > 0, eta > -1, n >= 2. Golub-Welsch on the Jacobi matrix;
// nodes ascending, weights positive, sum(weights) = B(eta+1, alpha).
JacobiRule jacobi_rule(double alpha, double eta, std::size_t n);

// integral_0^1 t^eta (1-t)^(alpha-1) f(t) dt by doubling n until two
// successive rules agree to rel_tol relative to sum(w_i * |f(t_i)|).
// The magnitude scale keeps the criterion meaningful when the signed
// integral cancels to ~0.
QuadResult integrate_single(double alpha, double eta,
                            const std::function<double(double)>& f,
                            const QuadratureConfig& cfg = {});

// integral_0^1 integral_0^1 t^eta1 (1-t)^(alpha1-1) u^eta2 (1-u)^(alpha2-1)
//   g(t, u) du dt.
//
// With diagonal_split = false this is the tensor product of two single rules
// (appropriate when g is smooth on the closed square). With diagonal_split =
// true the square is integrated as the two triangles {u < t} and {t < u},
// each mapped to the unit square so a |t - u| style kink in g lands on a
// coordinate edge instead of cutting the domain. The engine owns the extra
// corner factor the triangle maps produce; g is still sampled at physical
// (t, u) points. For non-integer alpha that corner factor has limited
// smoothness at one corner, which caps the split route near 1e-8 relative
// accuracy; callers comparing both routes should allow for that.
QuadResult integrate_double(double alpha1, double eta1, double alpha2, double eta2,
                            const std::function<double(double, double)>& g,
                            bool diagonal_split, const QuadratureConfig& cfg = {});

}  // namespace fracineq
