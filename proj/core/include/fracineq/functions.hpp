#pragma once

#include <string>
#include <vector>

namespace fracineq {

enum class Monotonicity { increasing, decreasing, none, unknown };
enum class Synchrony { synchronous, asynchronous, unknown };

// An evaluable test function parsed from a tiny textual grammar:
//   pow:<p>          tau^p
//   poly:<c0>,<c1>,...   sum c_i tau^i
//   exp:<c>          e^(c tau)
//   log1p            ln(1 + tau)
//   affine:<a>,<b>   a + b tau
//   const:<c>        c
// Every production carries its exact symbolic derivative. Monotonicity is
// deduced structurally where decidable; `none` marks a constant function.
class Integrand {
 public:
  const std::string& spec() const { return spec_; }
  double eval(double tau) const;
  bool has_derivative() const { return true; }
  double derivative(double tau) const;
  Monotonicity monotone() const { return monotone_; }
  bool is_constant() const { return monotone_ == Monotonicity::none; }

  // Exponent sigma of the leading tau^sigma behavior at 0+ (p for pow,
  // 0 for everything else). Drives both the operator's integrability check
  // and its substitution grading.
  double strength_at_zero() const { return strength_; }

  friend Integrand parse_integrand(const std::string& spec);

 private:
  enum class Kind { pow, poly, exp_scaled, log1p_fn, affine, constant };

  Integrand() = default;

  Kind kind_ = Kind::constant;
  std::vector<double> coef_;  // kind-specific parameters
  Monotonicity monotone_ = Monotonicity::unknown;
  double strength_ = 0.0;
  std::string spec_;
};

// Parses the grammar above. Malformed input raises std::invalid_argument
// with the offending character position.
Integrand parse_integrand(const std::string& spec);

// A pair of integrands with a synchrony certificate:
// synchronous  <=> (phi(t)-phi(g))(psi(t)-psi(g)) >= 0 for all t, g
// asynchronous <=> the product is <= 0 for all t, g
struct SynchronousPair {
  Integrand phi;
  Integrand psi;
  Synchrony certified = Synchrony::unknown;
};

// Certifies via monotone directions when both are decided (same direction:
// synchronous; opposite: asynchronous; a constant makes the product vanish
// identically, certified synchronous). Otherwise checks the defining product
// over all pairs from a 200-point grid in (0, x_max]; mixed signs yield
// unknown, never a silent pass.
SynchronousPair certify_pair(const Integrand& phi, const Integrand& psi, double x_max);

// Holder-conjugate exponents: s, v > 1 with 1/s + 1/v = 1 (checked to 1e-12).
struct HolderPair {
  double s;
  double v;
  HolderPair(double s_, double v_);
  static HolderPair conjugate(double s_) { return HolderPair(s_, s_ / (s_ - 1.0)); }
};

// (integral_0^T |f'(tau)|^p dtau)^(1/p), computed on the unit interval after
// the rescale tau = T r with weight exponents (alpha=1, eta=0).
// Requires p >= 1, T > 0.
double lp_norm_derivative(const Integrand& f, double p, double T);

}  // namespace fracineq
