#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fracineq/functions.hpp"
#include "fracineq/operator.hpp"

namespace fracineq {

enum class Verdict { holds, violated, indeterminate };

const char* verdict_name(Verdict v);

// One checked inequality instance. gap_or_chain holds a single gap
// (LHS - RHS) for one-sided statements or the ordered triple (A, B, C) of a
// two-step bound chain. operands records every operator evaluation that
// entered the statement, in assembly order, so a report is auditable without
// re-running it. For the identity statement the gap slot carries -residual,
// keeping the uniform rule: holds <=> gap >= -tol (chain: each link within
// tol).
struct InequalityReport {
  std::string theorem_id;
  FractionalParams params;
  std::optional<FractionalParams> params2;  // second (delta, lambda) set; shares rho, k, eta
  double x = 0.0;
  std::vector<std::string> functions;
  std::vector<std::pair<std::string, double>> operands;
  std::vector<double> gap_or_chain;
  double tol = 0.0;
  Verdict verdict = Verdict::indeterminate;
};

// Classical Chebyshev functional on (a, b):
//   T(phi, psi) = (1/(b-a)) int phi psi - (1/(b-a))^2 (int phi)(int psi).
double classical_chebyshev(const Integrand& phi, const Integrand& psi, double a, double b,
                           const QuadratureConfig& cfg = {});

// Weighted four-function extension on (a, b):
//   T(phi, psi, g, h) = int h * int g phi psi + int g * int h phi psi
//                     - int h phi * int g psi - int g phi * int h psi;
// nonnegative for synchronous (phi, psi) and nonnegative weights g, h.
double classical_extended(const Integrand& phi, const Integrand& psi, const Integrand& g,
                          const Integrand& h, double a, double b,
                          const QuadratureConfig& cfg = {});

// gap = I(phi psi) - I(phi) I(psi) / Lambda. Synchronous pairs certify
// gap >= -tol; asynchronous pairs reverse the sign (gap <= tol). Unknown
// certification yields an indeterminate verdict.
InequalityReport gap_t31(const FractionalParams& p, const SynchronousPair& pair, EvalPoint x,
                         const QuadratureConfig& cfg = {});

// Two parameter sets (alpha, beta) and (delta, lambda) sharing rho, k, eta:
// gap = Lambda_2 I_1(phi psi) + Lambda_1 I_2(phi psi)
//     - I_1(phi) I_2(psi) - I_1(psi) I_2(phi).
InequalityReport gap_t32(const FractionalParams& p1, const FractionalParams& p2,
                         const SynchronousPair& pair, EvalPoint x,
                         const QuadratureConfig& cfg = {});

// Weighted one-parameter lemma, weights s_w, v_w >= 0:
// gap = I(s phi psi) I(v) + I(s) I(v phi psi) - I(s phi) I(v psi) - I(s psi) I(v phi).
InequalityReport gap_l41(const FractionalParams& p, const SynchronousPair& pair,
                         const Integrand& s_w, const Integrand& v_w, EvalPoint x,
                         const QuadratureConfig& cfg = {});

// Three-weight one-parameter statement:
// LHS = I(h) [ I(f phi psi) I(g) + 2 I(f) I(g phi psi) + I(g) I(f phi psi) ]
//     + 2 I(f) I(h phi psi) I(g)
// RHS = I(h) [ I(f phi) I(g psi) + I(f psi) I(g phi) ]
//     + I(f) [ I(h phi) I(g psi) + I(h psi) I(g phi) ]
//     + I(g) [ I(h phi) I(f psi) + I(h psi) I(f phi) ]
InequalityReport gap_t42(const FractionalParams& p, const SynchronousPair& pair,
                         const Integrand& f_w, const Integrand& g_w, const Integrand& h_w,
                         EvalPoint x, const QuadratureConfig& cfg = {});

// Mixed-parameter form of the weighted lemma: the v-side operands are taken
// under the second parameter set.
InequalityReport gap_l43(const FractionalParams& p1, const FractionalParams& p2,
                         const SynchronousPair& pair, const Integrand& s_w,
                         const Integrand& v_w, EvalPoint x, const QuadratureConfig& cfg = {});

// Mixed-parameter three-weight statement:
// LHS = I1(h) [ I1(f phi psi) I2(g) + 2 I1(f) I2(g phi psi) + I1(g) I2(f phi psi) ]
//     + [ I1(f) I2(g) + I1(g) I2(f) ] I1(h phi psi)
// RHS = I1(h) [ I1(f phi) I2(g psi) + I1(f psi) I2(g phi) ]
//     + I1(f) [ I1(h phi) I2(g psi) + I1(h psi) I2(g phi) ]
//     + I1(g) [ I1(h phi) I2(f psi) + I1(h psi) I2(f phi) ]
InequalityReport gap_t44(const FractionalParams& p1, const FractionalParams& p2,
                         const SynchronousPair& pair, const Integrand& f_w,
                         const Integrand& g_w, const Integrand& h_w, EvalPoint x,
                         const QuadratureConfig& cfg = {});

struct IdentityResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  bool converged = false;
};

// Weighted product identity: the symmetric double integral
//   prefactor^2 * int int K(tau) K(gamma) h(tau) h(gamma)
//                 (phi(tau)-phi(gamma)) (psi(tau)-psi(gamma)) dtau dgamma
// equals 2 [ I(h phi psi) I(h) - I(h psi) I(h phi) ]. The left side goes
// through integrate_double (no diagonal split; the factor is smooth), the
// right side through four operator evaluations, so the residual exercises
// both code paths against each other.
IdentityResult identity_l51(const FractionalParams& p, const Integrand& h_w,
                            const Integrand& phi, const Integrand& psi, EvalPoint x,
                            const QuadratureConfig& cfg = {});

// Bound chain A <= B <= C with
//   A = 2 | I(h phi psi) I(h) - I(h psi) I(h phi) |
//   B = ||phi'||_s ||psi'||_v (rho^(2(1-beta)) x^(2k) / Gamma(alpha)^2) *
//       int int K(tau) K(gamma) h(tau) h(gamma) |tau - gamma| dtau dgamma
//   C = ||phi'||_s ||psi'||_v x (I h)^2
// Norms are truncated to [0, T_norm]; with T_norm >= x each link is exact
// a fortiori. The |tau - gamma| factor makes the middle integral kinked on
// the diagonal, so it runs with the diagonal split on.
InequalityReport chain_t52(const FractionalParams& p, const Integrand& h_w,
                           const Integrand& phi, const Integrand& psi, const HolderPair& hp,
                           EvalPoint x, double T_norm, const QuadratureConfig& cfg = {});

// Mixed-parameter chain:
//   A = I1(h phi psi) I2(h) - I2(h psi) I1(h phi) - I2(h phi) I1(h psi) + I2(h phi psi) I1(h)
//   B = ||phi'||_s ||psi'||_v (rho^(2-beta-lambda) x^(2k) / (Gamma(alpha) Gamma(delta))) *
//       int int K_alpha(tau) K_delta(gamma) h(tau) h(gamma) |tau - gamma|
//   C = ||phi'||_s ||psi'||_v x I1(h) I2(h)
// Verdict checks |A| <= B and B <= C within tol.
InequalityReport chain_t53(const FractionalParams& p1, const FractionalParams& p2,
                           const Integrand& h_w, const Integrand& phi, const Integrand& psi,
                           const HolderPair& hp, EvalPoint x, double T_norm,
                           const QuadratureConfig& cfg = {});

struct ChainTriple {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  bool converged = false;
};

// Independent Riemann-Liouville assembly of the chain_t52 quantities with
// weight g_w, built directly from
//   I^alpha u = x^alpha / Gamma(alpha) int_0^1 (1-r)^(alpha-1) u(x r) dr
// without going through the five-parameter operator. Cross-checks chain_t52
// at rho=1, k=0, eta=0.
ChainTriple remark_rl_chain(double alpha, const Integrand& g_w, const Integrand& phi,
                            const Integrand& psi, const HolderPair& hp, double x,
                            double T_norm, const QuadratureConfig& cfg = {});

}  // namespace fracineq
