#include "fracineq/inequalities.hpp"

#include <cmath>
#include <stdexcept>

namespace fracineq {

namespace {

// Collects operator evaluations for a report: records each named value,
// folds convergence flags, and tracks the largest |additive term| fed to it
// so the verdict tolerance can be scaled to the statement's magnitude.
struct Assembly {
  std::vector<std::pair<std::string, double>> operands;
  bool converged = true;
  double scale = 0.0;

  double op(const FractionalParams& p, const char* name, const OperatorInput& in,
            EvalPoint x, const QuadratureConfig& cfg) {
    OperatorResult r = apply_operator(p, in, x, cfg);
    operands.emplace_back(name, r.value);
    converged = converged && r.converged;
    return r.value;
  }

  void record(const char* name, double v) { operands.emplace_back(name, v); }

  // Registers one additive term of the statement and returns it unchanged.
  double term(double v) {
    scale = std::max(scale, std::fabs(v));
    return v;
  }

  double tol() const { return 1e-8 * std::max(1.0, scale); }
};

Verdict gap_verdict(double gap, double tol, Synchrony cert, bool converged) {
  if (!converged || cert == Synchrony::unknown) return Verdict::indeterminate;
  if (cert == Synchrony::synchronous) {
    return gap >= -tol ? Verdict::holds : Verdict::violated;
  }
  return gap <= tol ? Verdict::holds : Verdict::violated;
}

Verdict chain_verdict(double a_abs, double b, double c, double tol, bool converged) {
  if (!converged) return Verdict::indeterminate;
  return (a_abs <= b + tol && b <= c + tol) ? Verdict::holds : Verdict::violated;
}

void require_shared_frame(const FractionalParams& p1, const FractionalParams& p2,
                          const char* who) {
  if (p1.rho != p2.rho || p1.k != p2.k || p1.eta != p2.eta) {
    throw std::invalid_argument(std::string(who) +
                                ": the two parameter sets must share rho, k, eta");
  }
}

// Plain integral_a^b u(tau) dtau through the unit-interval rescale.
double plain_integral(const Integrand& u, double a, double b, const QuadratureConfig& cfg,
                      bool* converged) {
  QuadResult q = integrate_single(
      1.0, 0.0, [&](double t) { return u.eval(a + (b - a) * t); }, cfg);
  if (converged != nullptr) *converged = *converged && q.converged;
  return (b - a) * q.value;
}

double plain_integral2(const Integrand& u, const Integrand& v, double a, double b,
                       const QuadratureConfig& cfg, bool* converged) {
  QuadResult q = integrate_single(
      1.0, 0.0, [&](double t) {
        double tau = a + (b - a) * t;
        return u.eval(tau) * v.eval(tau);
      },
      cfg);
  if (converged != nullptr) *converged = *converged && q.converged;
  return (b - a) * q.value;
}

double plain_integral3(const Integrand& u, const Integrand& v, const Integrand& w, double a,
                       double b, const QuadratureConfig& cfg, bool* converged) {
  QuadResult q = integrate_single(
      1.0, 0.0, [&](double t) {
        double tau = a + (b - a) * t;
        return u.eval(tau) * v.eval(tau) * w.eval(tau);
      },
      cfg);
  if (converged != nullptr) *converged = *converged && q.converged;
  return (b - a) * q.value;
}

// Tensor form of the operator kernel applied on both axes:
//   prefactor(p1) prefactor(p2) *
//   int_0^x int_0^x K_a(tau) K_d(gamma) h(tau) h(gamma) F(tau, gamma) dtau dgamma
// with K_a(tau) = tau^(rho(eta+1)-1) (x^rho - tau^rho)^(alpha-1), through the
// same graded substitution the single-axis operator uses. F is sampled at
// physical points; a |tau - gamma| kink in F is handled by the caller
// requesting the diagonal split.
double double_operator(const FractionalParams& p1, const FractionalParams& p2,
                       const Integrand& h_w, const std::function<double(double, double)>& F,
                       EvalPoint x, bool diagonal_split, const QuadratureConfig& cfg,
                       bool* converged) {
  const GradedAxis axis = graded_axis(p1.rho, p1.eta, {h_w.strength_at_zero()});
  const double am1 = p1.alpha - 1.0;
  const double dm1 = p2.alpha - 1.0;
  const double xv = x.x;
  // Leading power of the weight function folded into both axis weights,
  // mirroring apply_operator.
  const double w = static_cast<double>(axis.c) * h_w.strength_at_zero();

  auto G = [&](double s, double u) {
    double tau = axis.map(xv, s);
    double gam = axis.map(xv, u);
    double g = axis.kernel_factor(s, am1) * axis.kernel_factor(u, dm1) * h_w.eval(tau) *
               h_w.eval(gam) * F(tau, gam);
    return w == 0.0 ? g : g * std::pow(s * u, -w);
  };
  QuadResult q = integrate_double(p1.alpha, axis.eta_graded + w, p2.alpha, axis.eta_graded + w,
                                  G, diagonal_split, cfg);
  if (converged != nullptr) *converged = *converged && q.converged;

  double cd = static_cast<double>(axis.c);
  double pref = std::pow(p1.rho, (1.0 - p1.beta) + (1.0 - p2.beta)) *
                std::pow(xv, 2.0 * p1.k + p1.rho * (2.0 * p1.eta + p1.alpha + p2.alpha)) *
                cd * cd / (gamma_fn(p1.alpha) * gamma_fn(p2.alpha));
  return pref * q.value;
}

InequalityReport base_report(const char* id, const FractionalParams& p, EvalPoint x) {
  InequalityReport r{};
  r.theorem_id = id;
  r.params = p;
  r.x = x.x;
  return r;
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::violated:
      return "violated";
    case Verdict::indeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

double classical_chebyshev(const Integrand& phi, const Integrand& psi, double a, double b,
                           const QuadratureConfig& cfg) {
  if (!(a < b)) throw std::domain_error("classical_chebyshev: require a < b");
  bool conv = true;
  double w = b - a;
  double ipp = plain_integral2(phi, psi, a, b, cfg, &conv);
  double ip = plain_integral(phi, a, b, cfg, &conv);
  double is = plain_integral(psi, a, b, cfg, &conv);
  return ipp / w - ip * is / (w * w);
}

double classical_extended(const Integrand& phi, const Integrand& psi, const Integrand& g,
                          const Integrand& h, double a, double b,
                          const QuadratureConfig& cfg) {
  if (!(a < b)) throw std::domain_error("classical_extended: require a < b");
  bool conv = true;
  double ih = plain_integral(h, a, b, cfg, &conv);
  double ig = plain_integral(g, a, b, cfg, &conv);
  double igpp = plain_integral3(g, phi, psi, a, b, cfg, &conv);
  double ihpp = plain_integral3(h, phi, psi, a, b, cfg, &conv);
  double ihp = plain_integral2(h, phi, a, b, cfg, &conv);
  double igs = plain_integral2(g, psi, a, b, cfg, &conv);
  double igp = plain_integral2(g, phi, a, b, cfg, &conv);
  double ihs = plain_integral2(h, psi, a, b, cfg, &conv);
  return ih * igpp + ig * ihpp - ihp * igs - igp * ihs;
}

InequalityReport gap_t31(const FractionalParams& p, const SynchronousPair& pair, EvalPoint x,
                         const QuadratureConfig& cfg) {
  InequalityReport r = base_report("T3.1", p, x);
  r.functions = {pair.phi.spec(), pair.psi.spec()};

  Assembly a;
  double lam = lambda_fn(p, x);
  a.record("Lambda", lam);
  double ipp = a.op(p, "I_phi_psi", operator_input(pair.phi, pair.psi), x, cfg);
  double ip = a.op(p, "I_phi", operator_input(pair.phi), x, cfg);
  double is = a.op(p, "I_psi", operator_input(pair.psi), x, cfg);

  double gap = a.term(ipp) - a.term(ip * is / lam);
  r.operands = std::move(a.operands);
  r.gap_or_chain = {gap};
  r.tol = a.tol();
  r.verdict = gap_verdict(gap, r.tol, pair.certified, a.converged);
  return r;
}

InequalityReport gap_t32(const FractionalParams& p1, const FractionalParams& p2,
                         const SynchronousPair& pair, EvalPoint x,
                         const QuadratureConfig& cfg) {
  require_shared_frame(p1, p2, "gap_t32");
  InequalityReport r = base_report("T3.2", p1, x);
  r.params2 = p2;
  r.functions = {pair.phi.spec(), pair.psi.spec()};

  Assembly a;
  double lam1 = lambda_fn(p1, x);
  double lam2 = lambda_fn(p2, x);
  a.record("Lambda1", lam1);
  a.record("Lambda2", lam2);
  double i1pp = a.op(p1, "I1_phi_psi", operator_input(pair.phi, pair.psi), x, cfg);
  double i2pp = a.op(p2, "I2_phi_psi", operator_input(pair.phi, pair.psi), x, cfg);
  double i1p = a.op(p1, "I1_phi", operator_input(pair.phi), x, cfg);
  double i1s = a.op(p1, "I1_psi", operator_input(pair.psi), x, cfg);
  double i2p = a.op(p2, "I2_phi", operator_input(pair.phi), x, cfg);
  double i2s = a.op(p2, "I2_psi", operator_input(pair.psi), x, cfg);

  double gap = a.term(lam2 * i1pp) + a.term(lam1 * i2pp) - a.term(i1p * i2s) -
               a.term(i1s * i2p);
  r.operands = std::move(a.operands);
  r.gap_or_chain = {gap};
  r.tol = a.tol();
  r.verdict = gap_verdict(gap, r.tol, pair.certified, a.converged);
  return r;
}

InequalityReport gap_l41(const FractionalParams& p, const SynchronousPair& pair,
                         const Integrand& s_w, const Integrand& v_w, EvalPoint x,
                         const QuadratureConfig& cfg) {
  InequalityReport r = base_report("L4.1", p, x);
  r.functions = {pair.phi.spec(), pair.psi.spec(), s_w.spec(), v_w.spec()};

  Assembly a;
  double ispp = a.op(p, "I_s_phi_psi", operator_input(s_w, pair.phi, pair.psi), x, cfg);
  double iv = a.op(p, "I_v", operator_input(v_w), x, cfg);
  double is = a.op(p, "I_s", operator_input(s_w), x, cfg);
  double ivpp = a.op(p, "I_v_phi_psi", operator_input(v_w, pair.phi, pair.psi), x, cfg);
  double isp = a.op(p, "I_s_phi", operator_input(s_w, pair.phi), x, cfg);
  double ivs = a.op(p, "I_v_psi", operator_input(v_w, pair.psi), x, cfg);
  double iss = a.op(p, "I_s_psi", operator_input(s_w, pair.psi), x, cfg);
  double ivp = a.op(p, "I_v_phi", operator_input(v_w, pair.phi), x, cfg);

  double gap =
      a.term(ispp * iv) + a.term(is * ivpp) - a.term(isp * ivs) - a.term(iss * ivp);
  r.operands = std::move(a.operands);
  r.gap_or_chain = {gap};
  r.tol = a.tol();
  r.verdict = gap_verdict(gap, r.tol, pair.certified, a.converged);
  return r;
}

InequalityReport gap_t42(const FractionalParams& p, const SynchronousPair& pair,
                         const Integrand& f_w, const Integrand& g_w, const Integrand& h_w,
                         EvalPoint x, const QuadratureConfig& cfg) {
  InequalityReport r = base_report("T4.2", p, x);
  r.functions = {pair.phi.spec(), pair.psi.spec(), f_w.spec(), g_w.spec(), h_w.spec()};
  const Integrand& phi = pair.phi;
  const Integrand& psi = pair.psi;

  Assembly a;
  double ih = a.op(p, "I_h", operator_input(h_w), x, cfg);
  double iff = a.op(p, "I_f", operator_input(f_w), x, cfg);
  double ig = a.op(p, "I_g", operator_input(g_w), x, cfg);
  double ifpp = a.op(p, "I_f_phi_psi", operator_input(f_w, phi, psi), x, cfg);
  double igpp = a.op(p, "I_g_phi_psi", operator_input(g_w, phi, psi), x, cfg);
  double ihpp = a.op(p, "I_h_phi_psi", operator_input(h_w, phi, psi), x, cfg);
  double ifp = a.op(p, "I_f_phi", operator_input(f_w, phi), x, cfg);
  double ifs = a.op(p, "I_f_psi", operator_input(f_w, psi), x, cfg);
  double igp = a.op(p, "I_g_phi", operator_input(g_w, phi), x, cfg);
  double igs = a.op(p, "I_g_psi", operator_input(g_w, psi), x, cfg);
  double ihp = a.op(p, "I_h_phi", operator_input(h_w, phi), x, cfg);
  double ihs = a.op(p, "I_h_psi", operator_input(h_w, psi), x, cfg);

  double lhs = a.term(ih * ifpp * ig) + a.term(2.0 * ih * iff * igpp) +
               a.term(ih * ig * ifpp) + a.term(2.0 * iff * ihpp * ig);
  double rhs = a.term(ih * ifp * igs) + a.term(ih * ifs * igp) + a.term(iff * ihp * igs) +
               a.term(iff * ihs * igp) + a.term(ig * ihp * ifs) + a.term(ig * ihs * ifp);
  double gap = lhs - rhs;
  r.operands = std::move(a.operands);
  r.gap_or_chain = {gap};
  r.tol = a.tol();
  r.verdict = gap_verdict(gap, r.tol, pair.certified, a.converged);
  return r;
}

InequalityReport gap_l43(const FractionalParams& p1, const FractionalParams& p2,
                         const SynchronousPair& pair, const Integrand& s_w,
                         const Integrand& v_w, EvalPoint x, const QuadratureConfig& cfg) {
  require_shared_frame(p1, p2, "gap_l43");
  InequalityReport r = base_report("L4.3", p1, x);
  r.params2 = p2;
  r.functions = {pair.phi.spec(), pair.psi.spec(), s_w.spec(), v_w.spec()};

  Assembly a;
  double ispp = a.op(p1, "I1_s_phi_psi", operator_input(s_w, pair.phi, pair.psi), x, cfg);
  double iv = a.op(p2, "I2_v", operator_input(v_w), x, cfg);
  double is = a.op(p1, "I1_s", operator_input(s_w), x, cfg);
  double ivpp = a.op(p2, "I2_v_phi_psi", operator_input(v_w, pair.phi, pair.psi), x, cfg);
  double isp = a.op(p1, "I1_s_phi", operator_input(s_w, pair.phi), x, cfg);
  double ivs = a.op(p2, "I2_v_psi", operator_input(v_w, pair.psi), x, cfg);
  double iss = a.op(p1, "I1_s_psi", operator_input(s_w, pair.psi), x, cfg);
  double ivp = a.op(p2, "I2_v_phi", operator_input(v_w, pair.phi), x, cfg);

  double gap =
      a.term(ispp * iv) + a.term(is * ivpp) - a.term(isp * ivs) - a.term(iss * ivp);
  r.operands = std::move(a.operands);
  r.gap_or_chain = {gap};
  r.tol = a.tol();
  r.verdict = gap_verdict(gap, r.tol, pair.certified, a.converged);
  return r;
}

InequalityReport gap_t44(const FractionalParams& p1, const FractionalParams& p2,
                         const SynchronousPair& pair, const Integrand& f_w,
                         const Integrand& g_w, const Integrand& h_w, EvalPoint x,
                         const QuadratureConfig& cfg) {
  require_shared_frame(p1, p2, "gap_t44");
  InequalityReport r = base_report("T4.4", p1, x);
  r.params2 = p2;
  r.functions = {pair.phi.spec(), pair.psi.spec(), f_w.spec(), g_w.spec(), h_w.spec()};
  const Integrand& phi = pair.phi;
  const Integrand& psi = pair.psi;

  Assembly a;
  double i1h = a.op(p1, "I1_h", operator_input(h_w), x, cfg);
  double i1f = a.op(p1, "I1_f", operator_input(f_w), x, cfg);
  double i1g = a.op(p1, "I1_g", operator_input(g_w), x, cfg);
  double i2f = a.op(p2, "I2_f", operator_input(f_w), x, cfg);
  double i2g = a.op(p2, "I2_g", operator_input(g_w), x, cfg);
  double i1fpp = a.op(p1, "I1_f_phi_psi", operator_input(f_w, phi, psi), x, cfg);
  double i2fpp = a.op(p2, "I2_f_phi_psi", operator_input(f_w, phi, psi), x, cfg);
  double i2gpp = a.op(p2, "I2_g_phi_psi", operator_input(g_w, phi, psi), x, cfg);
  double i1hpp = a.op(p1, "I1_h_phi_psi", operator_input(h_w, phi, psi), x, cfg);
  double i1fp = a.op(p1, "I1_f_phi", operator_input(f_w, phi), x, cfg);
  double i1fs = a.op(p1, "I1_f_psi", operator_input(f_w, psi), x, cfg);
  double i2gp = a.op(p2, "I2_g_phi", operator_input(g_w, phi), x, cfg);
  double i2gs = a.op(p2, "I2_g_psi", operator_input(g_w, psi), x, cfg);
  double i1hp = a.op(p1, "I1_h_phi", operator_input(h_w, phi), x, cfg);
  double i1hs = a.op(p1, "I1_h_psi", operator_input(h_w, psi), x, cfg);
  double i2fp = a.op(p2, "I2_f_phi", operator_input(f_w, phi), x, cfg);
  double i2fs = a.op(p2, "I2_f_psi", operator_input(f_w, psi), x, cfg);

  double lhs = a.term(i1h * i1fpp * i2g) + a.term(2.0 * i1h * i1f * i2gpp) +
               a.term(i1h * i1g * i2fpp) + a.term((i1f * i2g + i1g * i2f) * i1hpp);
  double rhs = a.term(i1h * i1fp * i2gs) + a.term(i1h * i1fs * i2gp) +
               a.term(i1f * i1hp * i2gs) + a.term(i1f * i1hs * i2gp) +
               a.term(i1g * i1hp * i2fs) + a.term(i1g * i1hs * i2fp);
  double gap = lhs - rhs;
  r.operands = std::move(a.operands);
  r.gap_or_chain = {gap};
  r.tol = a.tol();
  r.verdict = gap_verdict(gap, r.tol, pair.certified, a.converged);
  return r;
}

IdentityResult identity_l51(const FractionalParams& p, const Integrand& h_w,
                            const Integrand& phi, const Integrand& psi, EvalPoint x,
                            const QuadratureConfig& cfg) {
  IdentityResult res;
  bool conv = true;

  auto H = [&](double tau, double gam) {
    return (phi.eval(tau) - phi.eval(gam)) * (psi.eval(tau) - psi.eval(gam));
  };
  res.lhs = double_operator(p, p, h_w, H, x, /*diagonal_split=*/false, cfg, &conv);

  Assembly a;
  double ihpp = a.op(p, "I_h_phi_psi", operator_input(h_w, phi, psi), x, cfg);
  double ih = a.op(p, "I_h", operator_input(h_w), x, cfg);
  double ihs = a.op(p, "I_h_psi", operator_input(h_w, psi), x, cfg);
  double ihp = a.op(p, "I_h_phi", operator_input(h_w, phi), x, cfg);
  res.rhs = 2.0 * (ihpp * ih - ihs * ihp);

  res.residual = std::fabs(res.lhs - res.rhs);
  res.converged = conv && a.converged;
  return res;
}

InequalityReport chain_t52(const FractionalParams& p, const Integrand& h_w,
                           const Integrand& phi, const Integrand& psi, const HolderPair& hp,
                           EvalPoint x, double T_norm, const QuadratureConfig& cfg) {
  InequalityReport r = base_report("T5.2", p, x);
  r.functions = {phi.spec(), psi.spec(), h_w.spec()};

  Assembly a;
  double ihpp = a.op(p, "I_h_phi_psi", operator_input(h_w, phi, psi), x, cfg);
  double ih = a.op(p, "I_h", operator_input(h_w), x, cfg);
  double ihs = a.op(p, "I_h_psi", operator_input(h_w, psi), x, cfg);
  double ihp = a.op(p, "I_h_phi", operator_input(h_w, phi), x, cfg);

  double norm_phi = lp_norm_derivative(phi, hp.s, T_norm);
  double norm_psi = lp_norm_derivative(psi, hp.v, T_norm);
  a.record("norm_phi_s", norm_phi);
  a.record("norm_psi_v", norm_psi);
  a.record("holder_s", hp.s);
  a.record("holder_v", hp.v);
  a.record("T_norm", T_norm);

  auto dist = [](double tau, double gam) { return std::fabs(tau - gam); };
  double kernel =
      double_operator(p, p, h_w, dist, x, /*diagonal_split=*/true, cfg, &a.converged);
  a.record("double_kernel", kernel);

  double A = a.term(2.0 * std::fabs(ihpp * ih - ihs * ihp));
  double B = a.term(norm_phi * norm_psi * kernel);
  double C = a.term(norm_phi * norm_psi * x.x * ih * ih);

  r.operands = std::move(a.operands);
  r.gap_or_chain = {A, B, C};
  r.tol = a.tol();
  r.verdict = chain_verdict(A, B, C, r.tol, a.converged);
  return r;
}

InequalityReport chain_t53(const FractionalParams& p1, const FractionalParams& p2,
                           const Integrand& h_w, const Integrand& phi, const Integrand& psi,
                           const HolderPair& hp, EvalPoint x, double T_norm,
                           const QuadratureConfig& cfg) {
  require_shared_frame(p1, p2, "chain_t53");
  InequalityReport r = base_report("T5.3", p1, x);
  r.params2 = p2;
  r.functions = {phi.spec(), psi.spec(), h_w.spec()};

  Assembly a;
  double i1hpp = a.op(p1, "I1_h_phi_psi", operator_input(h_w, phi, psi), x, cfg);
  double i2h = a.op(p2, "I2_h", operator_input(h_w), x, cfg);
  double i1h = a.op(p1, "I1_h", operator_input(h_w), x, cfg);
  double i2hpp = a.op(p2, "I2_h_phi_psi", operator_input(h_w, phi, psi), x, cfg);
  double i1hp = a.op(p1, "I1_h_phi", operator_input(h_w, phi), x, cfg);
  double i1hs = a.op(p1, "I1_h_psi", operator_input(h_w, psi), x, cfg);
  double i2hp = a.op(p2, "I2_h_phi", operator_input(h_w, phi), x, cfg);
  double i2hs = a.op(p2, "I2_h_psi", operator_input(h_w, psi), x, cfg);

  double norm_phi = lp_norm_derivative(phi, hp.s, T_norm);
  double norm_psi = lp_norm_derivative(psi, hp.v, T_norm);
  a.record("norm_phi_s", norm_phi);
  a.record("norm_psi_v", norm_psi);
  a.record("holder_s", hp.s);
  a.record("holder_v", hp.v);
  a.record("T_norm", T_norm);

  auto dist = [](double tau, double gam) { return std::fabs(tau - gam); };
  double kernel =
      double_operator(p1, p2, h_w, dist, x, /*diagonal_split=*/true, cfg, &a.converged);
  a.record("double_kernel", kernel);

  double A =
      a.term(i1hpp * i2h) - a.term(i2hs * i1hp) - a.term(i2hp * i1hs) + a.term(i2hpp * i1h);
  double B = a.term(norm_phi * norm_psi * kernel);
  double C = a.term(norm_phi * norm_psi * x.x * i1h * i2h);

  r.operands = std::move(a.operands);
  r.gap_or_chain = {A, B, C};
  r.tol = a.tol();
  r.verdict = chain_verdict(std::fabs(A), B, C, r.tol, a.converged);
  return r;
}

ChainTriple remark_rl_chain(double alpha, const Integrand& g_w, const Integrand& phi,
                            const Integrand& psi, const HolderPair& hp, double x,
                            double T_norm, const QuadratureConfig& cfg) {
  if (!(alpha > 0.0)) throw std::domain_error("remark_rl_chain: alpha must be > 0");
  if (!(x > 0.0)) throw std::domain_error("remark_rl_chain: x must be > 0");
  ChainTriple res;
  bool conv = true;
  double ga = gamma_fn(alpha);

  // I^alpha u(x) = x^alpha / Gamma(alpha) int_0^1 (1-r)^(alpha-1) u(x r) dr,
  // assembled directly, independent of the five-parameter operator path.
  auto rl = [&](const std::function<double(double)>& u) {
    QuadResult q = integrate_single(alpha, 0.0, [&](double t) { return u(x * t); }, cfg);
    conv = conv && q.converged;
    return std::pow(x, alpha) / ga * q.value;
  };

  double ig = rl([&](double t) { return g_w.eval(t); });
  double igpp = rl([&](double t) { return g_w.eval(t) * phi.eval(t) * psi.eval(t); });
  double igp = rl([&](double t) { return g_w.eval(t) * phi.eval(t); });
  double igs = rl([&](double t) { return g_w.eval(t) * psi.eval(t); });

  double norm_phi = lp_norm_derivative(phi, hp.s, T_norm);
  double norm_psi = lp_norm_derivative(psi, hp.v, T_norm);

  QuadResult q = integrate_double(
      alpha, 0.0, alpha, 0.0,
      [&](double t, double u) {
        double tau = x * t;
        double gam = x * u;
        return g_w.eval(tau) * g_w.eval(gam) * std::fabs(tau - gam);
      },
      /*diagonal_split=*/true, cfg);
  conv = conv && q.converged;
  double kernel = std::pow(x, 2.0 * alpha) / (ga * ga) * q.value;

  res.a = 2.0 * std::fabs(igpp * ig - igs * igp);
  res.b = norm_phi * norm_psi * kernel;
  res.c = norm_phi * norm_psi * x * ig * ig;
  res.converged = conv;
  return res;
}

}  // namespace fracineq
