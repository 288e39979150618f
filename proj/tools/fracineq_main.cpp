#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fracineq/inequalities.hpp"
#include "fracineq/operator.hpp"
#include "fracineq/quadrature.hpp"
#include "fracineq/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

fracineq::QuadratureConfig base_config() {
  fracineq::QuadratureConfig cfg;
  if (const char* env = std::getenv("FRACINEQ_QUAD_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0.0) cfg.rel_tol = v;
  }
  return cfg;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct ParamFlags {
  double alpha = 1.0;
  double beta = 0.0;
  double rho = 1.0;
  double k = 0.0;
  double eta = 0.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--alpha", alpha, "order alpha > 0")->required();
    cmd->add_option("--beta", beta, "exponent beta");
    cmd->add_option("--rho", rho, "exponent rho > 0");
    cmd->add_option("--k", k, "power weight k");
    cmd->add_option("--eta", eta, "kernel exponent eta > -1");
  }
  fracineq::FractionalParams build() const {
    return fracineq::FractionalParams(alpha, beta, rho, k, eta);
  }
};

struct QuadFlags {
  double tol = 0.0;
  std::size_t n_max = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--quad-tol", tol, "quadrature relative tolerance");
    cmd->add_option("--quad-max", n_max, "quadrature node cap");
  }
  fracineq::QuadratureConfig apply(fracineq::QuadratureConfig cfg) const {
    if (tol > 0.0) cfg.rel_tol = tol;
    if (n_max > 0) cfg.n_max = n_max;
    return cfg;
  }
};

int cmd_compute(const ParamFlags& pf, const QuadFlags& qf, const std::string& fn_spec,
                double x) {
  fracineq::QuadratureConfig cfg = qf.apply(base_config());
  fracineq::Integrand f = fracineq::parse_integrand(fn_spec);
  fracineq::OperatorResult diag;
  double value =
      fracineq::katugampola_integral(pf.build(), f, fracineq::EvalPoint(x), cfg, &diag);
  std::printf("%.15g\n", value);
  if (!diag.converged) {
    std::fprintf(stderr, "warning: quadrature did not converge (n=%zu, est_err=%.3g)\n",
                 diag.n_used, diag.est_err);
    return kExitNumerical;
  }
  return kExitOk;
}

int cmd_reduce(const std::string& kind_name, double alpha, double rho, double eta,
               const std::string& fn_spec, double x, double sigma_oracle, bool has_sigma,
               const QuadFlags& qf) {
  fracineq::ReductionKind kind;
  if (kind_name == "riemann-liouville") {
    kind = fracineq::ReductionKind::riemann_liouville;
  } else if (kind_name == "katugampola") {
    kind = fracineq::ReductionKind::katugampola;
  } else if (kind_name == "erdelyi-kober") {
    kind = fracineq::ReductionKind::erdelyi_kober;
  } else if (kind_name == "liouville-a0") {
    kind = fracineq::ReductionKind::liouville_a0;
  } else {
    std::fprintf(stderr,
                 "error: unknown kind '%s'; supported: riemann-liouville, katugampola, "
                 "erdelyi-kober, liouville-a0 (Weyl and Hadamard are not parameter "
                 "specializations of this operator family and are excluded)\n",
                 kind_name.c_str());
    return kExitUsage;
  }

  fracineq::QuadratureConfig cfg = qf.apply(base_config());
  fracineq::FractionalParams p = fracineq::reduce(kind, alpha, rho, eta);
  fracineq::Integrand f = fracineq::parse_integrand(fn_spec);
  fracineq::OperatorResult diag;
  double value = fracineq::katugampola_integral(p, f, fracineq::EvalPoint(x), cfg, &diag);

  std::printf("params alpha=%.15g beta=%.15g rho=%.15g k=%.15g eta=%.15g\n", p.alpha, p.beta,
              p.rho, p.k, p.eta);
  std::printf("value %.15g\n", value);

  // Power-type inputs have an analytic value; compare when one is available.
  double sigma = 0.0;
  double coeff = 1.0;
  bool have_oracle = true;
  if (has_sigma) {
    sigma = sigma_oracle;
  } else if (fn_spec.rfind("pow:", 0) == 0) {
    sigma = f.strength_at_zero();
  } else if (fn_spec.rfind("const:", 0) == 0) {
    coeff = f.eval(1.0);
  } else {
    have_oracle = false;
  }
  if (!have_oracle) {
    return diag.converged ? kExitOk : kExitNumerical;
  }
  double oracle = coeff * fracineq::power_closed_form(p, sigma, fracineq::EvalPoint(x));
  double rel = oracle == 0.0 ? std::fabs(value - oracle)
                             : std::fabs(value - oracle) / std::fabs(oracle);
  std::printf("oracle %.15g\n", oracle);
  std::printf("rel_error %.3g\n", rel);
  return rel <= 1e-9 ? kExitOk : kExitNumerical;
}

int cmd_nodes(double alpha, double eta, std::size_t n) {
  fracineq::JacobiRule rule = fracineq::jacobi_rule(alpha, eta, n);
  std::printf("node,weight\n");
  for (std::size_t i = 0; i < rule.n; ++i) {
    std::printf("%.17g,%.17g\n", rule.nodes[i], rule.weights[i]);
  }
  return kExitOk;
}

int cmd_verify_sweep(const std::string& sweep_path, const std::string& out_path,
                     const QuadFlags& qf) {
  fracineq::QuadratureConfig cfg = qf.apply(base_config());
  fracineq::SweepSpec spec = fracineq::parse_sweep(read_file(sweep_path));
  std::vector<fracineq::InequalityReport> reports = fracineq::run_sweep(spec, cfg);
  std::string json = fracineq::reports_to_json(reports);

  std::size_t holds = 0, violated = 0, indeterminate = 0;
  for (const auto& r : reports) {
    switch (r.verdict) {
      case fracineq::Verdict::holds:
        ++holds;
        break;
      case fracineq::Verdict::violated:
        ++violated;
        break;
      case fracineq::Verdict::indeterminate:
        ++indeterminate;
        break;
    }
  }

  if (out_path.empty()) {
    std::fputs(json.c_str(), stdout);
    std::fprintf(stderr, "holds %zu violated %zu indeterminate %zu\n", holds, violated,
                 indeterminate);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << json;
    std::printf("holds %zu violated %zu indeterminate %zu\n", holds, violated, indeterminate);
  }
  return violated == 0 ? kExitOk : kExitUsage;
}

int cmd_verify_single(const std::string& theorem, const ParamFlags& pf, double delta,
                      double lambda, bool has_delta, const std::string& phi,
                      const std::string& psi, const std::string& w1, const std::string& w2,
                      const std::string& w3, double holder_s, double x,
                      const std::string& out_path, const QuadFlags& qf) {
  fracineq::QuadratureConfig cfg = qf.apply(base_config());
  fracineq::FractionalParams p1 = pf.build();
  fracineq::FractionalParams p2 =
      has_delta ? fracineq::FractionalParams(delta, lambda, pf.rho, pf.k, pf.eta) : p1;
  fracineq::InequalityReport r =
      fracineq::run_case(theorem, p1, p2, x, phi, psi, w1, w2, w3, holder_s, cfg);
  std::string json = fracineq::reports_to_json({r});
  if (out_path.empty()) {
    std::fputs(json.c_str(), stdout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << json;
  }
  std::size_t violated = r.verdict == fracineq::Verdict::violated ? 1 : 0;
  std::fprintf(out_path.empty() ? stderr : stdout, "holds %zu violated %zu indeterminate %zu\n",
               r.verdict == fracineq::Verdict::holds ? std::size_t{1} : std::size_t{0},
               violated,
               r.verdict == fracineq::Verdict::indeterminate ? std::size_t{1} : std::size_t{0});
  return violated == 0 ? kExitOk : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized fractional integral evaluation and inequality verification"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "evaluate the operator at a point");
  ParamFlags compute_params;
  QuadFlags compute_quad;
  std::string compute_fn;
  double compute_x = 1.0;
  compute_params.attach(compute);
  compute_quad.attach(compute);
  compute->add_option("--x", compute_x, "evaluation point x > 0")->required();
  compute->add_option("--function", compute_fn, "integrand spec, e.g. pow:2")->required();

  // reduce
  auto* reduce_cmd = app.add_subcommand("reduce", "evaluate a named classical reduction");
  std::string reduce_kind, reduce_fn;
  double reduce_alpha = 1.0, reduce_rho = 1.0, reduce_eta = 0.0, reduce_x = 1.0;
  double reduce_sigma = 0.0;
  QuadFlags reduce_quad;
  reduce_cmd->add_option("--kind", reduce_kind,
                         "riemann-liouville | katugampola | erdelyi-kober | liouville-a0")
      ->required();
  reduce_cmd->add_option("--alpha", reduce_alpha, "order alpha > 0")->required();
  reduce_cmd->add_option("--rho", reduce_rho, "rho for katugampola / erdelyi-kober");
  reduce_cmd->add_option("--eta", reduce_eta, "eta for erdelyi-kober");
  reduce_cmd->add_option("--x", reduce_x, "evaluation point x > 0")->required();
  reduce_cmd->add_option("--function", reduce_fn, "integrand spec")->required();
  auto* sigma_opt =
      reduce_cmd->add_option("--sigma-oracle", reduce_sigma,
                             "compare against the power closed form with this exponent");
  reduce_quad.attach(reduce_cmd);

  // verify
  auto* verify = app.add_subcommand("verify", "check inequality statements, emit JSON reports");
  std::string verify_sweep, verify_out, verify_theorem;
  ParamFlags verify_params;
  QuadFlags verify_quad;
  double verify_delta = 1.0, verify_lambda = 0.0, verify_x = 1.0, verify_holder = 2.0;
  std::string verify_phi = "pow:1", verify_psi = "pow:2", verify_w1 = "const:1", verify_w2,
              verify_w3;
  auto* sweep_opt = verify->add_option("--sweep", verify_sweep, "sweep spec JSON file");
  verify->add_option("--out", verify_out, "report output path (stdout when omitted)");
  auto* theorem_opt =
      verify->add_option("--theorem", verify_theorem, "single-shot theorem id, e.g. T3.1");
  theorem_opt->excludes(sweep_opt);
  sweep_opt->excludes(theorem_opt);
  verify_params.alpha = 1.0;
  verify->add_option("--alpha", verify_params.alpha, "order alpha > 0");
  verify->add_option("--beta", verify_params.beta, "exponent beta");
  verify->add_option("--rho", verify_params.rho, "exponent rho > 0");
  verify->add_option("--k", verify_params.k, "power weight k");
  verify->add_option("--eta", verify_params.eta, "kernel exponent eta > -1");
  auto* delta_opt = verify->add_option("--delta", verify_delta, "second order delta");
  verify->add_option("--lambda", verify_lambda, "second exponent lambda");
  verify->add_option("--x", verify_x, "evaluation point x > 0");
  verify->add_option("--phi", verify_phi, "first function spec");
  verify->add_option("--psi", verify_psi, "second function spec");
  verify->add_option("--w1", verify_w1, "first weight spec");
  verify->add_option("--w2", verify_w2, "second weight spec (defaults to --w1)");
  verify->add_option("--w3", verify_w3, "third weight spec (defaults to --w1)");
  verify->add_option("--holder-s", verify_holder, "Holder exponent s > 1");
  verify_quad.attach(verify);

  // nodes
  auto* nodes = app.add_subcommand("nodes", "dump a Gauss-Jacobi rule as CSV");
  double nodes_alpha = 1.0, nodes_eta = 0.0;
  std::size_t nodes_n = 0;
  nodes->add_option("--alpha", nodes_alpha, "exponent alpha > 0 on (1-t)")->required();
  nodes->add_option("--eta", nodes_eta, "exponent eta > -1 on t")->required();
  nodes->add_option("--n", nodes_n, "point count (>= 2)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute->parsed()) {
      return cmd_compute(compute_params, compute_quad, compute_fn, compute_x);
    }
    if (reduce_cmd->parsed()) {
      return cmd_reduce(reduce_kind, reduce_alpha, reduce_rho, reduce_eta, reduce_fn, reduce_x,
                        reduce_sigma, sigma_opt->count() > 0, reduce_quad);
    }
    if (verify->parsed()) {
      if (!verify_sweep.empty()) {
        return cmd_verify_sweep(verify_sweep, verify_out, verify_quad);
      }
      if (verify_theorem.empty()) {
        std::fprintf(stderr, "error: verify needs either --sweep or --theorem\n");
        return kExitUsage;
      }
      return cmd_verify_single(verify_theorem, verify_params, verify_delta, verify_lambda,
                               delta_opt->count() > 0, verify_phi, verify_psi, verify_w1,
                               verify_w2, verify_w3, verify_holder, verify_x, verify_out,
                               verify_quad);
    }
    if (nodes->parsed()) {
      if (nodes_n < 2) {
        std::fprintf(stderr, "error: --n must be >= 2\n");
        return kExitUsage;
      }
      return cmd_nodes(nodes_alpha, nodes_eta, nodes_n);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
