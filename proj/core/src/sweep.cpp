#include "fracineq/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "json.hpp"

namespace fracineq {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const std::vector<std::string>& known_theorems() {
  static const std::vector<std::string> ids = {
      "T3.1", "T3.2", "L4.1", "T4.2",        "L4.3",         "T4.4",
      "T5.2", "T5.3", "L5.1-identity", "classical-T", "classical-T4", "remark-RL"};
  return ids;
}

[[noreturn]] void field_fail(const std::string& path, const char* what) {
  throw std::runtime_error("sweep spec " + path + ": " + what);
}

const json& require_field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) field_fail(std::string("/") + name, "missing");
  return *it;
}

std::vector<double> number_list(const json& j, const char* name) {
  const json& a = require_field(j, name);
  if (!a.is_array() || a.empty()) field_fail(std::string("/") + name, "expected non-empty array");
  std::vector<double> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_number())
      field_fail("/" + std::string(name) + "/" + std::to_string(i), "expected number");
    out.push_back(a[i].get<double>());
  }
  return out;
}

std::vector<TiedValue> tied_list(const json& j, const char* name, const char* marker) {
  const json& a = require_field(j, name);
  if (!a.is_array() || a.empty()) field_fail(std::string("/") + name, "expected non-empty array");
  std::vector<TiedValue> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::string path = "/" + std::string(name) + "/" + std::to_string(i);
    if (a[i].is_number()) {
      out.push_back({false, a[i].get<double>()});
    } else if (a[i].is_string() && a[i].get<std::string>() == marker) {
      out.push_back({true, 0.0});
    } else {
      field_fail(path, "expected number or the tie marker string");
    }
  }
  return out;
}

std::string checked_spec(const json& v, const std::string& path) {
  if (!v.is_string()) field_fail(path, "expected function spec string");
  std::string s = v.get<std::string>();
  try {
    parse_integrand(s);
  } catch (const std::invalid_argument& e) {
    field_fail(path, e.what());
  }
  return s;
}

std::string fmt_real(double v, const char* spec) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

void append_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (char ch : s) {
    switch (ch) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  out += '"';
}

// One sampled tuple: every sweep dimension is drawn for every sample (in a
// fixed order) so the random stream is identical no matter which theorem
// consumes the tuple.
struct Tuple {
  FractionalParams p1;
  FractionalParams p2;
  double x;
  std::string phi_spec, psi_spec;
  std::string w1_spec, w2_spec, w3_spec;
  double holder_s;
};

Tuple draw_tuple(const SweepSpec& s, std::mt19937_64& rng) {
  auto pick = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  double alpha = s.alpha[pick(s.alpha.size())];
  TiedValue tb = s.beta[pick(s.beta.size())];
  double beta = tb.tied ? alpha : tb.value;
  double delta = s.delta[pick(s.delta.size())];
  TiedValue tl = s.lambda[pick(s.lambda.size())];
  double lambda = tl.tied ? delta : tl.value;
  double rho = s.rho[pick(s.rho.size())];
  double k = s.k[pick(s.k.size())];
  double eta = s.eta[pick(s.eta.size())];
  double x = s.x[pick(s.x.size())];
  const auto& pair = s.function_pairs[pick(s.function_pairs.size())];
  std::string w1 = s.weights[pick(s.weights.size())];
  std::string w2 = s.weights[pick(s.weights.size())];
  std::string w3 = s.weights[pick(s.weights.size())];
  double hs = s.holder_s[pick(s.holder_s.size())];
  return Tuple{FractionalParams(alpha, beta, rho, k, eta),
               FractionalParams(delta, lambda, rho, k, eta),
               x,
               pair.first,
               pair.second,
               w1,
               w2,
               w3,
               hs};
}

Verdict sign_verdict(double gap, double tol, Synchrony cert, bool converged) {
  if (!converged || cert == Synchrony::unknown) return Verdict::indeterminate;
  if (cert == Synchrony::synchronous) return gap >= -tol ? Verdict::holds : Verdict::violated;
  return gap <= tol ? Verdict::holds : Verdict::violated;
}

InequalityReport run_one(const std::string& id, const Tuple& t, const QuadratureConfig& cfg) {
  return run_case(id, t.p1, t.p2, t.x, t.phi_spec, t.psi_spec, t.w1_spec, t.w2_spec,
                  t.w3_spec, t.holder_s, cfg);
}

void apply_tol_override(InequalityReport& r, double tol, Synchrony cert) {
  r.tol = tol;
  if (r.verdict == Verdict::indeterminate) return;
  if (r.gap_or_chain.size() == 3) {
    double a = std::fabs(r.gap_or_chain[0]);
    double b = r.gap_or_chain[1];
    double c = r.gap_or_chain[2];
    r.verdict = (a <= b + tol && b <= c + tol) ? Verdict::holds : Verdict::violated;
  } else {
    r.verdict = sign_verdict(r.gap_or_chain[0], tol, cert, true);
  }
}

}  // namespace

SweepSpec parse_sweep(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("sweep spec: ") + e.what());
  }
  if (!j.is_object()) field_fail("/", "expected object");

  SweepSpec s;
  const json& ids = require_field(j, "theorem_ids");
  if (!ids.is_array() || ids.empty()) field_fail("/theorem_ids", "expected non-empty array");
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (!ids[i].is_string())
      field_fail("/theorem_ids/" + std::to_string(i), "expected string");
    std::string id = ids[i].get<std::string>();
    const auto& known = known_theorems();
    if (std::find(known.begin(), known.end(), id) == known.end())
      field_fail("/theorem_ids/" + std::to_string(i), ("unknown theorem id '" + id + "'").c_str());
    s.theorem_ids.push_back(id);
  }

  s.alpha = number_list(j, "alpha");
  s.beta = tied_list(j, "beta", "alpha");
  s.delta = number_list(j, "delta");
  s.lambda = tied_list(j, "lambda", "delta");
  s.rho = number_list(j, "rho");
  s.k = number_list(j, "k");
  s.eta = number_list(j, "eta");
  s.x = number_list(j, "x");

  const json& fp = require_field(j, "function_pairs");
  if (!fp.is_array() || fp.empty()) field_fail("/function_pairs", "expected non-empty array");
  for (std::size_t i = 0; i < fp.size(); ++i) {
    std::string path = "/function_pairs/" + std::to_string(i);
    if (!fp[i].is_array() || fp[i].size() != 2) field_fail(path, "expected [spec, spec]");
    s.function_pairs.emplace_back(checked_spec(fp[i][0], path + "/0"),
                                  checked_spec(fp[i][1], path + "/1"));
  }

  const json& w = require_field(j, "weights");
  if (!w.is_array() || w.empty()) field_fail("/weights", "expected non-empty array");
  for (std::size_t i = 0; i < w.size(); ++i) {
    s.weights.push_back(checked_spec(w[i], "/weights/" + std::to_string(i)));
  }

  s.holder_s = number_list(j, "holder_s");
  for (std::size_t i = 0; i < s.holder_s.size(); ++i) {
    if (!(s.holder_s[i] > 1.0))
      field_fail("/holder_s/" + std::to_string(i), "exponent must be > 1");
  }

  if (auto it = j.find("tol_override"); it != j.end()) {
    if (!it->is_number()) field_fail("/tol_override", "expected number");
    s.tol_override = it->get<double>();
  }
  if (auto it = j.find("samples_per_theorem"); it != j.end()) {
    if (!it->is_number_unsigned() || it->get<std::uint64_t>() == 0)
      field_fail("/samples_per_theorem", "expected positive integer");
    s.samples_per_theorem = static_cast<unsigned>(it->get<std::uint64_t>());
  }
  if (auto it = j.find("seed"); it != j.end()) {
    if (!it->is_number_unsigned()) field_fail("/seed", "expected unsigned integer");
    s.seed = it->get<std::uint64_t>();
  }
  return s;
}

std::string serialize_sweep(const SweepSpec& s) {
  ordered_json j;
  j["theorem_ids"] = s.theorem_ids;
  j["alpha"] = s.alpha;
  auto tied_out = [](const std::vector<TiedValue>& v, const char* marker) {
    ordered_json a = ordered_json::array();
    for (const TiedValue& t : v) {
      if (t.tied) {
        a.push_back(marker);
      } else {
        a.push_back(t.value);
      }
    }
    return a;
  };
  j["beta"] = tied_out(s.beta, "alpha");
  j["delta"] = s.delta;
  j["lambda"] = tied_out(s.lambda, "delta");
  j["rho"] = s.rho;
  j["k"] = s.k;
  j["eta"] = s.eta;
  j["x"] = s.x;
  ordered_json fp = ordered_json::array();
  for (const auto& [a, b] : s.function_pairs) fp.push_back(ordered_json::array({a, b}));
  j["function_pairs"] = fp;
  j["weights"] = s.weights;
  j["holder_s"] = s.holder_s;
  if (s.tol_override) j["tol_override"] = *s.tol_override;
  j["samples_per_theorem"] = s.samples_per_theorem;
  j["seed"] = s.seed;
  return j.dump(2) + "\n";
}

std::vector<InequalityReport> run_sweep(const SweepSpec& spec, const QuadratureConfig& cfg) {
  std::mt19937_64 rng(spec.seed);
  std::vector<InequalityReport> reports;
  reports.reserve(spec.theorem_ids.size() * spec.samples_per_theorem);
  for (const std::string& id : spec.theorem_ids) {
    for (unsigned i = 0; i < spec.samples_per_theorem; ++i) {
      Tuple t = draw_tuple(spec, rng);
      InequalityReport r = run_one(id, t, cfg);
      if (spec.tol_override) {
        Integrand phi = parse_integrand(t.phi_spec);
        Integrand psi = parse_integrand(t.psi_spec);
        apply_tol_override(r, *spec.tol_override,
                           certify_pair(phi, psi, t.x).certified);
      }
      reports.push_back(std::move(r));
    }
  }
  std::sort(reports.begin(), reports.end(),
            [](const InequalityReport& a, const InequalityReport& b) {
              return report_key(a) < report_key(b);
            });
  return reports;
}

InequalityReport run_case(const std::string& id, const FractionalParams& p1,
                          const FractionalParams& p2, double x, const std::string& phi_spec,
                          const std::string& psi_spec, const std::string& w1_spec,
                          const std::string& w2_spec, const std::string& w3_spec,
                          double holder_s, const QuadratureConfig& cfg) {
  Integrand phi = parse_integrand(phi_spec);
  Integrand psi = parse_integrand(psi_spec);
  Integrand w1 = parse_integrand(w1_spec);
  Integrand w2 = parse_integrand(w2_spec.empty() ? w1_spec : w2_spec);
  Integrand w3 = parse_integrand(w3_spec.empty() ? w1_spec : w3_spec);
  EvalPoint X(x);
  SynchronousPair pair = certify_pair(phi, psi, x);
  HolderPair hp = HolderPair::conjugate(holder_s);

  if (id == "T3.1") return gap_t31(p1, pair, X, cfg);
  if (id == "T3.2") return gap_t32(p1, p2, pair, X, cfg);
  if (id == "L4.1") return gap_l41(p1, pair, w1, w2, X, cfg);
  if (id == "T4.2") return gap_t42(p1, pair, w1, w2, w3, X, cfg);
  if (id == "L4.3") return gap_l43(p1, p2, pair, w1, w2, X, cfg);
  if (id == "T4.4") return gap_t44(p1, p2, pair, w1, w2, w3, X, cfg);
  if (id == "T5.2") return chain_t52(p1, w1, phi, psi, hp, X, x, cfg);
  if (id == "T5.3") return chain_t53(p1, p2, w1, phi, psi, hp, X, x, cfg);

  if (id == "L5.1-identity") {
    IdentityResult ir = identity_l51(p1, w1, phi, psi, X, cfg);
    InequalityReport r{};
    r.theorem_id = id;
    r.params = p1;
    r.x = x;
    r.functions = {phi.spec(), psi.spec(), w1.spec()};
    r.operands = {{"lhs", ir.lhs}, {"rhs", ir.rhs}, {"residual", ir.residual}};
    r.tol = 1e-8 * std::max({std::fabs(ir.lhs), std::fabs(ir.rhs), 1.0});
    r.gap_or_chain = {-ir.residual};
    r.verdict = !ir.converged          ? Verdict::indeterminate
                : ir.residual <= r.tol ? Verdict::holds
                                       : Verdict::violated;
    return r;
  }

  if (id == "classical-T" || id == "classical-T4") {
    InequalityReport r{};
    r.theorem_id = id;
    r.params = reduce(ReductionKind::riemann_liouville, 1.0);
    r.x = x;
    double value;
    if (id == "classical-T") {
      r.functions = {phi.spec(), psi.spec()};
      value = classical_chebyshev(phi, psi, 0.0, x, cfg);
    } else {
      r.functions = {phi.spec(), psi.spec(), w1.spec(), w2.spec()};
      value = classical_extended(phi, psi, w1, w2, 0.0, x, cfg);
    }
    r.operands = {{"T", value}};
    r.gap_or_chain = {value};
    r.tol = 1e-8 * std::max(1.0, std::fabs(value));
    r.verdict = sign_verdict(value, r.tol, pair.certified, true);
    return r;
  }

  if (id == "remark-RL") {
    ChainTriple ct = remark_rl_chain(p1.alpha, w1, phi, psi, hp, x, x, cfg);
    InequalityReport r{};
    r.theorem_id = id;
    r.params = reduce(ReductionKind::riemann_liouville, p1.alpha);
    r.x = x;
    r.functions = {phi.spec(), psi.spec(), w1.spec()};
    r.operands = {{"A", ct.a},        {"B", ct.b},        {"C", ct.c},
                  {"holder_s", hp.s}, {"holder_v", hp.v}, {"T_norm", x}};
    r.gap_or_chain = {ct.a, ct.b, ct.c};
    r.tol = 1e-8 * std::max({1.0, std::fabs(ct.a), std::fabs(ct.b), std::fabs(ct.c)});
    r.verdict = !ct.converged ? Verdict::indeterminate
                : (ct.a <= ct.b + r.tol && ct.b <= ct.c + r.tol) ? Verdict::holds
                                                                 : Verdict::violated;
    return r;
  }

  throw std::runtime_error("unknown theorem id '" + id + "'");
}

std::string report_key(const InequalityReport& r) {
  std::string key = r.theorem_id;
  auto add = [&key](double v) {
    key += '|';
    key += fmt_real(v, "%.17g");
  };
  add(r.params.alpha);
  add(r.params.beta);
  if (r.params2) {
    add(r.params2->alpha);
    add(r.params2->beta);
  }
  add(r.params.rho);
  add(r.params.k);
  add(r.params.eta);
  add(r.x);
  for (const std::string& f : r.functions) {
    key += '|';
    key += f;
  }
  return key;
}

std::string reports_to_json(const std::vector<InequalityReport>& reports) {
  std::string out = "[";
  bool first_report = true;
  for (const InequalityReport& r : reports) {
    out += first_report ? "\n" : ",\n";
    first_report = false;
    out += "  {\n    \"theorem_id\": ";
    append_escaped(out, r.theorem_id);
    out += ",\n    \"params\": {";
    out += "\"alpha\": " + fmt_real(r.params.alpha, "%.15g");
    out += ", \"beta\": " + fmt_real(r.params.beta, "%.15g");
    if (r.params2) {
      out += ", \"delta\": " + fmt_real(r.params2->alpha, "%.15g");
      out += ", \"lambda\": " + fmt_real(r.params2->beta, "%.15g");
    }
    out += ", \"rho\": " + fmt_real(r.params.rho, "%.15g");
    out += ", \"k\": " + fmt_real(r.params.k, "%.15g");
    out += ", \"eta\": " + fmt_real(r.params.eta, "%.15g");
    out += "},\n    \"x\": " + fmt_real(r.x, "%.15g");
    out += ",\n    \"functions\": [";
    for (std::size_t i = 0; i < r.functions.size(); ++i) {
      if (i > 0) out += ", ";
      append_escaped(out, r.functions[i]);
    }
    out += "],\n    \"operands\": {";
    for (std::size_t i = 0; i < r.operands.size(); ++i) {
      if (i > 0) out += ", ";
      append_escaped(out, r.operands[i].first);
      out += ": " + fmt_real(r.operands[i].second, "%.15g");
    }
    out += "},\n    ";
    if (r.gap_or_chain.size() == 1) {
      out += "\"gap\": " + fmt_real(r.gap_or_chain[0], "%.15g");
    } else {
      out += "\"chain\": [";
      for (std::size_t i = 0; i < r.gap_or_chain.size(); ++i) {
        if (i > 0) out += ", ";
        out += fmt_real(r.gap_or_chain[i], "%.15g");
      }
      out += "]";
    }
    out += ",\n    \"tol\": " + fmt_real(r.tol, "%.15g");
    out += ",\n    \"verdict\": ";
    append_escaped(out, verdict_name(r.verdict));
    out += "\n  }";
  }
  out += "\n]\n";
  return out;
}

}  // namespace fracineq
