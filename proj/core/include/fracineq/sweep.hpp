#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fracineq/inequalities.hpp"
#include "fracineq/quadrature.hpp"

namespace fracineq {

// A beta (or lambda) entry is either a plain number or tied to the order
// parameter of its set ("alpha" / "delta" in the JSON), covering the
// Katugampola-style beta = alpha specialization inside sweeps.
struct TiedValue {
  bool tied = false;
  double value = 0.0;

  bool operator==(const TiedValue&) const = default;
};

// Randomized verification sweep: for each listed theorem, samples_per_theorem
// tuples are drawn from the value lists below with an mt19937_64 stream
// seeded by `seed`, so a sweep file fully determines its report set.
struct SweepSpec {
  std::vector<std::string> theorem_ids;
  std::vector<double> alpha;
  std::vector<TiedValue> beta;
  std::vector<double> delta;
  std::vector<TiedValue> lambda;
  std::vector<double> rho;
  std::vector<double> k;
  std::vector<double> eta;
  std::vector<double> x;
  std::vector<std::pair<std::string, std::string>> function_pairs;
  std::vector<std::string> weights;
  std::vector<double> holder_s;
  std::optional<double> tol_override;
  unsigned samples_per_theorem = 40;
  std::uint64_t seed = 0;

  bool operator==(const SweepSpec&) const = default;
};

// Parses a SweepSpec from JSON text. Unknown theorem ids, empty value lists
// and type mismatches raise std::runtime_error naming the offending field.
SweepSpec parse_sweep(const std::string& json_text);

// Inverse of parse_sweep up to formatting: parse(serialize(s)) == s.
std::string serialize_sweep(const SweepSpec& spec);

// Runs the sweep and returns reports sorted by their canonical key.
std::vector<InequalityReport> run_sweep(const SweepSpec& spec,
                                        const QuadratureConfig& cfg = {});

// Builds the report for one theorem instance from textual function specs.
// p2 supplies the second (delta, lambda) parameter set where a theorem uses
// one; single-parameter statements ignore it. w2/w3 fall back to w1 when
// empty. Unknown theorem ids raise std::runtime_error.
InequalityReport run_case(const std::string& theorem_id, const FractionalParams& p1,
                          const FractionalParams& p2, double x, const std::string& phi,
                          const std::string& psi, const std::string& w1,
                          const std::string& w2, const std::string& w3, double holder_s,
                          const QuadratureConfig& cfg = {});

// theorem_id|alpha|beta[|delta|lambda]|rho|k|eta|x|functions... with reals
// rendered at full precision; total order on reports independent of
// execution order.
std::string report_key(const InequalityReport& r);

// Deterministic JSON rendering: fixed field order, %.15g reals, reports in
// key order. Byte-identical across runs for identical inputs.
std::string reports_to_json(const std::vector<InequalityReport>& reports);

}  // namespace fracineq
