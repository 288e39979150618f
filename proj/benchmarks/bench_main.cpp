// Microbenchmarks for the hot paths: rule construction, operator
// evaluation, and a full inequality assembly.

#include <benchmark/benchmark.h>

#include "fracineq/inequalities.hpp"
#include "fracineq/operator.hpp"
#include "fracineq/quadrature.hpp"

namespace {

void bm_jacobi_rule(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto rule = fracineq::jacobi_rule(0.5, -0.25, n);
    benchmark::DoNotOptimize(rule.nodes.data());
    benchmark::DoNotOptimize(rule.weights.data());
  }
}

void bm_operator(benchmark::State& state) {
  const fracineq::FractionalParams params(0.75, 0.25, 2.0, 0.5, 0.5);
  const auto f = fracineq::parse_integrand("pow:2");
  const fracineq::EvalPoint x(1.5);
  for (auto _ : state) {
    double v = fracineq::katugampola_integral(params, f, x);
    benchmark::DoNotOptimize(v);
  }
}

void bm_gap_t31(benchmark::State& state) {
  const fracineq::FractionalParams params(1.5, 0.5, 0.5, 0.0, 0.25);
  const auto pair = fracineq::certify_pair(fracineq::parse_integrand("pow:1"),
                                           fracineq::parse_integrand("pow:2"), 2.0);
  const fracineq::EvalPoint x(2.0);
  for (auto _ : state) {
    auto report = fracineq::gap_t31(params, pair, x);
    benchmark::DoNotOptimize(report.gap_or_chain.data());
  }
}

void bm_chain_t52(benchmark::State& state) {
  const fracineq::FractionalParams params(1.0, 1.0, 1.0, 0.0, 0.0);
  const auto h = fracineq::parse_integrand("const:1");
  const auto phi = fracineq::parse_integrand("pow:1");
  const auto psi = fracineq::parse_integrand("pow:2");
  const fracineq::HolderPair hp = fracineq::HolderPair::conjugate(2.0);
  const fracineq::EvalPoint x(1.0);
  for (auto _ : state) {
    auto report = fracineq::chain_t52(params, h, phi, psi, hp, x, 1.0);
    benchmark::DoNotOptimize(report.gap_or_chain.data());
  }
}

}  // namespace

BENCHMARK(bm_jacobi_rule)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK(bm_operator);
BENCHMARK(bm_gap_t31);
BENCHMARK(bm_chain_t52)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  ::benchmark::Initialize(&argc, argv);
  if (::benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  ::benchmark::RunSpecifiedBenchmarks();
  return 0;
}
