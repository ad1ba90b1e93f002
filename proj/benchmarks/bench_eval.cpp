#include <benchmark/benchmark.h>

#include <cmath>

#include "adhesion/convergence.hpp"
#include "adhesion/gauss_erfc.hpp"
#include "adhesion/limit.hpp"
#include "adhesion/measure.hpp"
#include "adhesion/quadrature.hpp"
#include "adhesion/viscous.hpp"

using namespace adhesion;

namespace {
const ProblemParams kP = validate_params(0, 1, 2, 3, -1, 1, 1, 2);
const CurveSet kCs = build_curves(kP, classify_case(kP));
} // namespace

static void BM_erfcx(benchmark::State& state) {
  double z = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(erfcx_gauss(z));
    z = z < 30.0 ? z + 0.1 : 0.1;
  }
}
BENCHMARK(BM_erfcx);

static void BM_u_eps_stable(benchmark::State& state) {
  const double eps = std::pow(10.0, -static_cast<double>(state.range(0)));
  double x = -4.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(u_eps_stable(kP, x, 1.0, eps).value);
    x = x < 7.0 ? x + 0.37 : -4.0;
  }
}
BENCHMARK(BM_u_eps_stable)->Arg(0)->Arg(2)->Arg(6);

static void BM_v_quad(benchmark::State& state) {
  double x = -4.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(v_quad(kP, x, 1.0, 0.1, 1e-10).value);
    x = x < 7.0 ? x + 0.41 : -4.0;
  }
}
BENCHMARK(BM_v_quad);

static void BM_u_limit(benchmark::State& state) {
  double x = -4.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(u_limit(kP, kCs, x, 1.3).value);
    x = x < 7.0 ? x + 0.29 : -4.0;
  }
}
BENCHMARK(BM_u_limit);

static void BM_pair_measure(benchmark::State& state) {
  const Measure1D m = rho_measure(kP, kCs, 1.0);
  const Bump phi{0.5, 2.0, 1.0, 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(pair_measure(kP, m, phi, 1.0));
}
BENCHMARK(BM_pair_measure);

BENCHMARK_MAIN();
