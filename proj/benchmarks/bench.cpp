#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include <rootrel/groupring.hpp>
#include <rootrel/lll.hpp>
#include <rootrel/pipeline.hpp>
#include <rootrel/roots.hpp>

using namespace rootrel;

static void BM_FindRootsSextic(benchmark::State& state) {
  numeric::set_working_digits(static_cast<int>(state.range(0)));
  numeric::IntPolynomial f =
      numeric::IntPolynomial::from_longs({3, 0, 0, 0, 0, 0, 1});
  numeric::PrecisionPolicy policy;
  policy.digits = static_cast<int>(state.range(0));
  policy.max_digits = policy.digits * 4;
  for (auto _ : state) {
    numeric::RootList rl = numeric::find_roots(f, policy);
    benchmark::DoNotOptimize(rl.roots.data());
  }
}
BENCHMARK(BM_FindRootsSextic)->Arg(64)->Arg(128)->Arg(256);

static void BM_IntegerRelation(benchmark::State& state) {
  const int digits = 96;
  numeric::set_working_digits(digits);
  numeric::IntPolynomial f =
      numeric::IntPolynomial::from_longs({3, 0, 0, 0, 0, 0, 1});
  numeric::PrecisionPolicy policy;
  policy.digits = digits;
  numeric::RootList rl = numeric::find_roots(f, policy);
  std::vector<numeric::BigComplex> powers(7);
  powers[0] = numeric::BigComplex::from_int(1);
  for (int i = 1; i <= 6; ++i) powers[i] = powers[i - 1] * rl.roots[0];
  for (auto _ : state) {
    auto rel = numeric::integer_relation(powers, digits, algebra::BigInt(100));
    benchmark::DoNotOptimize(rel);
  }
}
BENCHMARK(BM_IntegerRelation);

static void BM_GroupRingConvolution(benchmark::State& state) {
  group::Permutation sigma({4, 5, 0, 1, 6, 7, 2, 3});
  group::Permutation mu({7, 6, 3, 2, 5, 4, 1, 0});
  group::Relabeling rel =
      group::relabel_group(group::close_generators({sigma, mu}, 8));
  std::mt19937_64 rng(7);
  algebra::GroupRingQ a(&rel.group), b(&rel.group);
  for (int i = 0; i < 8; ++i) {
    a[i] = algebra::make_rational(static_cast<long>(rng() % 19) - 9,
                                  static_cast<long>(rng() % 6) + 1);
    b[i] = algebra::make_rational(static_cast<long>(rng() % 19) - 9,
                                  static_cast<long>(rng() % 6) + 1);
  }
  for (auto _ : state) {
    algebra::GroupRingQ c = a * b;
    benchmark::DoNotOptimize(c.coeffs().data());
  }
}
BENCHMARK(BM_GroupRingConvolution);

static void BM_PipelineQuadratic(benchmark::State& state) {
  pipeline::AnalysisRequest req =
      pipeline::parse_request(R"({"polynomial": [-2, 0, 1]})");
  for (auto _ : state) {
    pipeline::AnalysisReport rep = pipeline::run_pipeline(req);
    benchmark::DoNotOptimize(rep.rows.data());
  }
}
BENCHMARK(BM_PipelineQuadratic);

static void BM_PipelineSexticNoOracle(benchmark::State& state) {
  pipeline::AnalysisRequest req = pipeline::parse_request(
      R"({"polynomial": [3, 0, 0, 0, 0, 0, 1], "options": {"oracle": false}})");
  for (auto _ : state) {
    pipeline::AnalysisReport rep = pipeline::run_pipeline(req);
    benchmark::DoNotOptimize(rep.rows.data());
  }
}
BENCHMARK(BM_PipelineSexticNoOracle);

BENCHMARK_MAIN();
