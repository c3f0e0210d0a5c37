#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "kled/divergence.hpp"
#include "kled/kled.hpp"
#include "kled/logistic.hpp"

namespace {

void BM_exp_ext(benchmark::State& state) {
  kled::ExtFunParams p{kled::parse_exponent("16/9")};
  double x = -1.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kled::exp_ext(x, p));
    x = x < 4 ? x + 1e-9 : -1.3;
  }
}
BENCHMARK(BM_exp_ext);

void BM_bregman_beta(benchmark::State& state) {
  auto pair = kled::make_legendre_pair(kled::parse_exponent("4/3"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kled::bregman_beta(1.7, 0.4, pair));
  }
}
BENCHMARK(BM_bregman_beta);

void BM_kth_cumulant(benchmark::State& state) {
  auto model = kled::make_model(kled::parse_exponent("0"), 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kled::kth_cumulant(-1.1, 4, model));
  }
}
BENCHMARK(BM_kth_cumulant);

void BM_logistic_hess(benchmark::State& state) {
  auto params = kled::make_logistic_params(kled::parse_exponent("11/10"),
                                           kled::parse_exponent("7/10"), 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kled::loss_hess(0.5, params));
  }
}
BENCHMARK(BM_logistic_hess);

void BM_normalize_gaussian(benchmark::State& state) {
  auto model = kled::make_model(kled::parse_exponent("2"), 1.0);
  double theta = 0.0;
  for (auto _ : state) {
    // fresh theta each round so the cache does not absorb the work
    theta += 1e-6;
    benchmark::DoNotOptimize(kled::normalize(model, theta));
  }
}
BENCHMARK(BM_normalize_gaussian);

void BM_mle(benchmark::State& state) {
  std::mt19937 rng(42);
  std::gamma_distribution<double> d(2.0, 1.0);
  std::vector<double> obs(1024);
  for (auto& b : obs) b = d(rng);
  auto model = kled::make_model(kled::parse_exponent("0"), 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kled::mle_theta(obs, model));
  }
}
BENCHMARK(BM_mle);

}  // namespace

int main(int argc, char** argv) {
  ::benchmark::Initialize(&argc, argv);
  if (::benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  ::benchmark::RunSpecifiedBenchmarks();
  ::benchmark::Shutdown();
  return 0;
}
