// Microbenchmarks for the hot paths: best responses, full plays, the
// analytic tests and a miniature sweep.

#include <benchmark/benchmark.h>

#include <trustgame/trustgame.hpp>

namespace {

namespace tg = trustgame;

tg::Vec vec2(double x, double y) {
  tg::Vec v(2);
  v << x, y;
  return v;
}

tg::GameParams mismatch_game(double x, double y) {
  tg::GameParams p;
  p.y_hat = vec2(0.8, 0.0);
  p.mu = vec2(0.0, 0.0);
  p.zeta = vec2(0.3, -0.2);
  p.y_attack = vec2(x, y);
  return p;
}

void BM_SensorBestResponse(benchmark::State& state) {
  const tg::GameParams p = mismatch_game(0.25, -0.2);
  const tg::Vec y_bar = vec2(-0.4, 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tg::best_response_sensor(y_bar, p));
  }
}
BENCHMARK(BM_SensorBestResponse);

void BM_AttackerBestResponse(benchmark::State& state) {
  const tg::GameParams p = mismatch_game(0.25, -0.2);
  const tg::FusionWeight alpha(0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tg::best_response_attacker(alpha, p));
  }
}
BENCHMARK(BM_AttackerBestResponse);

void BM_IbrRunScalar(benchmark::State& state) {
  tg::GameParams p;
  p.y_hat = tg::Vec::Constant(1, 1.0);
  p.mu = tg::Vec::Zero(1);
  p.zeta = tg::Vec::Zero(1);
  p.y_attack = tg::Vec::Constant(1, -0.2);
  const tg::Vec y0 = tg::Vec::Constant(1, -0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tg::ibr_run(p, y0));
  }
}
BENCHMARK(BM_IbrRunScalar);

void BM_IbrRunPlane(benchmark::State& state) {
  const tg::GameParams p = mismatch_game(0.25, -0.2);
  const tg::Vec y0 = vec2(-0.4, 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tg::ibr_run(p, y0));
  }
}
BENCHMARK(BM_IbrRunPlane);

void BM_EvaluatePredicates(benchmark::State& state) {
  const tg::GameParams p = mismatch_game(0.25, -0.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tg::evaluate_predicates(p));
  }
}
BENCHMARK(BM_EvaluatePredicates);

void BM_MixedEquilibria(benchmark::State& state) {
  const tg::GameParams p = mismatch_game(-0.45, -0.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tg::analyze_mixed_equilibria(p));
  }
}
BENCHMARK(BM_MixedEquilibria);

void BM_VerifyNash(benchmark::State& state) {
  const tg::GameParams p = mismatch_game(-0.45, -0.2);
  const auto eqs = tg::mixed_equilibria(p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tg::verify_nash(eqs.front(), p));
  }
}
BENCHMARK(BM_VerifyNash);

void BM_SweepTiny(benchmark::State& state) {
  tg::SweepConfig cfg;
  cfg.base = mismatch_game(0.0, 0.0);
  cfg.grid.x = {-1.0, 1.0, 0.5};
  cfg.grid.y = {-1.0, 1.0, 0.5};
  cfg.init_count = 5;
  cfg.seed = 7;
  cfg.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tg::run_sweep(cfg));
  }
}
BENCHMARK(BM_SweepTiny);

}  // namespace

BENCHMARK_MAIN();
