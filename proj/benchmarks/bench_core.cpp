#include <benchmark/benchmark.h>

#include "mlae/likelihood.hpp"
#include "mlae/montecarlo.hpp"
#include "mlae/sampling.hpp"

namespace {

constexpr double kTarget = 1.0 / 48.0;

void BM_LogLikelihood(benchmark::State& state) {
  const auto schedule = mlae::make_schedule(mlae::ScheduleKind::kLinear, state.range(0), 100);
  const auto data = mlae::sample_counts(schedule, mlae::Amplitude::from_probability(kTarget), 1);
  double theta = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mlae::log_likelihood(data, schedule, theta));
    theta = theta < 1.5 ? theta + 1e-4 : 0.1;
  }
}
BENCHMARK(BM_LogLikelihood)->Arg(8)->Arg(31);

void BM_MlEstimate(benchmark::State& state, mlae::ScheduleKind kind) {
  const auto schedule = mlae::make_schedule(kind, state.range(0), 100);
  const auto amplitude = mlae::Amplitude::from_probability(kTarget);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    state.PauseTiming();
    const auto data = mlae::sample_counts(schedule, amplitude, seed++);
    state.ResumeTiming();
    benchmark::DoNotOptimize(mlae::ml_estimate(data, schedule));
  }
}
BENCHMARK_CAPTURE(BM_MlEstimate, eis, mlae::ScheduleKind::kExponential)
    ->Arg(4)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MlEstimate, lis, mlae::ScheduleKind::kLinear)
    ->Arg(8)->Arg(31)->Unit(benchmark::kMillisecond);

void BM_ApplyQ(benchmark::State& state) {
  const mlae::IntegralProblem problem{static_cast<unsigned>(state.range(0)), 0.7853981633974483};
  auto psi = mlae::apply_A(mlae::StateVector::zero(problem.n), problem);
  for (auto _ : state) {
    psi = mlae::apply_Q(std::move(psi), problem, 1);
    benchmark::DoNotOptimize(psi.amplitudes().data());
  }
}
BENCHMARK(BM_ApplyQ)->DenseRange(2, 12, 5);

void BM_SampleCounts(benchmark::State& state) {
  const auto schedule = mlae::make_schedule(mlae::ScheduleKind::kExponential, 9, state.range(0));
  const auto amplitude = mlae::Amplitude::from_probability(kTarget);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(mlae::sample_counts(schedule, amplitude, seed++));
}
BENCHMARK(BM_SampleCounts)->Arg(100)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
