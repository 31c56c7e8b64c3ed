#include "mlae/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "mlae/rng.hpp"
#include "mlae/sampling.hpp"
#include "mlae/statistics.hpp"

namespace mlae {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

/// One sweep point: a schedule run against a fixed target.
struct SweepPoint {
  std::string series;
  double a_target;
  std::uint32_t m;
  Schedule schedule;
  std::vector<double> probabilities;  // per entry; from the state vector or sin^2 model
};

/// Runs fn(i) for i in [0, count) on `workers` threads. Results are
/// index-addressed by the caller, so scheduling order never shows up.
template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
}

std::vector<double> model_probabilities(const Schedule& schedule, double a) {
  const auto amplitude = Amplitude::from_probability(a);
  std::vector<double> p;
  p.reserve(schedule.size());
  for (const auto& e : schedule.entries()) p.push_back(good_probability(amplitude.theta(), e.amplifications));
  return p;
}

ErrorRow aggregate(const SweepPoint& point, std::span<const double> estimates, double percentile) {
  ErrorRow row;
  row.kind = point.series;
  row.a_target = point.a_target;
  row.m = point.m;
  row.n_queries = query_count(point.schedule);

  double sq = 0.0, sum = 0.0;
  std::vector<double> abs_errors;
  abs_errors.reserve(estimates.size());
  for (double est : estimates) {
    const double e = est - point.a_target;
    sq += e * e;
    sum += e;
    abs_errors.push_back(std::abs(e));
  }
  const double reps = static_cast<double>(estimates.size());
  row.rmse = std::sqrt(sq / reps);
  row.bias = sum / reps;
  row.percentile_error = nearest_rank_percentile(std::move(abs_errors), percentile);
  const auto bounds = bound_report(point.schedule, point.a_target);
  row.crb = bounds.crb_error;
  row.classical_bound = bounds.classical_bound;
  row.gamma_fit = kNaN;
  row.delta_fit = kNaN;
  return row;
}

/// Estimates every (point, repetition) pair and aggregates per point.
std::vector<ErrorRow> simulate(const std::vector<SweepPoint>& points, const SweepConfig& config) {
  const std::size_t reps = config.repetitions;
  std::vector<double> estimates(points.size() * reps);
  parallel_for(estimates.size(), config.workers, [&](std::size_t task) {
    const auto& point = points[task / reps];
    const auto rep = static_cast<std::uint32_t>(task % reps);
    const auto seed = repetition_seed(config.seed, point.series, point.a_target, point.m, rep);
    const auto data = sample_counts_from_probabilities(point.schedule, point.probabilities, seed);
    estimates[task] = ml_estimate(data, point.schedule, config.ml).a_hat;
  });

  std::vector<ErrorRow> rows;
  rows.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    rows.push_back(aggregate(points[i], std::span(estimates).subspan(i * reps, reps),
                             config.percentile));
  }
  return rows;
}

void attach_fits(ErrorCurve& curve, FitMetric metric, double nq_min, double nq_max) {
  for (auto& row : curve.rows) {
    const auto fit = fit_series(curve, row.kind, row.a_target, metric, nq_min, nq_max);
    row.gamma_fit = fit ? fit->gamma : kNaN;
    row.delta_fit = fit ? fit->delta : kNaN;
  }
}

std::vector<SweepPoint> model_points(const SweepConfig& config, ScheduleKind kind,
                                     std::uint64_t shots, std::string series) {
  std::vector<SweepPoint> points;
  for (double a : config.a_targets) {
    for (auto m : sweep_depths(kind, shots, config.max_m, config.nq_max)) {
      auto schedule = make_schedule(kind, m, shots);
      auto probabilities = model_probabilities(schedule, a);
      points.push_back({series, a, m, std::move(schedule), std::move(probabilities)});
    }
  }
  return points;
}

}  // namespace

void SweepConfig::validate() const {
  if (a_targets.empty()) throw std::invalid_argument("at least one target probability required");
  for (double a : a_targets) {
    if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("target probabilities must lie in (0, 1)");
  }
  if (kinds.empty()) throw std::invalid_argument("at least one schedule kind required");
  if (shots == 0) throw std::invalid_argument("shots must be positive");
  if (repetitions == 0) throw std::invalid_argument("repetitions must be at least 1");
  if (!(percentile > 0.0 && percentile < 100.0)) {
    throw std::invalid_argument("percentile must lie in (0, 100)");
  }
  if (!(nq_min > 0.0 && nq_max > nq_min)) throw std::invalid_argument("bad fit window");
  ml.validate();
}

std::vector<std::uint32_t> sweep_depths(ScheduleKind kind, std::uint64_t shots,
                                        std::optional<std::uint32_t> max_m, double nq_max) {
  std::uint32_t last = 0;
  if (max_m) {
    last = *max_m;
  } else {
    while (static_cast<double>(make_schedule(kind, last, shots).query_count()) < nq_max) ++last;
  }
  std::vector<std::uint32_t> depths;
  if (kind == ScheduleKind::kClassical) {
    for (int i = 0;; ++i) {
      const auto count = static_cast<std::uint32_t>(std::llround(std::pow(10.0, i / 4.0)));
      if (count - 1 > last) break;
      if (depths.empty() || depths.back() != count - 1) depths.push_back(count - 1);
    }
    if (depths.back() != last) depths.push_back(last);
  } else {
    for (std::uint32_t m = 0; m <= last; ++m) depths.push_back(m);
  }
  return depths;
}

double nearest_rank_percentile(std::vector<double> values, double percentile) {
  if (values.empty()) throw std::invalid_argument("percentile of an empty sample");
  if (!(percentile > 0.0 && percentile <= 100.0)) throw std::invalid_argument("bad percentile");
  std::sort(values.begin(), values.end());
  const auto rank = static_cast<std::size_t>(
      std::ceil(percentile / 100.0 * static_cast<double>(values.size())));
  return values[std::clamp<std::size_t>(rank, 1, values.size()) - 1];
}

std::uint64_t repetition_seed(std::uint64_t seed, std::string_view series, double a_target,
                              std::uint32_t m, std::uint32_t rep) {
  std::uint64_t s = seed;
  for (char c : series) s = mix_seed(s, static_cast<std::uint64_t>(static_cast<unsigned char>(c)));
  s = mix_seed(s, a_target);
  s = mix_seed(s, static_cast<std::uint64_t>(m));
  return mix_seed(s, static_cast<std::uint64_t>(rep));
}

std::optional<SlopeFit> fit_series(const ErrorCurve& curve, std::string_view kind, double a_target,
                                   FitMetric metric, double nq_min, double nq_max) {
  std::vector<ErrorPoint> points;
  for (const auto& row : curve.rows) {
    if (row.kind != kind || row.a_target != a_target) continue;
    const double err = metric == FitMetric::kRmse ? row.rmse : row.percentile_error;
    if (!(err > 0.0)) continue;
    points.push_back({static_cast<double>(row.n_queries), err});
  }
  try {
    return fit_error_exponent(points, nq_min, nq_max);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

ErrorCurve run_sweep(const SweepConfig& config) {
  config.validate();
  std::vector<SweepPoint> points;
  for (auto kind : config.kinds) {
    auto more = model_points(config, kind, config.shots, std::string(to_string(kind)));
    std::move(more.begin(), more.end(), std::back_inserter(points));
  }
  ErrorCurve curve{simulate(points, config)};
  attach_fits(curve, FitMetric::kRmse, config.nq_min, config.nq_max);
  return curve;
}

ErrorCurve run_conventional_comparison(const SweepConfig& config, QueryConvention convention) {
  config.validate();
  const double a = config.a_targets.front();
  SweepConfig single = config;
  single.a_targets = {a};

  ErrorCurve curve;
  // Conventional estimator: registers until the query count passes the window.
  for (unsigned m = 1; m <= 52; ++m) {
    const auto point = conventional_error(a, m, convention);
    ErrorRow row;
    row.kind = "conventional";
    row.a_target = a;
    row.m = m;
    row.n_queries = point.n_queries;
    row.rmse = kNaN;
    row.bias = kNaN;
    row.percentile_error = point.worst_error;
    row.crb = kNaN;
    row.classical_bound = std::sqrt(a * (1.0 - a) / static_cast<double>(point.n_queries));
    curve.rows.push_back(row);
    if (static_cast<double>(point.n_queries) >= config.nq_max) break;
  }

  std::vector<SweepPoint> points;
  for (std::uint64_t shots : {std::uint64_t{30}, std::uint64_t{100}}) {
    auto more = model_points(single, ScheduleKind::kExponential, shots,
                             "eis_n" + std::to_string(shots));
    std::move(more.begin(), more.end(), std::back_inserter(points));
  }
  auto classical = model_points(single, ScheduleKind::kClassical, config.shots,
                                "classical_n" + std::to_string(config.shots));
  std::move(classical.begin(), classical.end(), std::back_inserter(points));

  auto rows = simulate(points, single);
  std::move(rows.begin(), rows.end(), std::back_inserter(curve.rows));
  attach_fits(curve, FitMetric::kPercentile, config.nq_min, config.nq_max);
  return curve;
}

ErrorCurve run_integration_sweep(const SweepConfig& config, const IntegralProblem& problem) {
  problem.validate();
  SweepConfig single = config;
  single.a_targets = {exact_sum(problem)};
  single.validate();
  std::vector<SweepPoint> points;
  for (auto kind : single.kinds) {
    for (auto m : sweep_depths(kind, single.shots, single.max_m, single.nq_max)) {
      auto schedule = make_schedule(kind, m, single.shots);
      auto probabilities = amplified_probabilities(problem, schedule);
      points.push_back({std::string(to_string(kind)), single.a_targets.front(), m,
                        std::move(schedule), std::move(probabilities)});
    }
  }
  ErrorCurve curve{simulate(points, single)};
  attach_fits(curve, FitMetric::kRmse, single.nq_min, single.nq_max);
  return curve;
}

}  // namespace mlae
