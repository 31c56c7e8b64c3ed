#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mlae/conventional.hpp"
#include "mlae/likelihood.hpp"
#include "mlae/montecarlo.hpp"
#include "mlae/schedule.hpp"

namespace mlae {

/// Which error statistic a series' slope fit is computed on.
enum class FitMetric { kRmse, kPercentile };

struct SweepConfig {
  std::vector<double> a_targets{1.0 / 48.0};
  std::vector<ScheduleKind> kinds{ScheduleKind::kClassical, ScheduleKind::kLinear,
                                  ScheduleKind::kExponential};
  /// Largest M per kind. Unset: the first M whose query count reaches nq_max.
  std::optional<std::uint32_t> max_m;
  std::uint64_t shots = 100;
  std::uint32_t repetitions = 1000;
  std::uint64_t seed = 1;
  double percentile = 81.0;
  double nq_min = 1e3;
  double nq_max = 1e5;
  unsigned workers = 1;
  MLConfig ml;

  /// Throws std::invalid_argument on an unusable configuration.
  void validate() const;
};

/// One (series, target, M) aggregate. NaN marks a column that does not apply.
struct ErrorRow {
  std::string kind;
  double a_target = 0.0;
  std::uint32_t m = 0;
  std::uint64_t n_queries = 0;
  double rmse = 0.0;
  double bias = 0.0;
  double percentile_error = 0.0;
  double crb = 0.0;
  double classical_bound = 0.0;
  double gamma_fit = 0.0;
  double delta_fit = 0.0;
};

struct ErrorCurve {
  std::vector<ErrorRow> rows;
};

/// Depth indices M swept for a kind. Classical runs use roughly four
/// log-spaced values of M + 1 per decade; LIS and EIS use every M.
std::vector<std::uint32_t> sweep_depths(ScheduleKind kind, std::uint64_t shots,
                                        std::optional<std::uint32_t> max_m, double nq_max);

/// Nearest-rank percentile: the ceil(p/100 * R)-th smallest value.
double nearest_rank_percentile(std::vector<double> values, double percentile);

/// Seed of repetition `rep` for one sweep point. Independent of worker count.
std::uint64_t repetition_seed(std::uint64_t seed, std::string_view series, double a_target,
                              std::uint32_t m, std::uint32_t rep);

/// Repeated ML estimation for every (target, kind, M), aggregated into RMSE,
/// bias, percentile error and the Cramer-Rao / classical bounds. Each series
/// gets a slope fit of RMSE against N_q over [nq_min, nq_max].
ErrorCurve run_sweep(const SweepConfig& config);

/// Series for the phase-estimation comparison at config.a_targets.front():
/// the deterministic conventional curve, EIS with 30 and 100 shots, and
/// classical sampling with config.shots. Fits use the percentile error.
ErrorCurve run_conventional_comparison(const SweepConfig& config,
                                   QueryConvention convention = QueryConvention::kPreparationAndInverse);

/// run_sweep with measurement probabilities taken from the state-vector
/// simulation of `problem`; a_target is the exact Riemann sum.
ErrorCurve run_integration_sweep(const SweepConfig& config, const IntegralProblem& problem);

/// Slope fit of one series in a curve, NaN-free rows only.
std::optional<SlopeFit> fit_series(const ErrorCurve& curve, std::string_view kind, double a_target,
                                   FitMetric metric, double nq_min, double nq_max);

}  // namespace mlae
