#pragma once

#include <cstdint>

#include "mlae/sampling.hpp"
#include "mlae/schedule.hpp"

namespace mlae {

/// Tuning of the staged grid search in ml_estimate.
struct MLConfig {
  std::uint32_t grid_points = 10000;  // stage-0 grid over [0, pi/2]; cap for later windows
  std::uint32_t refine_rounds = 20;   // local shrinking rounds after the last stage
  double refine_factor = 2.0;         // spacing divisor per stage and per round
  double prob_clamp = 1e-12;          // floor for probabilities inside a log

  /// Throws std::invalid_argument unless grid_points >= 2, refine_factor > 1
  /// and prob_clamp is in (0, 1e-6].
  void validate() const;
};

struct MLResult {
  double theta_hat = 0.0;
  double a_hat = 0.0;
  double log_likelihood_at_max = 0.0;
  std::uint64_t evaluations = 0;
  double resolution = 0.0;  // grid spacing of the final refinement round
};

/// Combined log-likelihood
///   sum_k h_k ln(p_k) + (N_k - h_k) ln(1 - p_k),  p_k = sin^2((2 m_k + 1) theta),
/// with 1 - p_k evaluated as cos^2((2 m_k + 1) theta) and each probability
/// floored at prob_clamp. Terms with a zero count are skipped.
double log_likelihood(const MeasurementData& data, const Schedule& schedule, double theta,
                      double prob_clamp = MLConfig{}.prob_clamp);

/// Maximum-likelihood angle by incremental brute-force search.
///
/// Stage 0 scans `grid_points` angles over [0, pi/2] using the first depth
/// only. Each following stage adds the next depth's factor and re-scans a
/// window of half-width pi / (2 (2 m + 1)) around the previous maximizer,
/// the half-period of the factor just added, with spacing reduced by
/// `refine_factor` (at most `grid_points` points per window). Consecutive
/// entries with equal depth form a single stage. `refine_rounds` rounds of
/// local shrinking finish the search. Exact ties go to the smaller angle.
MLResult ml_estimate(const MeasurementData& data, const Schedule& schedule,
                     const MLConfig& config = {});

}  // namespace mlae
