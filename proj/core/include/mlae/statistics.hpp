#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "mlae/schedule.hpp"

namespace mlae {

/// Theory bounds for a schedule at a given probability a.
struct BoundReport {
  double fisher = 0.0;           // I(a)
  std::uint64_t n_queries = 0;   // N_q
  double crb_error = 0.0;        // I(a)^(-1/2)
  double classical_bound = 0.0;  // sqrt(a (1 - a) / N_q)
};

/// Result of fitting log10(error) = gamma * log10(N_q) + delta.
struct SlopeFit {
  double gamma = 0.0;
  double delta = 0.0;
  double r_squared = 0.0;
  std::pair<double, double> range{0.0, 0.0};
  std::size_t points = 0;
};

struct ErrorPoint {
  double n_queries;
  double error;
};

/// Closed-form Fisher information about a:
///   I(a) = sum_k N_k (2 m_k + 1)^2 / (a (1 - a)).
/// Throws std::domain_error unless 0 < a < 1.
double fisher_information(const Schedule& schedule, double a);

/// N_q = sum_k N_k (2 m_k + 1). The +1 is the state preparation, the 2 m_k
/// are the forward and inverse preparation calls inside each amplification.
std::uint64_t query_count(const Schedule& schedule);

/// Cramer-Rao limit on the RMSE of an unbiased estimator, I(a)^(-1/2).
double cramer_rao_error(const Schedule& schedule, double a);

BoundReport bound_report(const Schedule& schedule, double a);

/// Largest number of joint outcomes fisher_oracle will enumerate.
inline constexpr std::uint64_t kMaxOracleOutcomes = 1'000'000;

/// Fisher information by brute force: E[(d/da ln L(h; a))^2] over every joint
/// outcome h, weighted by its exact binomial probability. The score is
/// differentiated analytically through theta(a). Throws std::invalid_argument
/// when prod_k (N_k + 1) exceeds kMaxOracleOutcomes.
double fisher_oracle(const Schedule& schedule, double a);

/// Unweighted least squares on (log10 N_q, log10 error) for points with N_q
/// inside [nq_min, nq_max]. Needs at least three such points, all with
/// positive error.
SlopeFit fit_error_exponent(std::span<const ErrorPoint> points, double nq_min, double nq_max);

}  // namespace mlae
