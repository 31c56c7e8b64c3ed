#pragma once

#include <cstdint>

namespace mlae {

/// How oracle calls of phase-estimation amplitude estimation are counted.
enum class QueryConvention {
  /// 2 (2^m - 1) + 1: each controlled-Q costs two calls, plus the preparation,
  /// matching the N_k (2 m_k + 1) count of the likelihood method.
  kPreparationAndInverse,
  /// 2^m - 1: one call per controlled-Q application.
  kControlledQOnly,
};

struct ConventionalPoint {
  unsigned m = 0;                 // ancilla register width
  std::uint64_t grid = 0;         // M = 2^m
  std::uint64_t n_queries = 0;
  double worst_error = 0.0;
};

/// Deterministic error model of phase-estimation amplitude estimation.
///
/// With M = 2^m, the outcome lands on one of the integers bracketing
/// theta_a M / pi or M - theta_a M / pi (floor and floor + 1 of each). Each
/// integer y maps to sin^2(pi y / M); worst_error is the largest |estimate - a|
/// over those four candidates.
ConventionalPoint conventional_error(double a, unsigned m,
                                     QueryConvention convention = QueryConvention::kPreparationAndInverse);

}  // namespace mlae
