#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mlae/amplitude.hpp"
#include "mlae/schedule.hpp"

namespace mlae {

/// Good-state hit counts h_k, one per schedule entry, and the seed that produced them.
struct MeasurementData {
  std::vector<std::uint64_t> hits;
  std::uint64_t seed = 0;

  friend bool operator==(const MeasurementData&, const MeasurementData&) = default;
};

/// Simulates the amplified measurements: h_k ~ Binomial(N_k, sin^2((2 m_k + 1) theta)).
///
/// Entry k draws from substream mix_seed(seed, k), so the result is a pure
/// function of (schedule, amplitude, seed).
MeasurementData sample_counts(const Schedule& schedule, const Amplitude& amplitude,
                              std::uint64_t seed);

/// Same draw rule with caller-supplied per-entry good-state probabilities.
/// Used when the probabilities come from a state-vector simulation.
MeasurementData sample_counts_from_probabilities(const Schedule& schedule,
                                                 std::span<const double> probabilities,
                                                 std::uint64_t seed);

}  // namespace mlae
