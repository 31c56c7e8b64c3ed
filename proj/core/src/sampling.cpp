#include "mlae/sampling.hpp"

#include <stdexcept>

#include "mlae/rng.hpp"

namespace mlae {

MeasurementData sample_counts(const Schedule& schedule, const Amplitude& amplitude,
                              std::uint64_t seed) {
  std::vector<double> probabilities;
  probabilities.reserve(schedule.size());
  for (const auto& e : schedule.entries()) {
    probabilities.push_back(good_probability(amplitude.theta(), e.amplifications));
  }
  return sample_counts_from_probabilities(schedule, probabilities, seed);
}

MeasurementData sample_counts_from_probabilities(const Schedule& schedule,
                                                 std::span<const double> probabilities,
                                                 std::uint64_t seed) {
  if (probabilities.size() != schedule.size()) {
    throw std::invalid_argument("one probability per schedule entry required");
  }
  MeasurementData data;
  data.seed = seed;
  data.hits.reserve(schedule.size());
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(k)));
    data.hits.push_back(draw_binomial(rng, schedule[k].shots, probabilities[k]));
  }
  return data;
}

}  // namespace mlae
