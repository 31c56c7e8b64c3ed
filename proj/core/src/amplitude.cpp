#include "mlae/amplitude.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mlae {

namespace {

void check_angle(double theta) {
  if (!(theta >= 0.0 && theta <= kHalfPi)) {
    throw std::domain_error("angle " + std::to_string(theta) + " outside [0, pi/2]");
  }
}

}  // namespace

Amplitude Amplitude::from_probability(double a) {
  if (!(a >= 0.0 && a <= 1.0)) {
    throw std::domain_error("probability " + std::to_string(a) + " outside [0, 1]");
  }
  // asin(1.0) rounds to exactly pi/2 in IEEE double, so the range check below holds.
  return Amplitude(std::asin(std::sqrt(a)));
}

Amplitude Amplitude::from_angle(double theta) {
  check_angle(theta);
  return Amplitude(theta);
}

double Amplitude::probability() const noexcept {
  const double s = std::sin(theta_);
  return s * s;
}

double good_probability(double theta, std::uint64_t m) {
  check_angle(theta);
  const double s = std::sin(static_cast<double>(2 * m + 1) * theta);
  return s * s;
}

}  // namespace mlae
