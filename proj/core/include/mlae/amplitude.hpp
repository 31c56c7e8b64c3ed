#pragma once

#include <cstdint>
#include <numbers>

namespace mlae {

inline constexpr double kHalfPi = std::numbers::pi / 2.0;

/// Probability of the good state a together with its angle theta, a = sin^2(theta).
///
/// The angle is the stored quantity; a is derived on demand so values close to
/// 0 or 1 keep full precision in theta.
class Amplitude {
 public:
  /// Canonical amplitude for a probability in [0, 1]. Throws std::domain_error otherwise.
  static Amplitude from_probability(double a);
  /// Amplitude for an angle in [0, pi/2]. Throws std::domain_error otherwise.
  static Amplitude from_angle(double theta);

  double theta() const noexcept { return theta_; }
  double probability() const noexcept;

  friend bool operator==(const Amplitude&, const Amplitude&) = default;

 private:
  explicit Amplitude(double theta) : theta_(theta) {}
  double theta_;
};

/// sin^2((2m + 1) theta): the probability of measuring the good state after m
/// applications of the amplification operator. theta must lie in [0, pi/2].
double good_probability(double theta, std::uint64_t m);

}  // namespace mlae
