#include "mlae/conventional.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mlae {

ConventionalPoint conventional_error(double a, unsigned m, QueryConvention convention) {
  if (!(a > 0.0 && a < 1.0)) throw std::domain_error("a must lie in (0, 1)");
  if (m < 1 || m > 52) throw std::invalid_argument("register width must be in 1..52");

  ConventionalPoint point;
  point.m = m;
  point.grid = std::uint64_t{1} << m;
  const std::uint64_t applications = point.grid - 1;
  point.n_queries = convention == QueryConvention::kPreparationAndInverse
                        ? 2 * applications + 1
                        : applications;

  const double grid = static_cast<double>(point.grid);
  const double theta = std::asin(std::sqrt(a));
  const double target = theta * grid / std::numbers::pi;
  const std::array<double, 2> targets{target, grid - target};
  for (double t : targets) {
    const double lower = std::floor(t);
    for (double y : {lower, lower + 1.0}) {
      const double s = std::sin(std::numbers::pi * y / grid);
      point.worst_error = std::max(point.worst_error, std::abs(s * s - a));
    }
  }
  return point;
}

}  // namespace mlae
