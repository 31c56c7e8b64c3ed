#include "mlae/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "mlae/likelihood.hpp"
#include "mlae/montecarlo.hpp"
#include "mlae/sampling.hpp"
#include "mlae/statistics.hpp"

namespace mlae {

namespace {

CheckResult make_result(std::string name, double deviation, double tolerance) {
  return {std::move(name), deviation <= tolerance, deviation, tolerance};
}

CheckResult check_fisher() {
  double worst = 0.0;
  const Schedule schedules[] = {make_schedule(ScheduleKind::kLinear, 2, 12),
                                make_schedule(ScheduleKind::kExponential, 3, 6),
                                Schedule({{4, 40}, {0, 40}})};
  for (const auto& s : schedules) {
    for (double a : {0.1, 1.0 / 3, 0.5, 0.9}) {
      const double closed = fisher_information(s, a);
      worst = std::max(worst, std::abs(fisher_oracle(s, a) - closed) / closed);
    }
  }
  return make_result("fisher closed form vs enumeration (relative)", worst, 1e-9);
}

CheckResult check_amplitude_identity() {
  double worst = 0.0;
  for (unsigned n = 1; n <= 3; ++n) {
    for (double b : {std::numbers::pi / 8, std::numbers::pi / 4, std::numbers::pi / 2}) {
      const IntegralProblem problem{n, b};
      const double theta = std::asin(std::sqrt(exact_sum(problem)));
      auto state = apply_A(StateVector::zero(n), problem);
      for (std::uint64_t m = 0; m <= 12; ++m) {
        worst = std::max(worst, std::abs(state.ancilla_one_probability() - good_probability(theta, m)));
        state = apply_Q(std::move(state), problem, 1);
      }
    }
  }
  return make_result("state vector vs sin^2((2m+1) theta)", worst, 1e-10);
}

/// -A S_0 A^-1 S_chi applied column by column through the gate routines.
CheckResult check_operator() {
  double worst = 0.0;
  for (unsigned n = 1; n <= 3; ++n) {
    const IntegralProblem problem{n, std::numbers::pi / 4};
    const auto q = amplification_matrix(problem);
    const std::size_t dim = std::size_t{2} << n;
    for (std::size_t j = 0; j < dim; ++j) {
      auto v = StateVector::basis(n, j);
      v.flip_sign_ancilla(1);
      v = apply_A_inverse(std::move(v), problem);
      v.flip_sign_basis(0);
      v = apply_A(std::move(v), problem);
      for (std::size_t i = 0; i < dim; ++i) worst = std::max(worst, std::abs(q[i * dim + j] + v[i]));
    }
  }
  return make_result("amplification operator vs -A S0 A^-1 S_chi", worst, 1e-12);
}

CheckResult check_search() {
  const auto s = make_schedule(ScheduleKind::kExponential, 4, 50);
  double worst = 0.0;
  double tolerance = 0.0;
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto data = sample_counts(s, Amplitude::from_probability(0.2), seed);
    constexpr std::uint64_t points = 400'001;
    const double spacing = kHalfPi / static_cast<double>(points - 1);
    double best_theta = 0.0;
    double best = -INFINITY;
    for (std::uint64_t i = 0; i < points; ++i) {
      const double theta = std::min(kHalfPi, spacing * static_cast<double>(i));
      const double v = log_likelihood(data, s, theta);
      if (v > best) {
        best = v;
        best_theta = theta;
      }
    }
    worst = std::max(worst, std::abs(ml_estimate(data, s).theta_hat - best_theta));
    tolerance = 2.0 * spacing;
  }
  return make_result("ML search vs exhaustive grid (angle)", worst, tolerance);
}

CheckResult check_riemann_sum() {
  double worst = 0.0;
  for (unsigned n = 1; n <= 10; ++n) {
    const IntegralProblem problem{n, 1.0};
    long double total = 0.0L;
    const long double count = std::ldexp(1.0L, static_cast<int>(n));
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      const long double s = std::sin((static_cast<long double>(x) + 0.5L) / count);
      total += s * s;
    }
    worst = std::max(worst, std::abs(exact_sum(problem) - static_cast<double>(total / count)));
  }
  return make_result("Riemann sum vs extended precision", worst, 1e-12);
}

}  // namespace

std::vector<CheckResult> run_selftest() {
  return {check_fisher(), check_amplitude_identity(), check_operator(), check_search(),
          check_riemann_sum()};
}

}  // namespace mlae
