#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "mlae/montecarlo.hpp"
#include "mlae/rng.hpp"
#include "oracles.hpp"

using namespace mlae;

namespace {

constexpr double kPi = std::numbers::pi;

double theta_of(const IntegralProblem& problem) { return std::asin(std::sqrt(exact_sum(problem))); }

}  // namespace

TEST(IntegralProblem, Validation) {
  EXPECT_NO_THROW((IntegralProblem{1, kPi}.validate()));
  EXPECT_THROW((IntegralProblem{0, 0.5}.validate()), std::invalid_argument);
  EXPECT_THROW((IntegralProblem{21, 0.5}.validate()), std::invalid_argument);
  EXPECT_THROW((IntegralProblem{2, 0.0}.validate()), std::invalid_argument);
  EXPECT_THROW((IntegralProblem{2, 3.5}.validate()), std::invalid_argument);
  EXPECT_DOUBLE_EQ((IntegralProblem{2, kPi / 4}.angle(3)), 3.5 * kPi / 16);
}

TEST(ApplyP, SingleQubitUniform) {
  const auto s = apply_P(StateVector::zero(1));
  const double h = 1.0 / std::sqrt(2.0);
  ASSERT_EQ(s.size(), 4u);
  EXPECT_NEAR(s[0].real(), h, 1e-15);
  EXPECT_NEAR(std::abs(s[1]), 0.0, 1e-15);
  EXPECT_NEAR(s[2].real(), h, 1e-15);
  EXPECT_NEAR(std::abs(s[3]), 0.0, 1e-15);
  const auto back = apply_P(s);
  EXPECT_NEAR(back[0].real(), 1.0, 1e-15);
}

TEST(ApplyR, HalfTurnOnSingleQubit) {
  const IntegralProblem problem{1, kPi};
  const auto s = apply_R(StateVector::basis(1, 0), problem);
  EXPECT_NEAR(s[1].real(), std::sin(kPi / 4), 1e-15);
  EXPECT_NEAR(s[0].real(), std::cos(kPi / 4), 1e-15);
  const auto t = apply_R(StateVector::basis(1, 2), problem);
  EXPECT_NEAR(t[3].real(), std::sin(3 * kPi / 4), 1e-15);
  EXPECT_NEAR(t[2].real(), std::cos(3 * kPi / 4), 1e-15);
}

TEST(ApplyR, PerValueAnglesOnTwoQubits) {
  const IntegralProblem problem{2, kPi / 4};
  for (std::uint64_t x = 0; x < 4; ++x) {
    const auto s = apply_R(StateVector::basis(2, 2 * x), problem);
    const double phi = (static_cast<double>(x) + 0.5) * kPi / 16;
    EXPECT_NEAR(s[2 * x + 1].real(), std::sin(phi), 1e-15) << x;
    EXPECT_NEAR(s[2 * x].real(), std::cos(phi), 1e-15) << x;
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-14);
  }
}

TEST(ApplyR, RequiresAncillaZero) {
  const IntegralProblem problem{2, kPi / 4};
  EXPECT_THROW(apply_R(StateVector::basis(2, 3), problem), std::invalid_argument);
  EXPECT_THROW(apply_R(StateVector::zero(3), problem), std::invalid_argument);
}

TEST(ApplyR, PreparedProbabilityIsTheSum) {
  for (unsigned n = 1; n <= 6; ++n) {
    for (double b : {kPi / 8, kPi / 4, kPi / 2, kPi}) {
      const IntegralProblem problem{n, b};
      const auto s = apply_R(apply_P(StateVector::zero(n)), problem);
      EXPECT_NEAR(s.ancilla_one_probability(), exact_sum(problem), 1e-12) << n << " " << b;
    }
  }
}

TEST(ExactSum, PinnedAndOracle) {
  EXPECT_NEAR(exact_sum({2, kPi / 4}), 0.17963556903231172765, 1e-15);
  EXPECT_NEAR(exact_sum({1, kPi}), 0.5, 1e-15);
  for (unsigned n = 1; n <= 12; ++n) {
    for (double b : {0.01, kPi / 8, kPi / 4, kPi / 2, 2.0, kPi}) {
      EXPECT_NEAR(exact_sum({n, b}), static_cast<double>(oracle::riemann_sum(n, b)), 1e-12);
    }
  }
}

TEST(ExactSum, ConvergesToIntegralMean) {
  // Midpoint rule: |S - mean| <= h^2 max|f''| / 24 with f'' = 2 cos 2x, h = b / 2^n.
  for (double b : {0.05, kPi / 4, kPi / 2, kPi}) {
    const double mean = 0.5 - std::sin(2 * b) / (4 * b);
    for (unsigned n = 1; n <= 14; ++n) {
      const double h = b / std::ldexp(1.0, static_cast<int>(n));
      EXPECT_LE(std::abs(exact_sum({n, b}) - mean), h * h / 12 + 1e-15) << b << " " << n;
    }
  }
}

TEST(ApplyQ, AmplitudeIdentity) {
  for (unsigned n = 1; n <= 4; ++n) {
    for (double b : {kPi / 8, kPi / 4, kPi / 2}) {
      const IntegralProblem problem{n, b};
      const double theta = theta_of(problem);
      auto state = apply_A(StateVector::zero(n), problem);
      for (std::uint64_t m = 0; m <= 16; ++m) {
        EXPECT_NEAR(state.ancilla_one_probability(), good_probability(theta, m), 1e-10)
            << "n=" << n << " b=" << b << " m=" << m;
        state = apply_Q(std::move(state), problem, 1);
      }
    }
  }
}

TEST(ApplyQ, RepeatedApplicationMatchesPower) {
  const IntegralProblem problem{3, kPi / 4};
  const auto direct = prepare_amplified(problem, 7);
  auto stepped = apply_A(StateVector::zero(3), problem);
  for (int i = 0; i < 7; ++i) stepped = apply_Q(std::move(stepped), problem, 1);
  for (std::size_t i = 0; i < direct.size(); ++i) EXPECT_NEAR(std::abs(direct[i] - stepped[i]), 0.0, 1e-12);
}

TEST(ApplyQ, PreservesNorm) {
  const IntegralProblem problem{4, kPi / 2};
  const auto s = apply_Q(apply_A(StateVector::zero(4), problem), problem, 100);
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-10);
}

TEST(ApplyQ, EqualsLiteralOperatorProduct) {
  for (unsigned n = 1; n <= 3; ++n) {
    for (double b : {kPi / 8, kPi / 4, kPi / 2, kPi}) {
      const IntegralProblem problem{n, b};
      const auto built = amplification_matrix(problem);
      const auto literal = oracle::literal_amplification_matrix(n, b);
      ASSERT_EQ(built.size(), literal.size());
      double worst = 0;
      for (std::size_t i = 0; i < built.size(); ++i) worst = std::max(worst, std::abs(built[i] - literal[i]));
      EXPECT_LE(worst, 1e-12) << "n=" << n << " b=" << b;
    }
  }
}

TEST(Rotation, InverseUndoes) {
  const IntegralProblem problem{3, 1.1};
  auto s = apply_P(StateVector::zero(3));
  s.apply(0, hadamard_gate());
  const auto original = s;
  const auto round = rotate_ancilla(rotate_ancilla(s, problem), problem, true);
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_NEAR(std::abs(round[i] - original[i]), 0.0, 1e-14);
  const auto back = apply_A_inverse(apply_A(StateVector::zero(3), problem), problem);
  EXPECT_NEAR(back[0].real(), 1.0, 1e-14);
}

TEST(Rotation, TableMatchesControlledComposite) {
  const IntegralProblem problem{3, kPi / 4};
  std::vector<double> angles;
  for (std::uint64_t x = 0; x < 8; ++x) angles.push_back(problem.angle(x));
  auto s = apply_P(StateVector::zero(3));
  s.apply(0, ry_gate(0.4));
  const auto a = rotate_ancilla(s, problem);
  const auto b = rotate_ancilla_table(s, angles);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(std::abs(a[i] - b[i]), 0.0, 1e-14);
  EXPECT_THROW(rotate_ancilla_table(s, std::span<const double>(angles).first(4)), std::invalid_argument);
}

TEST(AmplifiedProbabilities, MatchIdentityForAnySchedule) {
  const IntegralProblem problem{2, kPi / 4};
  const Schedule s({{4, 10}, {0, 10}, {9, 10}, {9, 10}, {2, 10}});
  const auto probs = amplified_probabilities(problem, s);
  const double theta = theta_of(problem);
  ASSERT_EQ(probs.size(), s.size());
  for (std::size_t k = 0; k < s.size(); ++k)
    EXPECT_NEAR(probs[k], good_probability(theta, s[k].amplifications), 1e-10);
}

TEST(EstimateIntegral, ClassicalConverges) {
  const IntegralProblem problem{2, kPi / 4};
  const Schedule s({{0, 100'000'000}});
  const auto est = estimate_integral(problem, s, MLConfig{}, 3);
  EXPECT_DOUBLE_EQ(est.exact, exact_sum(problem));
  EXPECT_LE(std::abs(est.s_hat - est.exact), 3 * est.bounds.crb_error);
}

TEST(EstimateIntegral, ExponentialScheduleWithinBound) {
  const IntegralProblem problem{2, kPi / 4};
  const auto s = make_schedule(ScheduleKind::kExponential, 8, 100);
  const auto probs = amplified_probabilities(problem, s);
  int inside = 0;
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    const auto est = estimate_integral(problem, s, probs, MLConfig{}, mix_seed(77, trial));
    if (std::abs(est.s_hat - est.exact) <= 3 * est.bounds.crb_error) ++inside;
  }
  EXPECT_GE(inside, 95);
}

TEST(EstimateIntegral, Deterministic) {
  const IntegralProblem problem{3, kPi / 2};
  const auto s = make_schedule(ScheduleKind::kLinear, 5, 50);
  const auto a = estimate_integral(problem, s, MLConfig{}, 12);
  const auto b = estimate_integral(problem, s, MLConfig{}, 12);
  EXPECT_EQ(a.s_hat, b.s_hat);
  EXPECT_NE(a.s_hat, estimate_integral(problem, s, MLConfig{}, 13).s_hat);
}
