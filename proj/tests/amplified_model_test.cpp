#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "mlae/amplitude.hpp"
#include "mlae/rng.hpp"
#include "mlae/sampling.hpp"
#include "mlae/schedule.hpp"

using namespace mlae;

namespace {

std::vector<std::uint64_t> depths(const Schedule& s) {
  std::vector<std::uint64_t> m;
  for (const auto& e : s.entries()) m.push_back(e.amplifications);
  return m;
}

}  // namespace

TEST(Amplitude, CanonicalPairFromEitherField) {
  for (double a : {0.0, 1e-14, 1.0 / 48, 0.25, 0.5, 2.0 / 3, 1.0 - 1e-14, 1.0}) {
    const auto amp = Amplitude::from_probability(a);
    EXPECT_GE(amp.theta(), 0.0);
    EXPECT_LE(amp.theta(), kHalfPi);
    EXPECT_NEAR(amp.probability(), a, 1e-12);
    const auto back = Amplitude::from_angle(amp.theta());
    EXPECT_EQ(back, amp);
  }
  EXPECT_DOUBLE_EQ(Amplitude::from_probability(1.0).theta(), kHalfPi);
  EXPECT_EQ(Amplitude::from_probability(0.0).theta(), 0.0);
}

TEST(Amplitude, RejectsOutOfRange) {
  EXPECT_THROW(Amplitude::from_probability(-0.1), std::domain_error);
  EXPECT_THROW(Amplitude::from_probability(1.5), std::domain_error);
  EXPECT_THROW(Amplitude::from_probability(NAN), std::domain_error);
  EXPECT_THROW(Amplitude::from_angle(-1e-9), std::domain_error);
  EXPECT_THROW(Amplitude::from_angle(2.0), std::domain_error);
}

TEST(GoodProbability, UnamplifiedIsTheAmplitude) {
  for (double a : {0.0, 1.0 / 48, 1.0 / 6, 0.5, 0.9, 1.0}) {
    EXPECT_NEAR(good_probability(Amplitude::from_probability(a).theta(), 0), a, 1e-15);
  }
}

TEST(GoodProbability, Examples) {
  EXPECT_NEAR(good_probability(std::numbers::pi / 6, 1), 1.0, 1e-15);
  // sin^2(5 asin(sqrt(1/48))), 40-digit evaluation.
  EXPECT_NEAR(good_probability(std::asin(std::sqrt(1.0 / 48)), 2), 0.43897187660751028807, 1e-14);
  EXPECT_THROW(good_probability(-0.1, 0), std::domain_error);
  EXPECT_THROW(good_probability(1.6, 3), std::domain_error);
}

TEST(GoodProbability, StaysInUnitInterval) {
  for (int i = 0; i <= 1000; ++i) {
    const double theta = kHalfPi * i / 1000.0;
    for (std::uint64_t m : {0, 1, 2, 7, 64, 1000}) {
      const double p = good_probability(theta, m);
      ASSERT_GE(p, 0.0);
      ASSERT_LE(p, 1.0);
    }
  }
}

TEST(GoodProbability, SingleDepthIsNotIdentifiable) {
  // sin^2(3 theta) = sin^2(3 (pi/3 - theta)): two angles, one probability.
  for (double theta : {0.05, 0.2, 0.4}) {
    const double mirror = std::numbers::pi / 3 - theta;
    ASSERT_NE(theta, mirror);
    EXPECT_NEAR(good_probability(theta, 1), good_probability(mirror, 1), 1e-14);
  }
}

TEST(Schedule, GeneratedKinds) {
  const auto eis = make_schedule(ScheduleKind::kExponential, 3, 100);
  EXPECT_EQ(depths(eis), (std::vector<std::uint64_t>{0, 1, 2, 4}));
  for (const auto& e : eis.entries()) EXPECT_EQ(e.shots, 100u);
  EXPECT_EQ(depths(make_schedule(ScheduleKind::kLinear, 2, 50)), (std::vector<std::uint64_t>{0, 1, 2}));
  EXPECT_EQ(depths(make_schedule(ScheduleKind::kClassical, 4, 10)),
            (std::vector<std::uint64_t>(5, 0)));
  EXPECT_EQ(make_schedule(ScheduleKind::kLinear, 2, 50).kind(), ScheduleKind::kLinear);
}

TEST(Schedule, GeneratedDepthsAreNonDecreasing) {
  for (auto kind : {ScheduleKind::kClassical, ScheduleKind::kLinear, ScheduleKind::kExponential}) {
    const auto s = make_schedule(kind, 20, 3);
    ASSERT_EQ(s.size(), 21u);
    for (std::size_t k = 1; k < s.size(); ++k) EXPECT_LE(s[k - 1].amplifications, s[k].amplifications);
  }
}

TEST(Schedule, QueryCountClosedForms) {
  for (std::uint32_t M = 0; M <= 30; ++M) {
    for (std::uint64_t shots : {1, 7, 100}) {
      EXPECT_EQ(make_schedule(ScheduleKind::kLinear, M, shots).query_count(), shots * (M + 1) * (M + 1));
      EXPECT_EQ(make_schedule(ScheduleKind::kExponential, M, shots).query_count(),
                shots * ((std::uint64_t{1} << (M + 1)) + M - 1));
      EXPECT_EQ(make_schedule(ScheduleKind::kClassical, M, shots).query_count(), shots * (M + 1));
    }
  }
}

TEST(Schedule, UsageErrors) {
  EXPECT_THROW(Schedule(std::vector<ScheduleEntry>{}), std::invalid_argument);
  EXPECT_THROW(Schedule({{0, 0}}), std::invalid_argument);
  EXPECT_THROW(make_schedule(ScheduleKind::kLinear, 3, 0), std::invalid_argument);
  EXPECT_THROW(make_schedule(ScheduleKind::kCustom, 3, 10), std::invalid_argument);
  EXPECT_THROW(parse_schedule_kind("qft"), std::invalid_argument);
  EXPECT_EQ(parse_schedule_kind("eis"), ScheduleKind::kExponential);
  EXPECT_EQ(to_string(parse_schedule_kind("lis")), "lis");
}

TEST(SampleCounts, CertainOutcomes) {
  const auto eis = make_schedule(ScheduleKind::kExponential, 6, 37);
  const auto lis = make_schedule(ScheduleKind::kLinear, 6, 2000);
  for (const auto& s : {eis, lis}) {
    const auto ones = sample_counts(s, Amplitude::from_probability(1.0), 3);
    const auto zeros = sample_counts(s, Amplitude::from_probability(0.0), 3);
    for (std::size_t k = 0; k < s.size(); ++k) {
      EXPECT_EQ(ones.hits[k], s[k].shots);
      EXPECT_EQ(zeros.hits[k], 0u);
    }
  }
}

TEST(SampleCounts, HitsNeverExceedShots) {
  const Schedule s({{0, 1}, {1, 5}, {3, 1023}, {5, 1024}, {9, 4096}});
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto data = sample_counts(s, Amplitude::from_probability(0.37), seed);
    ASSERT_EQ(data.hits.size(), s.size());
    EXPECT_EQ(data.seed, seed);
    for (std::size_t k = 0; k < s.size(); ++k) ASSERT_LE(data.hits[k], s[k].shots);
  }
}

TEST(SampleCounts, PinnedPerSeed) {
  const auto s = make_schedule(ScheduleKind::kExponential, 5, 100);
  const auto amp = Amplitude::from_probability(1.0 / 6);
  EXPECT_EQ(sample_counts(s, amp, 7).hits, (std::vector<std::uint64_t>{10, 89, 75, 34, 56, 93}));
  EXPECT_EQ(sample_counts(s, amp, 42).hits, (std::vector<std::uint64_t>{20, 89, 77, 47, 58, 91}));
  // Above the Bernoulli threshold the inversion sampler is used.
  const Schedule big({{0, 5000}, {3, 20000}});
  EXPECT_EQ(sample_counts(big, Amplitude::from_probability(0.3), 9).hits,
            (std::vector<std::uint64_t>{1507, 12453}));
}

TEST(SampleCounts, DeterministicAndPrefixStable) {
  const auto amp = Amplitude::from_probability(0.2);
  const auto s5 = make_schedule(ScheduleKind::kExponential, 5, 100);
  const auto s8 = make_schedule(ScheduleKind::kExponential, 8, 100);
  EXPECT_EQ(sample_counts(s5, amp, 11), sample_counts(s5, amp, 11));
  EXPECT_NE(sample_counts(s5, amp, 11).hits, sample_counts(s5, amp, 12).hits);
  // Entry k draws from its own substream, so a longer schedule extends a shorter one.
  const auto short_run = sample_counts(s5, amp, 11).hits;
  const auto long_run = sample_counts(s8, amp, 11).hits;
  EXPECT_TRUE(std::equal(short_run.begin(), short_run.end(), long_run.begin()));
}

TEST(SampleCounts, BinomialMomentsBernoulliPath) {
  // EIS M=5, N_shot=100, a=1/6: every entry against Binomial(N, sin^2((2m+1) theta)).
  const auto s = make_schedule(ScheduleKind::kExponential, 5, 100);
  const auto amp = Amplitude::from_probability(1.0 / 6);
  constexpr int runs = 10000;
  std::vector<double> sum(s.size()), sum_sq(s.size());
  for (int r = 0; r < runs; ++r) {
    const auto data = sample_counts(s, amp, mix_seed(std::uint64_t{7}, static_cast<std::uint64_t>(r)));
    for (std::size_t k = 0; k < s.size(); ++k) {
      const double f = static_cast<double>(data.hits[k]) / 100.0;
      sum[k] += f;
      sum_sq[k] += f * f;
    }
  }
  for (std::size_t k = 0; k < s.size(); ++k) {
    const double p = good_probability(amp.theta(), s[k].amplifications);
    const double var = p * (1 - p) / 100.0;
    const double mean = sum[k] / runs;
    EXPECT_NEAR(mean, p, 3.0 * std::sqrt(var / runs)) << "entry " << k;
    const double sample_var = sum_sq[k] / runs - mean * mean;
    // Variance of the sample variance ~ 2 var^2 / runs for near-normal counts.
    EXPECT_NEAR(sample_var, var, 4.0 * var * std::sqrt(2.0 / runs) + 1e-12) << "entry " << k;
  }
  EXPECT_NEAR(good_probability(amp.theta(), 0), 1.0 / 6, 1e-15);
}

TEST(SampleCounts, BinomialMomentsInversionPath) {
  for (double p : {0.003, 0.3, 0.5, 0.97}) {
    constexpr std::uint64_t n = 5000;
    constexpr int runs = 10000;
    double sum = 0, sum_sq = 0;
    for (int r = 0; r < runs; ++r) {
      Rng rng(mix_seed(std::uint64_t{99}, static_cast<std::uint64_t>(r)));
      const double h = static_cast<double>(draw_binomial(rng, n, p));
      sum += h;
      sum_sq += h * h;
    }
    const double var = n * p * (1 - p);
    const double mean = sum / runs;
    EXPECT_NEAR(mean, n * p, 3.0 * std::sqrt(var / runs)) << "p=" << p;
    EXPECT_NEAR(sum_sq / runs - mean * mean, var, 5.0 * var * std::sqrt(2.0 / runs)) << "p=" << p;
  }
}

TEST(SampleCounts, RejectsMisalignedProbabilities) {
  const auto s = make_schedule(ScheduleKind::kLinear, 2, 10);
  const std::vector<double> two{0.1, 0.2};
  EXPECT_THROW(sample_counts_from_probabilities(s, two, 1), std::invalid_argument);
}

TEST(Rng, UniformIsPinnedAndInRange) {
  Rng rng(mix_seed(std::uint64_t{123}, std::uint64_t{0}));
  EXPECT_DOUBLE_EQ(rng.uniform(), 0.63274387622948558);
  EXPECT_DOUBLE_EQ(rng.uniform(), 0.15080269018034587);
  EXPECT_DOUBLE_EQ(rng.uniform(), 0.28519679549072885);
  EXPECT_EQ(mix_seed(std::uint64_t{1}, std::uint64_t{2}), 9745567873123811647ULL);
  Rng other(5);
  for (int i = 0; i < 100000; ++i) {
    const double u = other.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}
