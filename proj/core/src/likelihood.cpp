#include "mlae/likelihood.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "mlae/amplitude.hpp"

namespace mlae {

namespace {

struct Term {
  double odd;  // 2m + 1
  double hits;
  double misses;
  // (odd - previous odd) / 2 when positive: the term's phase is reached from
  // the previous one by that power of e^{2i theta}. Zero means evaluate directly.
  std::uint64_t step = 0;
};

/// Plain complex product; std::complex operator* adds NaN/inf recovery we do not need.
inline std::complex<double> mul(std::complex<double> a, std::complex<double> b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

/// ln(x) for x = sin^2 or cos^2 of one angle, given its complement. Values
/// near 1 go through log1p of the complement so the slope survives right up
/// to the boundary; only the lower end needs the clamp.
inline double log_probability(double x, double complement, double eps) {
  return x > 0.5 ? std::log1p(-complement) : std::log(std::max(x, eps));
}

void check_alignment(const MeasurementData& data, const Schedule& schedule) {
  if (data.hits.size() != schedule.size()) {
    throw std::invalid_argument("measurement data length does not match schedule");
  }
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    if (data.hits[k] > schedule[k].shots) {
      throw std::invalid_argument("hit count exceeds shot count");
    }
  }
}

/// Consecutive entries sharing a depth collapse into one term with summed counts.
std::vector<Term> collect_terms(const MeasurementData& data, const Schedule& schedule) {
  std::vector<Term> terms;
  std::uint64_t last_m = 0;
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    const auto& e = schedule[k];
    const double h = static_cast<double>(data.hits[k]);
    const double miss = static_cast<double>(e.shots - data.hits[k]);
    if (!terms.empty() && e.amplifications == last_m) {
      terms.back().hits += h;
      terms.back().misses += miss;
    } else {
      const std::uint64_t step =
          terms.empty() || e.amplifications < last_m ? 0 : e.amplifications - last_m;
      terms.push_back({static_cast<double>(2 * e.amplifications + 1), h, miss, step});
    }
    last_m = e.amplifications;
  }
  return terms;
}

double evaluate(std::span<const Term> terms, double theta, double eps) {
  const std::complex<double> rotation = std::polar(1.0, 2.0 * theta);
  std::complex<double> phase;
  double sum = 0.0;
  for (const auto& t : terms) {
    if (t.step == 0) {
      phase = std::polar(1.0, t.odd * theta);
    } else {
      // Binary powering of e^{2i theta}; steps are 1 for LIS and powers of two for EIS.
      std::complex<double> factor = rotation;
      std::complex<double> power(1.0, 0.0);
      for (std::uint64_t n = t.step;; n >>= 1) {
        if (n & 1) power = mul(power, factor);
        if (n <= 1) break;
        factor = mul(factor, factor);
      }
      phase = mul(phase, power);
    }
    const double p = phase.imag() * phase.imag();
    const double q = phase.real() * phase.real();
    if (t.hits > 0.0) sum += t.hits * log_probability(p, q, eps);
    if (t.misses > 0.0) sum += t.misses * log_probability(q, p, eps);
  }
  return sum;
}

class GridSearch {
 public:
  GridSearch(std::span<const Term> terms, double eps) : terms_(terms), eps_(eps) {}

  /// Scans `count` evenly spaced angles over [lo, hi] against the first
  /// `active` terms and keeps the best one (first wins ties).
  void scan(double lo, double hi, std::uint64_t count, std::size_t active) {
    best_value_ = -std::numeric_limits<double>::infinity();
    const double step = count > 1 ? (hi - lo) / static_cast<double>(count - 1) : 0.0;
    for (std::uint64_t i = 0; i < count; ++i) {
      const double theta = i + 1 == count ? hi : lo + step * static_cast<double>(i);
      consider(theta, active);
    }
  }

  void consider(double theta, std::size_t active) {
    const double v = evaluate(terms_.first(active), theta, eps_);
    ++evaluations_;
    if (v > best_value_) {
      best_value_ = v;
      best_theta_ = theta;
    }
  }

  void reset_best() { best_value_ = -std::numeric_limits<double>::infinity(); }

  double best_theta() const { return best_theta_; }
  double best_value() const { return best_value_; }
  std::uint64_t evaluations() const { return evaluations_; }

 private:
  std::span<const Term> terms_;
  double eps_;
  double best_theta_ = 0.0;
  double best_value_ = -std::numeric_limits<double>::infinity();
  std::uint64_t evaluations_ = 0;
};

}  // namespace

void MLConfig::validate() const {
  if (grid_points < 2) throw std::invalid_argument("grid_points must be at least 2");
  if (!(refine_factor > 1.0)) throw std::invalid_argument("refine_factor must exceed 1");
  if (!(prob_clamp > 0.0 && prob_clamp <= 1e-6)) {
    throw std::invalid_argument("prob_clamp must lie in (0, 1e-6]");
  }
}

double log_likelihood(const MeasurementData& data, const Schedule& schedule, double theta,
                      double prob_clamp) {
  check_alignment(data, schedule);
  if (!(theta >= 0.0 && theta <= kHalfPi)) throw std::domain_error("angle outside [0, pi/2]");
  if (!(prob_clamp > 0.0 && prob_clamp < 0.5)) throw std::invalid_argument("bad prob_clamp");
  double sum = 0.0;
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    const double angle = static_cast<double>(2 * schedule[k].amplifications + 1) * theta;
    const double p = std::sin(angle) * std::sin(angle);
    const double q = std::cos(angle) * std::cos(angle);
    const double h = static_cast<double>(data.hits[k]);
    const double miss = static_cast<double>(schedule[k].shots - data.hits[k]);
    if (h > 0.0) sum += h * log_probability(p, q, prob_clamp);
    if (miss > 0.0) sum += miss * log_probability(q, p, prob_clamp);
  }
  return sum;
}

MLResult ml_estimate(const MeasurementData& data, const Schedule& schedule,
                     const MLConfig& config) {
  config.validate();
  check_alignment(data, schedule);
  const auto terms = collect_terms(data, schedule);
  GridSearch search(terms, config.prob_clamp);

  const double points = static_cast<double>(config.grid_points - 1);
  double spacing = kHalfPi / points;
  search.scan(0.0, kHalfPi, config.grid_points, 1);

  for (std::size_t stage = 1; stage < terms.size(); ++stage) {
    const double half_width = std::numbers::pi / (2.0 * terms[stage].odd);
    const double center = search.best_theta();
    const double lo = std::max(0.0, center - half_width);
    const double hi = std::min(kHalfPi, center + half_width);
    spacing = std::max(spacing / config.refine_factor, (hi - lo) / points);
    const auto count = static_cast<std::uint64_t>(std::ceil((hi - lo) / spacing)) + 1;
    spacing = (hi - lo) / static_cast<double>(count - 1);
    search.scan(lo, hi, count, stage + 1);
  }

  // Each round re-grids +-spacing around the incumbent with a finer step.
  const auto reach = static_cast<int>(std::ceil(config.refine_factor));
  for (std::uint32_t round = 0; round < config.refine_rounds; ++round) {
    const double center = search.best_theta();
    spacing /= config.refine_factor;
    search.reset_best();
    double previous = -1.0;
    for (int j = -reach; j <= reach; ++j) {
      const double theta = std::clamp(center + j * spacing, 0.0, kHalfPi);
      if (theta == previous) continue;
      previous = theta;
      search.consider(theta, terms.size());
    }
  }

  MLResult result;
  result.theta_hat = search.best_theta();
  const double s = std::sin(result.theta_hat);
  result.a_hat = s * s;
  result.log_likelihood_at_max = search.best_value();
  result.evaluations = search.evaluations();
  result.resolution = spacing;
  return result;
}

}  // namespace mlae
