#include "mlae/statistics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace mlae {

namespace {

void check_open_probability(double a) {
  if (!(a > 0.0 && a < 1.0)) {
    throw std::domain_error("Fisher information diverges outside 0 < a < 1");
  }
}

/// Neumaier compensated sum; enumeration order is fixed so the result is reproducible.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace

double fisher_information(const Schedule& schedule, double a) {
  check_open_probability(a);
  double weight = 0.0;
  for (const auto& e : schedule.entries()) {
    const double odd = static_cast<double>(2 * e.amplifications + 1);
    weight += static_cast<double>(e.shots) * odd * odd;
  }
  return weight / (a * (1.0 - a));
}

std::uint64_t query_count(const Schedule& schedule) {
  std::uint64_t n = 0;
  for (const auto& e : schedule.entries()) n += e.shots * (2 * e.amplifications + 1);
  return n;
}

double cramer_rao_error(const Schedule& schedule, double a) {
  return 1.0 / std::sqrt(fisher_information(schedule, a));
}

BoundReport bound_report(const Schedule& schedule, double a) {
  BoundReport r;
  r.fisher = fisher_information(schedule, a);
  r.n_queries = query_count(schedule);
  r.crb_error = 1.0 / std::sqrt(r.fisher);
  r.classical_bound = std::sqrt(a * (1.0 - a) / static_cast<double>(r.n_queries));
  return r;
}

double fisher_oracle(const Schedule& schedule, double a) {
  check_open_probability(a);
  std::uint64_t outcomes = 1;
  for (const auto& e : schedule.entries()) {
    if (e.shots + 1 > kMaxOracleOutcomes || outcomes * (e.shots + 1) > kMaxOracleOutcomes) {
      throw std::invalid_argument("instance too large for exhaustive Fisher enumeration");
    }
    outcomes *= e.shots + 1;
  }

  const double theta = std::asin(std::sqrt(a));
  const double dtheta_da = 1.0 / (2.0 * std::sqrt(a * (1.0 - a)));

  // Per entry: success/failure probabilities, dp/da, and the binomial pmf table.
  struct EntryModel {
    double p, q, dp_da;
    std::vector<double> pmf;
  };
  std::vector<EntryModel> models;
  for (const auto& e : schedule.entries()) {
    const double odd = static_cast<double>(2 * e.amplifications + 1);
    const double s = std::sin(odd * theta);
    const double c = std::cos(odd * theta);
    EntryModel m{s * s, c * c, 2.0 * odd * s * c * dtheta_da, {}};
    const auto n = e.shots;
    m.pmf.resize(n + 1);
    for (std::uint64_t h = 0; h <= n; ++h) {
      const double log_choose = std::lgamma(static_cast<double>(n) + 1.0) -
                                std::lgamma(static_cast<double>(h) + 1.0) -
                                std::lgamma(static_cast<double>(n - h) + 1.0);
      // pow handles the 0^0 = 1 corner when p or q is exactly zero.
      m.pmf[h] = std::exp(log_choose) * std::pow(m.p, static_cast<double>(h)) *
                 std::pow(m.q, static_cast<double>(n - h));
    }
    models.push_back(std::move(m));
  }

  // Odometer over all joint outcomes h = (h_0, ..., h_M).
  const std::size_t size = schedule.size();
  std::vector<std::uint64_t> h(size, 0);
  CompensatedSum expectation;
  for (std::uint64_t visited = 0; visited < outcomes; ++visited) {
    double weight = 1.0;
    double score = 0.0;
    for (std::size_t k = 0; k < size; ++k) {
      const auto& m = models[k];
      weight *= m.pmf[h[k]];
      const double hk = static_cast<double>(h[k]);
      const double miss = static_cast<double>(schedule[k].shots - h[k]);
      double d = 0.0;
      if (hk > 0.0) d += hk / m.p;
      if (miss > 0.0) d -= miss / m.q;
      score += d * m.dp_da;
    }
    if (weight > 0.0) expectation.add(weight * score * score);
    for (std::size_t k = 0; k < size; ++k) {
      if (++h[k] <= schedule[k].shots) break;
      h[k] = 0;
    }
  }
  return expectation.value();
}

SlopeFit fit_error_exponent(std::span<const ErrorPoint> points, double nq_min, double nq_max) {
  std::vector<double> xs, ys;
  for (const auto& p : points) {
    if (p.n_queries < nq_min || p.n_queries > nq_max) continue;
    if (!(p.error > 0.0)) throw std::invalid_argument("errors must be positive for a log fit");
    xs.push_back(std::log10(p.n_queries));
    ys.push_back(std::log10(p.error));
  }
  if (xs.size() < 3) throw std::invalid_argument("slope fit needs at least 3 points in range");

  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("slope fit needs distinct query counts");

  SlopeFit fit;
  fit.gamma = sxy / sxx;
  fit.delta = my - fit.gamma * mx;
  fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  fit.range = {nq_min, nq_max};
  fit.points = xs.size();
  return fit;
}

}  // namespace mlae
