#include "mlae/rng.hpp"

#include <bit>
#include <cmath>

namespace mlae {

namespace {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t binomial_by_inversion(Rng& rng, std::uint64_t n, double p) {
  const double q = 1.0 - p;
  const double nd = static_cast<double>(n);
  const double ratio_up = p / q;
  const double ratio_down = q / p;

  std::uint64_t mode = static_cast<std::uint64_t>(std::floor((nd + 1.0) * p));
  if (mode > n) mode = n;
  const double md = static_cast<double>(mode);
  const double pmf_mode = std::exp(std::lgamma(nd + 1.0) - std::lgamma(md + 1.0) -
                                   std::lgamma(nd - md + 1.0) + md * std::log(p) +
                                   (nd - md) * std::log1p(-p));

  // P(X <= mode), summed from the mode downward until terms are negligible.
  double cdf_mode = pmf_mode;
  {
    double pk = pmf_mode;
    for (std::uint64_t k = mode; k > 0; --k) {
      pk *= static_cast<double>(k) / static_cast<double>(n - k + 1) * ratio_down;
      cdf_mode += pk;
      if (pk < 1e-20 * pmf_mode) break;
    }
  }

  const double u = rng.uniform();
  std::uint64_t k = mode;
  double pk = pmf_mode;
  double cdf = cdf_mode;
  if (u < cdf_mode) {
    // Smallest k with P(X <= k) > u.
    while (k > 0 && cdf - pk > u) {
      cdf -= pk;
      pk *= static_cast<double>(k) / static_cast<double>(n - k + 1) * ratio_down;
      --k;
    }
  } else {
    while (cdf <= u && k < n) {
      ++k;
      pk *= static_cast<double>(n - k + 1) / static_cast<double>(k) * ratio_up;
      if (pk == 0.0) break;
      cdf += pk;
    }
  }
  return k;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  return splitmix64(splitmix64(seed) ^ (stream * 0xd1342543de82ef95ULL + 0x632be59bd9b4e019ULL));
}

std::uint64_t mix_seed(std::uint64_t seed, double key) noexcept {
  return mix_seed(seed, std::bit_cast<std::uint64_t>(key));
}

std::uint64_t draw_binomial(Rng& rng, std::uint64_t n, double p) {
  if (!(p > 0.0)) return 0;
  if (p >= 1.0) return n;
  if (n < kBernoulliThreshold) {
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < n; ++i) hits += rng.uniform() < p ? 1 : 0;
    return hits;
  }
  return binomial_by_inversion(rng, n, p);
}

}  // namespace mlae
