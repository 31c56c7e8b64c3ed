#pragma once

#include <cstdint>
#include <random>

namespace mlae {

/// Derives the seed of substream `stream` from a parent seed.
///
/// SplitMix64 finalizer applied to the parent and the stream index. Every
/// random draw in the library goes through a substream, so serial and
/// parallel runs produce bit-identical results.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// Seeds for keys that are doubles (e.g. a target probability) hash their bit pattern.
std::uint64_t mix_seed(std::uint64_t seed, double key) noexcept;

/// 64-bit Mersenne Twister with a platform-independent uniform conversion.
///
/// std::mt19937_64 output is fixed by the standard; the std:: distributions are
/// not, so uniform() builds doubles from the top 53 bits directly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1).
  double uniform() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::uint64_t next() noexcept { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Below this many trials a binomial draw is a sequence of Bernoulli trials.
inline constexpr std::uint64_t kBernoulliThreshold = 1024;

/// Binomial(n, p) variate. Small n counts Bernoulli trials u < p; large n
/// inverts the CDF with a search that starts at the mode.
std::uint64_t draw_binomial(Rng& rng, std::uint64_t n, double p);

}  // namespace mlae
