// SPDX-License-Identifier: Apache-2.0

#ifndef GENTLECERT_RNG_HPP
#define GENTLECERT_RNG_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gentlecert {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl64(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace detail

/// Combines seed material into a single 64-bit stream id. Used to derive
/// independent per-task streams from (base seed, coordinates...).
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a ^ (0xD1B54A32D192ED03ULL + detail::rotl64(b, 17));
  detail::splitmix64(s);
  return detail::splitmix64(s);
}

template <typename... Rest>
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, Rest... rest) {
  return mix_seed(mix_seed(a, b), static_cast<std::uint64_t>(rest)...);
}

/// Seedable xoshiro256++ generator. A fixed (seed, stream) pair always
/// reproduces the same sequence, independent of platform and standard
/// library (std distributions are deliberately not used).
///
/// Instances are not shareable across concurrent tasks; give each task
/// its own stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {
    std::uint64_t s = mix_seed(seed, stream);
    for (auto& word : state_) word = detail::splitmix64(s);
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  std::uint64_t next_u64() {
    const std::uint64_t result = detail::rotl64(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = detail::rotl64(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in (0, 1], safe as a log() argument.
  double uniform_pos() { return 1.0 - uniform(); }

  bool bernoulli(double p) { return uniform() < p; }

  /// Standard normal via Box-Muller; second deviate of each pair is cached.
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
    const double theta = 6.283185307179586476925286766559 * uniform();
    cached_ = r * std::sin(theta);
    have_cached_ = true;
    return r * std::cos(theta);
  }

  /// Index sample from an (unnormalized is allowed) cumulative weight array.
  /// `cdf` must be nondecreasing with positive final entry.
  int sample_cdf(const std::vector<double>& cdf) {
    if (cdf.empty()) throw std::invalid_argument("sample_cdf: empty cdf");
    const double u = uniform() * cdf.back();
    int lo = 0;
    int hi = static_cast<int>(cdf.size()) - 1;
    while (lo < hi) {
      const int mid = (lo + hi) / 2;
      if (cdf[static_cast<std::size_t>(mid)] <= u)
        lo = mid + 1;
      else
        hi = mid;
    }
    return lo;
  }

  /// Symmetric Dirichlet(1,...,1) weights of length k.
  std::vector<double> dirichlet_uniform(int k) {
    if (k < 1) throw std::invalid_argument("dirichlet_uniform: k < 1");
    std::vector<double> w(static_cast<std::size_t>(k));
    double sum = 0.0;
    for (auto& wi : w) {
      wi = -std::log(uniform_pos());
      sum += wi;
    }
    for (auto& wi : w) wi /= sum;
    return w;
  }

 private:
  std::uint64_t state_[4];
  std::uint64_t seed_;
  std::uint64_t stream_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace gentlecert

#endif  // GENTLECERT_RNG_HPP
