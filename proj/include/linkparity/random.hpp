#ifndef LINKPARITY_RANDOM_HPP
#define LINKPARITY_RANDOM_HPP

#include <cstdint>

namespace linkparity {

/// SplitMix64 (Steele, Lea, Flood 2014), with keyed substreams.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit constexpr SplitMix64(std::uint64_t state) : state_(state) {}

  /// Independent stream for `key`, derived from a base seed.
  static constexpr SplitMix64 stream(std::uint64_t seed, std::uint64_t key) {
    return SplitMix64(mix(seed ^ mix(key + kGamma)));
  }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  constexpr std::uint64_t next() {
    state_ += kGamma;
    return mix(state_);
  }

  /// Uniform integer in [lo, hi] by rejection of the biased tail.
  constexpr std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % range + 1) % range;
    std::uint64_t x = next();
    while (x > limit) x = next();
    return lo + static_cast<std::int64_t>(x % range);
  }

 private:
  std::uint64_t state_;
};

}  // namespace linkparity

#endif  // LINKPARITY_RANDOM_HPP
