#pragma once

#include <cstdint>
#include <limits>

namespace dlpeval {

__extension__ using uint128_t = unsigned __int128;

/// SplitMix64. Small state, cheap to construct per event, and the output
/// sequence is fixed by the algorithm so streams are reproducible across
/// standard libraries.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound). bound must be > 0. Lemire's multiply-shift
  /// with rejection, so the result is unbiased.
  std::uint64_t below(std::uint64_t bound) {
    uint128_t m = static_cast<uint128_t>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<uint128_t>((*this)()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  std::uint64_t state_;
};

/// Mixes a base seed with stream coordinates into an independent seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  SplitMix64 mix(seed);
  std::uint64_t s = mix() ^ (a * 0xd1b54a32d192ed03ULL);
  SplitMix64 mix2(s);
  s = mix2() ^ (b * 0x8cb92ba72f3d8dd7ULL);
  return SplitMix64(s)();
}

}  // namespace dlpeval
