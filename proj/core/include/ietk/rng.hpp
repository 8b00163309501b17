#ifndef IETK_RNG_HPP
#define IETK_RNG_HPP

#include <cstdint>

namespace ietk {

/// splitmix64 (Steele/Lea/Flood/Vigna): tiny, well-specified 64-bit PRNG
/// with published test vectors (seed 0 -> 0xE220A8397B1DCDAF, ...), used so
/// that sampled experiments reproduce bit-for-bit across languages.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n), unbiased by rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

 private:
  std::uint64_t state_;
};

}  // namespace ietk

#endif
