#pragma once

#include <cstdint>

namespace parityproj {

inline constexpr const char* kGeneratorId = "splitmix64";

// splitmix64: the 64-bit counter-mix generator of Steele, Lea and Flood.
// Splittable by construction: independent substreams are derived by hashing
// (seed, index), so any partition of work across lanes reproduces the same
// draws for the same indices.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform01() { return (next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Substream seed for (master seed, index); order- and lane-independent.
inline std::uint64_t fold_in(std::uint64_t seed, std::uint64_t index) {
  return mix64(mix64(seed + 0x9e3779b97f4a7c15ull) ^
               mix64(index + 0xd1b54a32d192ed03ull));
}

inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(fold_in(seed, index));
}

// Number of Bernoulli(q) attempts up to and including the first success,
// drawn by inverse transform; q must be in (0, 1].
std::uint64_t draw_geometric(SplitMix64& rng, double q);

}  // namespace parityproj
