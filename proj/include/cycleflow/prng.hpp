#pragma once

#include <cassert>
#include <cstdint>

namespace cycleflow {

// splitmix64. Chosen over <random> engines with std distributions because
// its output is fully specified, so sampled test campaigns reproduce
// bit-identically on any platform and standard library.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform draw from [0, bound) without modulo bias; bound >= 1.
  constexpr std::uint64_t below(std::uint64_t bound) {
    assert(bound >= 1);
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t v = next();
      if (v >= threshold) return v % bound;
    }
  }

 private:
  std::uint64_t state_;
};

// Seed of the index-th substream of a master seed. Depends only on
// (seed, index), so workers may consume substreams in any order while the
// overall sample stays the one sequential replay produces.
constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mix(seed ^ 0x6a09e667f3bcc909ULL);
  const std::uint64_t base = mix.next();
  SplitMix64 stream(base + (index + 1) * 0x9e3779b97f4a7c15ULL);
  return stream.next();
}

}  // namespace cycleflow
