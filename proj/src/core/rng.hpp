#pragma once

#include <cstdint>

namespace exgl {

// SplitMix64: the fixed, portable generator used for every seeded sample in
// this project. Same seed => same stream on every platform, so reports are
// byte-identical across runs and machines.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-enough draw in [0, bound); bound is tiny here so the modulo bias
  // is irrelevant, and taking the remainder keeps the stream portable.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
  std::uint64_t state_;
};

}  // namespace exgl
