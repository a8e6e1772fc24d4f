#pragma once

#include <cstdint>
#include <string_view>

namespace hessec {

// Deterministic splitmix64 stream.  All randomness in the library flows
// through explicit Rng handles so that identical (seed, label) paths replay
// identically on every platform; std::random distributions are avoided on
// purpose (their output is implementation-defined).
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) by rejection; n >= 1.
  uint64_t below(uint64_t n) {
    if (n <= 1) return 0;
    uint64_t mask = ~uint64_t(0) >> __builtin_clzll(n | 1);
    for (;;) {
      uint64_t v = next() & mask;
      if (v < n) return v;
    }
  }

  // Child streams are derived from the original seed and a label, never from
  // the parent's consumption position, so reordering unrelated draws cannot
  // shift downstream streams.
  Rng child(std::string_view label, uint64_t index = 0) const {
    uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a over the label
    for (char ch : label) {
      h ^= static_cast<unsigned char>(ch);
      h *= 0x100000001b3ull;
    }
    Rng r(mix(mix(seed_ ^ h) ^ index));
    return r;
  }

  uint64_t seed() const { return seed_; }

 private:
  static uint64_t mix(uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  uint64_t seed_;
  uint64_t state_;
};

}  // namespace hessec
