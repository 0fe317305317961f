#pragma once

#include <cstdint>
#include <string_view>

namespace ccent {

// All randomness in the library flows from one user-visible 64-bit seed.
// Every consumer derives its own named stream so that adding a new draw in
// one place never shifts the draws seen by another ("ccent-rng-v1").
//
// The generator is a splitmix64 chain: portable, state is a single word,
// and the stream derivation is a hash of (seed, name). We deliberately do
// not use std::uniform_*_distribution, whose output is implementation
// defined; draws below are bit-reproducible on any platform.

class Rng {
 public:
  explicit Rng(std::uint64_t state) : state_(state) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [0, bound), bound > 0. Rejection sampling keeps the
  // draw exactly uniform.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = -bound % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Named stream: deterministic function of (seed, name) only.
inline Rng make_stream(std::uint64_t seed, std::string_view name) {
  Rng mix(seed ^ fnv1a64(name));
  // Burn-in decorrelates nearby seeds sharing a stream name.
  std::uint64_t s = mix.next_u64();
  for (int i = 0; i < 3; ++i) s ^= mix.next_u64();
  return Rng(s);
}

}  // namespace ccent
