/*
 * SplitMix64 pseudo-random generator.
 *
 * Copyright 2026 Playpack Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#pragma once

#include <cstdint>

namespace playpack {

// Deterministic integer-state generator (Steele et al., "Fast splittable
// pseudorandom number generators"). Used everywhere randomness is needed so
// that outputs are bit-identical across runs and platforms; the standard
// library distributions are implementation-defined and deliberately avoided.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1), 53 bits of mantissa.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n) via Lemire's multiply-shift reduction.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  // Uniform integer in [lo, hi] inclusive.
  int range_int(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Stable derivation of an independent stream from a seed and a stream id.
  static constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 mixer(seed ^ (0x6A09E667F3BCC909ull + stream * 0xD1B54A32D192ED03ull));
    return mixer.next();
  }

 private:
  std::uint64_t state_;
};

}  // namespace playpack
