#pragma once

#include <cmath>
#include <cstdint>

// Counter-based random draws. Every draw is a pure function of
// (seed, tag, stream, counter), so simulations are reproducible for any
// worker count and any evaluation order. Streams are typically particle
// indices; tags separate independent uses of the same master seed.

namespace mvsde::rng {

// SplitMix64 avalanche step.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t hash4(std::uint64_t seed, std::uint64_t tag,
                              std::uint64_t stream, std::uint64_t counter) noexcept {
  std::uint64_t h = mix64(seed ^ 0x6a09e667f3bcc909ULL);
  h = mix64(h ^ tag);
  h = mix64(h ^ stream);
  h = mix64(h ^ counter);
  return h;
}

inline constexpr std::uint64_t kTagInitial = 1;    // initial-condition sampling
inline constexpr std::uint64_t kTagBrownian = 2;   // per-step Brownian increments
inline constexpr std::uint64_t kTagBridge = 4;     // within-step reconstruction
inline constexpr std::uint64_t kTagSubsample = 5;  // diagnostic subsampling
inline constexpr std::uint64_t kTagProbe = 6;      // assumption-checker probes

// Uniform draw in (0, 1).
inline double uniform01(std::uint64_t seed, std::uint64_t tag, std::uint64_t stream,
                        std::uint64_t counter) noexcept {
  const double u =
      static_cast<double>(hash4(seed, tag, stream, counter) >> 11) * 0x1.0p-53;
  return u > 0.0 ? u : 0x1.0p-53;
}

// j-th standard normal draw of a stream (Box-Muller, cosine branch; draws
// j and j' != j are independent).
inline double normal(std::uint64_t seed, std::uint64_t tag, std::uint64_t stream,
                     std::uint64_t draw) noexcept {
  const double u1 = uniform01(seed, tag, stream, 2 * draw);
  const double u2 = uniform01(seed, tag, stream, 2 * draw + 1);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.28318530717958647692529 * u2);
}

// Van der Corput radical inverse in the given base.
inline double radical_inverse(std::uint64_t index, std::uint32_t base) noexcept {
  const double inv = 1.0 / base;
  double f = inv, x = 0.0;
  while (index > 0) {
    x += f * static_cast<double>(index % base);
    index /= base;
    f *= inv;
  }
  return x;
}

// Halton point coordinate; axis selects the prime base.
inline double halton(std::uint64_t index, int axis) noexcept {
  constexpr std::uint32_t bases[6] = {2, 3, 5, 7, 11, 13};
  return radical_inverse(index + 1, bases[axis % 6]);
}

}  // namespace mvsde::rng
