#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace rmtlab {

// Counter-based Gaussian source.
//
// The uniform stream is the SplitMix64 sequence started at mix(seed); since
// its state advances by a fixed increment, output n is available in O(1) as
// mix(state0 + n * increment). Draw i owns slots [8i, 8i + 8), so any draw of
// any stream can be regenerated independently of thread count or scheduling.
class CounterRng {
 public:
  static constexpr std::uint64_t kIncrement = 0x9e3779b97f4a7c15ULL;
  static constexpr std::uint64_t kSlotsPerDraw = 8;

  explicit constexpr CounterRng(std::uint64_t seed) : base_(mix(seed + kIncrement)) {}

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  constexpr std::uint64_t bits(std::uint64_t draw, std::uint64_t slot) const {
    return mix(base_ + (draw * kSlotsPerDraw + slot + 1) * kIncrement);
  }

  /// Uniform on (0, 1].
  double uniform_open0(std::uint64_t draw, std::uint64_t slot) const {
    return static_cast<double>((bits(draw, slot) >> 11) + 1) * 0x1.0p-53;
  }

  /// Uniform on [0, 1).
  double uniform(std::uint64_t draw, std::uint64_t slot) const {
    return static_cast<double>(bits(draw, slot) >> 11) * 0x1.0p-53;
  }

  /// Box-Muller pair of independent standard normals from slots
  /// (2 * pair, 2 * pair + 1) of the draw.
  std::pair<double, double> normal_pair(std::uint64_t draw, std::uint64_t pair) const {
    const double u1 = uniform_open0(draw, 2 * pair);
    const double u2 = uniform(draw, 2 * pair + 1);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(angle), r * std::sin(angle)};
  }

 private:
  std::uint64_t base_;
};

}  // namespace rmtlab
