#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace liewidth {

/// Deterministic splitmix64 generator. Fully specified here so identical
/// seeds reproduce identical streams on every platform and toolchain
/// (std::uniform_int_distribution is implementation-defined, so it is not used).
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}

  /// Index-addressable substream of a master seed. Campaign sample k draws
  /// from substream(seed, k), which makes worker partitions merge to the
  /// exact sequential result.
  static SeededRng substream(std::uint64_t seed, std::uint64_t stream) {
    SeededRng r(seed);
    r.state_ += stream * 0xd1342543de82ef95ULL;
    r.next();
    return r;
  }

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [lo, hi], both ends inclusive. Rejection sampling,
  /// so the distribution is exact.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / range * range;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return lo + static_cast<std::int64_t>(v % range);
  }

private:
  std::uint64_t state_;
};

}  // namespace liewidth
