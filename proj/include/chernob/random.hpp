#pragma once

#include <cstdint>
#include <random>

namespace chernob {

/// Seed-reproducible integer source. The engine is std::mt19937_64, whose
/// output sequence is fixed by the standard; integers in [lo, hi] are drawn
/// by rejection sampling on the raw 64-bit output, so a seed yields the same
/// values on every platform and standard library.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace chernob
