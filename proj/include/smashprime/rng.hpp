#pragma once

#include <cstdint>
#include <random>

#include "smashprime/field.hpp"
#include "smashprime/linalg.hpp"

namespace smashprime {

/// Deterministic seeded RNG. Only raw engine output is used (no standard
/// distributions), so sequences are identical across platforms.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed), base_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform value in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw_input("rng bound must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % bound;
  }

  /// Integer in [lo, hi], both inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Vector with entries from the small-integer window [lo, hi].
  Vec small_vec(FieldSpec f, std::size_t n, long lo = -2, long hi = 2) {
    Vec v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(Scalar::from_int(f, range(lo, hi)));
    return v;
  }

  /// Nonzero vector with small-integer entries.
  Vec nonzero_small_vec(FieldSpec f, std::size_t n, long lo = -2, long hi = 2) {
    for (;;) {
      Vec v = small_vec(f, n, lo, hi);
      if (!is_zero_vec(v)) return v;
    }
  }

  /// Deterministic child seed for parallelizable sub-tasks.
  std::uint64_t child_seed(std::uint64_t index) {
    // splitmix64 step over (base ^ index); independent of engine state
    std::uint64_t z = base_ ^ (index + 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

private:
  std::mt19937_64 eng_;
  std::uint64_t base_ = 0;
};

}  // namespace smashprime
