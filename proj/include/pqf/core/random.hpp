#pragma once

#include <cstdint>
#include <string_view>

#include "pqf/core/rational.hpp"

namespace pqf {

/// Deterministic SplitMix64 generator (64-bit state). Streams for distinct
/// purposes are split off with derive(label), so adding a draw to one
/// consumer never shifts another consumer's values.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  /// Independent child stream keyed by a label.
  Rng derive(std::string_view label) const;
  Rng derive(std::uint64_t index) const;

  /// Uniform in [lo, hi], unbiased.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// Uniform in [0, 1) with 53 random bits.
  double uniform_real();
  /// Standard normal by Box-Muller (fixed here so streams are reproducible
  /// across standard libraries).
  double normal();

  /// Uniform in [0, bound), bound > 0.
  Integer uniform_below(const Integer& bound);
  /// Uniform odd integer with exactly `bits` bits (top bit set).
  Integer random_bits_odd(unsigned bits);

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

std::uint64_t fnv1a64(std::string_view text);

}  // namespace pqf
