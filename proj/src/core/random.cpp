#include "pqf/core/random.hpp"

#include <cmath>
#include <numbers>

#include "pqf/core/error.hpp"

namespace pqf {

namespace {

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t Rng::next_u64() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix(state_);
}

Rng Rng::derive(std::string_view label) const {
  return Rng(mix(state_ ^ mix(fnv1a64(label))));
}

Rng Rng::derive(std::uint64_t index) const {
  return Rng(mix(state_ ^ mix(index + 0x632be59bd9b4e019ULL)));
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) fail(ErrorKind::kInvariantViolation, "uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == UINT64_MAX) return static_cast<std::int64_t>(next_u64());
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % range);
}

double Rng::uniform_real() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  double u1;
  do {
    u1 = uniform_real();
  } while (u1 <= 0.0);
  double u2 = uniform_real();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Integer Rng::uniform_below(const Integer& bound) {
  if (sgn(bound) <= 0) fail(ErrorKind::kInvariantViolation, "uniform_below: bound must be positive");
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  for (;;) {
    Integer x = 0;
    std::size_t produced = 0;
    while (produced < bits) {
      x <<= 64;
      x += Integer(std::to_string(next_u64()));
      produced += 64;
    }
    x >>= static_cast<mp_bitcnt_t>(produced - bits);
    if (x < bound) return x;
  }
}

Integer Rng::random_bits_odd(unsigned bits) {
  if (bits < 2) fail(ErrorKind::kInvariantViolation, "random_bits_odd: need at least 2 bits");
  Integer top = 1;
  top <<= bits - 1;
  Integer x = uniform_below(top) + top;
  mpz_setbit(x.get_mpz_t(), 0);
  return x;
}

}  // namespace pqf
