#pragma once

#include <cstdint>
#include <vector>

#include "pqf/core/random.hpp"

namespace pqf {

using Coeffs = std::vector<std::int64_t>;

// Element of (Z/sZ)[x]/(x^N - 1); coefficients kept in [0, s).
class RingPoly {
 public:
  RingPoly(std::int64_t modulus, Coeffs coeffs);

  static RingPoly zero(std::size_t n, std::int64_t modulus);
  static RingPoly one(std::size_t n, std::int64_t modulus);
  static RingPoly monomial(std::size_t n, std::int64_t modulus, std::size_t k);

  std::size_t n() const { return coeffs_.size(); }
  std::int64_t modulus() const { return modulus_; }
  const Coeffs& coeffs() const { return coeffs_; }
  // Representatives in (-s/2, s/2].
  Coeffs centered() const;
  // Same coefficients reduced modulo another modulus.
  RingPoly reduce(std::int64_t modulus) const;

  friend RingPoly operator+(const RingPoly& a, const RingPoly& b);
  friend RingPoly operator-(const RingPoly& a, const RingPoly& b);
  friend RingPoly operator*(const RingPoly& a, const RingPoly& b);
  friend RingPoly operator*(std::int64_t k, const RingPoly& a);
  friend bool operator==(const RingPoly&, const RingPoly&) = default;

 private:
  std::int64_t modulus_;
  Coeffs coeffs_;
};

// Cyclic convolution over Z.
Coeffs convolve(const Coeffs& a, const Coeffs& b);

// Inverse for a prime modulus (extended Euclid against x^N - 1) or a prime
// power (Hensel lifting from the prime). Throws kInvariantViolation when the
// gcd with x^N - 1 is nontrivial.
RingPoly ring_invert(const RingPoly& a);

// T(d1, d2): d1 coefficients equal to 1, d2 equal to -1, the rest 0.
Coeffs sample_ternary(std::size_t n, std::size_t d1, std::size_t d2, Rng& rng);

struct NtruParams {
  std::int64_t n = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t d = 0;

  friend bool operator==(const NtruParams&, const NtruParams&) = default;
};

// N, p prime; q prime or a power of two; gcd(p, q) = gcd(N, q) = 1;
// q > (6d + 1) p; 2d + 1 <= N. Throws kInvariantViolation.
void validate_ntru_params(const NtruParams& params);

struct NtruPublicKey {
  NtruParams params;
  RingPoly h;
};

struct NtruKeys {
  NtruParams params;
  Coeffs k1;  // T(d + 1, d)
  Coeffs k2;  // T(d, d)
  RingPoly g_p;
  RingPoly g_q;
  RingPoly h;  // g_q k2

  NtruPublicKey public_key() const { return NtruPublicKey{params, h}; }
};

// Resamples k1 until it is invertible in both R_p and R_q.
NtruKeys ntru_keygen(const NtruParams& params, std::uint64_t seed);
NtruKeys ntru_keys_from(const NtruParams& params, const Coeffs& k1, const Coeffs& k2);

// m has centered coefficients in (-p/2, p/2]; r is drawn from T(d, d).
RingPoly ntru_encrypt(const NtruPublicKey& pub, const Coeffs& m, std::uint64_t seed);
RingPoly ntru_encrypt_with(const NtruPublicKey& pub, const Coeffs& m, const Coeffs& r);
Coeffs ntru_decrypt(const NtruKeys& keys, const RingPoly& c);

}  // namespace pqf
