#pragma once

#include <cstdint>
#include <vector>

#include "pqf/core/lattice.hpp"

namespace pqf {

struct AdPublicKey {
  Basis public_basis;
  double d = 0.0;
};

// The private hyperplane H is spanned by the first n - 1 rows of
// private_basis; w is an exact normal to H and the last row is h + lambda w
// with h in H, so <c, u>/d* = <c, w>/scale exactly.
struct AdKeyPair {
  std::size_t n = 0;
  double m_bound = 0.0;
  double d = 0.0;
  Basis private_basis;
  Basis public_basis;
  RatVector normal;  // w
  Rational scale;    // lambda |w|^2
  std::vector<double> private_u;
  double d_star = 0.0;

  AdPublicKey public_key() const { return AdPublicKey{public_basis, d}; }
};

// d = 0 selects the smallest admissible value 8 n^3 M.
AdKeyPair ad_keygen(std::uint64_t seed, std::size_t n, double m_bound, double d = 0.0);

// Bit 0: a seeded lattice point plus n vectors from the ball of radius d/(16n).
// Bit 1: uniform in the box [-2d, 2d]^n.
RatVector ad_encrypt_bit(const AdPublicKey& pub, int bit, std::uint64_t seed);
// Bit 0 with explicit lattice coefficients z and perturbation v.
RatVector ad_encrypt_zero_with(const AdPublicKey& pub, const IntVector& z, const RatVector& v);

// Fractional part of <c, u>/d*, exact.
Rational ad_gamma(const AdKeyPair& key, const RatVector& c);
// 0 iff min(gamma, 1 - gamma) < tau, tau in (0, 1/4).
int ad_decrypt_bit(const AdKeyPair& key, const RatVector& c, double tau);

}  // namespace pqf
