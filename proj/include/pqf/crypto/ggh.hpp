#pragma once

#include <cstdint>

#include "pqf/core/lattice.hpp"

namespace pqf {

// prod |b_i| / |det B|, computed in logs; 1 exactly for orthogonal bases.
double orthogonality_defect(const Basis& b);

// Rounding t = c B^-1 recovers the lattice point whenever |v|_inf is strictly
// below 1 / (2 max_j sum_i |(B^-1)_ij|).
Rational rounding_correction_radius(const Basis& b);

struct GghParams {
  std::size_t n = 4;
  std::int64_t k = 20;  // good basis is k I + R with R in {-1, 0, 1}
  double defect_threshold = 4.0;
  std::int64_t message_bound = 100;
};

struct GghPublicKey {
  Basis bad_basis;
  std::int64_t message_bound = 0;
};

struct GghKeyPair {
  GghParams params;
  Basis good_basis;
  Basis bad_basis;  // transform * good_basis
  UnimodularMatrix transform;
  double good_defect = 0.0;
  double bad_defect = 0.0;
  Rational correction_radius;

  GghPublicKey public_key() const { return GghPublicKey{bad_basis, params.message_bound}; }
};

GghKeyPair ggh_keygen(std::uint64_t seed, const GghParams& params);

// c = m B + v with v uniform in [-v_bound, v_bound]^n.
IntVector ggh_encrypt(const GghPublicKey& pub, const IntVector& m, std::int64_t v_bound,
                      std::uint64_t seed);
IntVector ggh_encrypt_with(const GghPublicKey& pub, const IntVector& m, const IntVector& v);

// Babai rounding with the private basis, then d B^-1. Throws kAlgorithmFailure
// on a rounding tie, a non-integral or out-of-bound message.
IntVector ggh_decrypt(const GghKeyPair& key, const IntVector& c);

// The same decoding with an arbitrary basis of the public lattice.
IntVector ggh_decode(const Basis& decoding, const GghPublicKey& pub, const IntVector& c);

}  // namespace pqf
