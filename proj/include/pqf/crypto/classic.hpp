#pragma once

#include <cstdint>

#include "pqf/core/error.hpp"
#include "pqf/crypto/number_theory.hpp"

namespace pqf {

// Exponents are drawn from [1, exponent_range - 1].
struct DhGroup {
  Integer p;
  Integer g;
  Integer exponent_range;
};

// Checks p prime and ord(g) > 2; the exponent range defaults to p - 1.
DhGroup make_dh_group(const Integer& p, const Integer& g);
// Safe prime p = 2q + 1 and g a square, so g generates the subgroup of prime order q.
DhGroup generate_dh_group(std::uint64_t seed, unsigned bits);

struct DhTranscript {
  Integer alpha;
  Integer beta;
  Integer a;  // g^alpha
  Integer b;  // g^beta
  Integer key_alice;  // b^alpha
  Integer key_bob;    // a^beta
};

DhTranscript dh_exchange(const DhGroup& group, const Integer& alpha, const Integer& beta);
// Exponents drawn from the two seeds.
DhTranscript dh_exchange_seeded(const DhGroup& group, std::uint64_t alpha_seed, std::uint64_t beta_seed);

// Least x >= 0 with g^x = h mod p; p < 2^24.
Integer dlp_brute(const Integer& p, const Integer& g, const Integer& h);

struct RsaPublicKey {
  Integer n;
  Integer e;
};

struct RsaPrivateKey {
  Integer n;
  Integer d;
  Integer p;
  Integer q;
};

struct RsaKeyPair {
  RsaPublicKey pub;
  RsaPrivateKey priv;
};

// Raised when a message shares a factor with N; carries that factor.
class SharedFactorError : public Error {
 public:
  SharedFactorError(Integer factor, const std::string& what)
      : Error(ErrorKind::kInvariantViolation, what), factor_(std::move(factor)) {}
  const Integer& factor() const { return factor_; }

 private:
  Integer factor_;
};

// N has exactly `bits` bits; e = 65537 when admissible, else the least odd e >= 3.
RsaKeyPair rsa_keygen(std::uint64_t seed, unsigned bits);
RsaKeyPair rsa_from_primes(const Integer& p, const Integer& q, const Integer& e);
Integer rsa_encrypt(const RsaPublicKey& pub, const Integer& m);
Integer rsa_decrypt(const RsaPrivateKey& priv, const Integer& c);

struct ElGamalPublicKey {
  DhGroup group;
  Integer a_pub;  // g^a
};

struct ElGamalPrivateKey {
  DhGroup group;
  Integer a;
};

struct ElGamalKeyPair {
  ElGamalPublicKey pub;
  ElGamalPrivateKey priv;
};

struct ElGamalCiphertext {
  Integer c1;
  Integer c2;
};

ElGamalKeyPair elgamal_keygen(const DhGroup& group, std::uint64_t seed);
ElGamalKeyPair elgamal_from_secret(const DhGroup& group, const Integer& a);
ElGamalCiphertext elgamal_encrypt(const ElGamalPublicKey& pub, const Integer& m, std::uint64_t seed);
ElGamalCiphertext elgamal_encrypt_with(const ElGamalPublicKey& pub, const Integer& m,
                                       const Integer& k);
Integer elgamal_decrypt(const ElGamalPrivateKey& priv, const ElGamalCiphertext& c);

}  // namespace pqf
