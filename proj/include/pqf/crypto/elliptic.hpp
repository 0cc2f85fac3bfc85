#pragma once

#include <cstdint>

#include "pqf/crypto/number_theory.hpp"

namespace pqf {

// y^2 = x^3 + a x + b over F_p, p an odd prime, 4a^3 + 27b^2 != 0.
class EllipticCurve {
 public:
  EllipticCurve(Integer p, Integer a, Integer b);

  const Integer& p() const { return p_; }
  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }

 private:
  Integer p_;
  Integer a_;
  Integer b_;
};

struct EcPoint {
  bool infinity = true;
  Integer x;
  Integer y;

  static EcPoint at_infinity() { return EcPoint{}; }
  static EcPoint affine(Integer x, Integer y) { return EcPoint{false, std::move(x), std::move(y)}; }

  friend bool operator==(const EcPoint&, const EcPoint&) = default;
};

bool on_curve(const EllipticCurve& c, const EcPoint& p);
// Throws kInvariantViolation for an off-curve point.
void require_on_curve(const EllipticCurve& c, const EcPoint& p);

EcPoint ec_neg(const EllipticCurve& c, const EcPoint& p);
EcPoint ec_add(const EllipticCurve& c, const EcPoint& p, const EcPoint& q);
// Double-and-add; negative k multiplies -p.
EcPoint ec_mul(const EllipticCurve& c, const Integer& k, const EcPoint& p);
// Uniform x until x^3 + ax + b is a square; y from Tonelli-Shanks.
EcPoint ec_random_point(const EllipticCurve& c, Rng& rng);

struct EcDomain {
  EllipticCurve curve;
  EcPoint base;
  Integer order;  // prime order of base
};

// A fixed curve over a 64-bit prime whose group has prime order.
EcDomain ec_test_domain_64();

struct EcPublicKey {
  EcDomain domain;
  EcPoint q;  // n P
};

struct EcPrivateKey {
  EcDomain domain;
  Integer n;
};

struct EcKeyPair {
  EcPublicKey pub;
  EcPrivateKey priv;
};

struct EcCiphertext {
  EcPoint c1;
  EcPoint c2;
};

EcKeyPair ec_elgamal_keygen(const EcDomain& d, std::uint64_t seed);
EcKeyPair ec_elgamal_from_secret(const EcDomain& d, const Integer& n);
EcCiphertext ec_elgamal_encrypt(const EcPublicKey& pub, const EcPoint& m, std::uint64_t seed);
// k = 0 mod order is rejected: c1 would be o and c2 = m.
EcCiphertext ec_elgamal_encrypt_with(const EcPublicKey& pub, const EcPoint& m, const Integer& k);
EcPoint ec_elgamal_decrypt(const EcPrivateKey& priv, const EcCiphertext& c);

}  // namespace pqf
