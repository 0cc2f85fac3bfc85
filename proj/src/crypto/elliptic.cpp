#include "pqf/crypto/elliptic.hpp"

#include "pqf/core/error.hpp"

namespace pqf {

EllipticCurve::EllipticCurve(Integer p, Integer a, Integer b)
    : p_(std::move(p)), a_(std::move(a)), b_(std::move(b)) {
  PrimeField field(p_);
  if (p_ == 2 || p_ == 3) fail(ErrorKind::kInvariantViolation, "curve field characteristic must exceed 3");
  a_ = mod(a_, p_);
  b_ = mod(b_, p_);
  if (mod(4 * a_ * a_ * a_ + 27 * b_ * b_, p_) == 0) {
    fail(ErrorKind::kInvariantViolation, "singular curve: 4a^3 + 27b^2 = 0");
  }
}

bool on_curve(const EllipticCurve& c, const EcPoint& p) {
  if (p.infinity) return true;
  const Integer& m = c.p();
  if (p.x < 0 || p.x >= m || p.y < 0 || p.y >= m) return false;
  return mod(p.y * p.y - (p.x * p.x * p.x + c.a() * p.x + c.b()), m) == 0;
}

void require_on_curve(const EllipticCurve& c, const EcPoint& p) {
  if (!on_curve(c, p)) {
    fail(ErrorKind::kInvariantViolation,
         "point (" + p.x.get_str() + ", " + p.y.get_str() + ") is not on the curve");
  }
}

EcPoint ec_neg(const EllipticCurve& c, const EcPoint& p) {
  if (p.infinity) return p;
  return EcPoint::affine(p.x, mod(-p.y, c.p()));
}

namespace {

EcPoint add_unchecked(const EllipticCurve& c, const EcPoint& p, const EcPoint& q) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  const Integer& m = c.p();
  Integer lambda;
  if (p.x == q.x) {
    if (mod(p.y + q.y, m) == 0) return EcPoint::at_infinity();
    lambda = mod((3 * p.x * p.x + c.a()) * invmod(2 * p.y, m), m);
  } else {
    lambda = mod((q.y - p.y) * invmod(mod(q.x - p.x, m), m), m);
  }
  const Integer x3 = mod(lambda * lambda - p.x - q.x, m);
  const Integer y3 = mod(lambda * (p.x - x3) - p.y, m);
  return EcPoint::affine(x3, y3);
}

}  // namespace

EcPoint ec_add(const EllipticCurve& c, const EcPoint& p, const EcPoint& q) {
  require_on_curve(c, p);
  require_on_curve(c, q);
  return add_unchecked(c, p, q);
}

EcPoint ec_mul(const EllipticCurve& c, const Integer& k, const EcPoint& p) {
  require_on_curve(c, p);
  if (k < 0) return ec_mul(c, -k, ec_neg(c, p));
  EcPoint acc = EcPoint::at_infinity();
  for (std::size_t bit = bit_length(k); bit-- > 0;) {
    acc = add_unchecked(c, acc, acc);
    if (mpz_tstbit(k.get_mpz_t(), bit)) acc = add_unchecked(c, acc, p);
  }
  return acc;
}

EcPoint ec_random_point(const EllipticCurve& c, Rng& rng) {
  for (;;) {
    const Integer x = rng.uniform_below(c.p());
    const auto y = sqrt_mod_prime(x * x * x + c.a() * x + c.b(), c.p());
    if (!y) continue;
    // Pick the root by a coin so both halves of the curve are reachable.
    return EcPoint::affine(x, (rng.next_u64() & 1) ? *y : mod(-*y, c.p()));
  }
}

EcDomain ec_test_domain_64() {
  EllipticCurve curve(Integer("12472894037593836083"), Integer("858174041543101500"),
                      Integer("195018841628117497"));
  EcPoint base = EcPoint::affine(Integer("9914672903189359238"), Integer("8631223179061316390"));
  return EcDomain{curve, base, Integer("12472894036385368819")};
}

EcKeyPair ec_elgamal_from_secret(const EcDomain& d, const Integer& n) {
  if (n < 1 || n >= d.order) fail(ErrorKind::kInvariantViolation, "EC secret must lie in [1, order - 1]");
  return EcKeyPair{EcPublicKey{d, ec_mul(d.curve, n, d.base)}, EcPrivateKey{d, n}};
}

EcKeyPair ec_elgamal_keygen(const EcDomain& d, std::uint64_t seed) {
  Rng rng = Rng(seed).derive("ec-key");
  return ec_elgamal_from_secret(d, uniform_in(rng, 1, d.order - 1));
}

EcCiphertext ec_elgamal_encrypt_with(const EcPublicKey& pub, const EcPoint& m, const Integer& k) {
  const EcDomain& d = pub.domain;
  require_on_curve(d.curve, m);
  if (mod(k, d.order) == 0) {
    fail(ErrorKind::kInvariantViolation, "degenerate ephemeral k: c1 would be o");
  }
  return EcCiphertext{ec_mul(d.curve, k, d.base),
                      ec_add(d.curve, m, ec_mul(d.curve, k, pub.q))};
}

EcCiphertext ec_elgamal_encrypt(const EcPublicKey& pub, const EcPoint& m, std::uint64_t seed) {
  Rng rng = Rng(seed).derive("ec-k");
  return ec_elgamal_encrypt_with(pub, m, uniform_in(rng, 1, pub.domain.order - 1));
}

EcPoint ec_elgamal_decrypt(const EcPrivateKey& priv, const EcCiphertext& c) {
  const EllipticCurve& curve = priv.domain.curve;
  return ec_add(curve, c.c2, ec_neg(curve, ec_mul(curve, priv.n, c.c1)));
}

}  // namespace pqf
