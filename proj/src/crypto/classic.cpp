#include "pqf/crypto/classic.hpp"

namespace pqf {

namespace {

void check_exponent(const DhGroup& g, const Integer& x, const char* what) {
  if (x < 1 || x >= g.exponent_range) {
    fail(ErrorKind::kInvariantViolation,
         std::string(what) + " must lie in [1, " + Integer(g.exponent_range - 1).get_str() + "]");
  }
}

Integer draw_exponent(const DhGroup& g, std::uint64_t seed, std::string_view label) {
  Rng rng = Rng(seed).derive(label);
  return uniform_in(rng, 1, g.exponent_range - 1);
}

}  // namespace

DhGroup make_dh_group(const Integer& p, const Integer& g) {
  PrimeField field(p);
  const Integer gg = mod(g, p);
  // ord(g) <= 2 exactly when g^2 = 1.
  if (gg == 0 || gg * gg % p == 1) {
    fail(ErrorKind::kInvariantViolation, "degenerate generator " + g.get_str() + ": order at most 2");
  }
  return DhGroup{p, gg, p - 1};
}

DhGroup generate_dh_group(std::uint64_t seed, unsigned bits) {
  Rng rng = Rng(seed).derive("dh-group");
  const Integer p = random_safe_prime(rng, bits);
  const Integer q = (p - 1) / 2;
  for (;;) {
    const Integer h = uniform_in(rng, 2, p - 2);
    const Integer g = h * h % p;
    if (g != 1) return DhGroup{p, g, q};
  }
}

DhTranscript dh_exchange(const DhGroup& group, const Integer& alpha, const Integer& beta) {
  check_exponent(group, alpha, "alpha");
  check_exponent(group, beta, "beta");
  DhTranscript t;
  t.alpha = alpha;
  t.beta = beta;
  t.a = powmod(group.g, alpha, group.p);
  t.b = powmod(group.g, beta, group.p);
  t.key_alice = powmod(t.b, alpha, group.p);
  t.key_bob = powmod(t.a, beta, group.p);
  return t;
}

DhTranscript dh_exchange_seeded(const DhGroup& group, std::uint64_t alpha_seed, std::uint64_t beta_seed) {
  return dh_exchange(group, draw_exponent(group, alpha_seed, "dh-alpha"),
                     draw_exponent(group, beta_seed, "dh-beta"));
}

Integer dlp_brute(const Integer& p, const Integer& g, const Integer& h) {
  if (p >= Integer(1) << 24) fail(ErrorKind::kSizeCap, "dlp_brute: p must be below 2^24");
  PrimeField field(p);
  const Integer target = mod(h, p);
  const Integer base = mod(g, p);
  Integer cur = 1;
  for (Integer x = 0; x < p - 1; ++x) {
    if (cur == target) return x;
    cur = cur * base % p;
  }
  fail(ErrorKind::kInvariantViolation,
       "dlp_brute: " + h.get_str() + " is not a power of " + g.get_str() + " mod " + p.get_str());
}

RsaKeyPair rsa_from_primes(const Integer& p, const Integer& q, const Integer& e) {
  if (p == q) fail(ErrorKind::kInvariantViolation, "RSA primes must be distinct");
  PrimeField fp(p);
  PrimeField fq(q);
  const Integer phi = (p - 1) * (q - 1);
  if (e < 2 || e >= phi || gcd(e, phi) != 1) {
    fail(ErrorKind::kInvariantViolation, "RSA exponent " + e.get_str() + " is not a unit mod phi(N)");
  }
  RsaKeyPair k;
  k.pub = RsaPublicKey{p * q, e};
  k.priv = RsaPrivateKey{p * q, invmod(e, phi), p, q};
  return k;
}

RsaKeyPair rsa_keygen(std::uint64_t seed, unsigned bits) {
  if (bits < 16) fail(ErrorKind::kInvariantViolation, "rsa_keygen: bits must be at least 16");
  Rng rng = Rng(seed).derive("rsa");
  const unsigned pbits = bits / 2;
  const unsigned qbits = bits - pbits;
  for (;;) {
    const Integer p = random_prime(rng, pbits);
    const Integer q = random_prime(rng, qbits);
    if (p == q || bit_length(p * q) != bits) continue;
    const Integer phi = (p - 1) * (q - 1);
    Integer e = 65537;
    if (e >= phi || gcd(e, phi) != 1) {
      e = 3;
      while (gcd(e, phi) != 1) e += 2;
      if (e >= phi) continue;
    }
    return rsa_from_primes(p, q, e);
  }
}

Integer rsa_encrypt(const RsaPublicKey& pub, const Integer& m) {
  if (m <= 0 || m >= pub.n) {
    fail(ErrorKind::kInvariantViolation, "RSA message out of range (0, N)");
  }
  const Integer g = gcd(m, pub.n);
  if (g != 1) {
    throw SharedFactorError(g, "RSA message shares the factor " + g.get_str() + " with N");
  }
  return powmod(m, pub.e, pub.n);
}

Integer rsa_decrypt(const RsaPrivateKey& priv, const Integer& c) {
  if (c <= 0 || c >= priv.n) {
    fail(ErrorKind::kInvariantViolation, "RSA ciphertext out of range (0, N)");
  }
  return powmod(c, priv.d, priv.n);
}

ElGamalKeyPair elgamal_from_secret(const DhGroup& group, const Integer& a) {
  check_exponent(group, a, "ElGamal secret");
  return ElGamalKeyPair{ElGamalPublicKey{group, powmod(group.g, a, group.p)},
                        ElGamalPrivateKey{group, a}};
}

ElGamalKeyPair elgamal_keygen(const DhGroup& group, std::uint64_t seed) {
  return elgamal_from_secret(group, draw_exponent(group, seed, "elgamal-key"));
}

ElGamalCiphertext elgamal_encrypt_with(const ElGamalPublicKey& pub, const Integer& m,
                                       const Integer& k) {
  const Integer& p = pub.group.p;
  if (m <= 0 || m >= p) fail(ErrorKind::kInvariantViolation, "ElGamal message must lie in F_p*");
  check_exponent(pub.group, k, "ElGamal ephemeral k");
  return ElGamalCiphertext{powmod(pub.group.g, k, p), m * powmod(pub.a_pub, k, p) % p};
}

ElGamalCiphertext elgamal_encrypt(const ElGamalPublicKey& pub, const Integer& m, std::uint64_t seed) {
  return elgamal_encrypt_with(pub, m, draw_exponent(pub.group, seed, "elgamal-k"));
}

Integer elgamal_decrypt(const ElGamalPrivateKey& priv, const ElGamalCiphertext& c) {
  const Integer& p = priv.group.p;
  const Integer s = powmod(c.c1, priv.a, p);
  return invmod(s, p) * c.c2 % p;
}

}  // namespace pqf
