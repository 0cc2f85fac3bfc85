#include "pqf/crypto/number_theory.hpp"

#include "pqf/core/error.hpp"

namespace pqf {

bool is_probable_prime(const Integer& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 64) > 0;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer powmod(const Integer& base, const Integer& exp, const Integer& m) {
  if (sgn(exp) < 0) return powmod(invmod(base, m), -exp, m);
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer invmod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    fail(ErrorKind::kInvariantViolation, "invmod: " + a.get_str() + " is not invertible mod " + m.get_str());
  }
  return r;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::optional<Integer> sqrt_mod_prime(const Integer& a_in, const Integer& p) {
  const Integer a = mod(a_in, p);
  if (a == 0) return Integer(0);
  if (p == 2) return a;
  if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;
  // p - 1 = q 2^s with q odd.
  Integer q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q >>= 1;
    ++s;
  }
  Integer z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  Integer c = powmod(z, q, p);
  Integer x = powmod(a, (q + 1) / 2, p);
  Integer t = powmod(a, q, p);
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    Integer t2 = t;
    while (t2 != 1) {
      t2 = t2 * t2 % p;
      ++i;
    }
    Integer b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % p;
    x = x * b % p;
    c = b * b % p;
    t = t * c % p;
    m = i;
  }
  return x;
}

Integer uniform_in(Rng& rng, const Integer& lo, const Integer& hi) {
  if (hi < lo) fail(ErrorKind::kInvariantViolation, "uniform_in: empty range");
  return lo + rng.uniform_below(hi - lo + 1);
}

Integer random_prime(Rng& rng, unsigned bits) {
  for (;;) {
    Integer c = rng.random_bits_odd(bits);
    if (is_probable_prime(c)) return c;
  }
}

Integer random_safe_prime(Rng& rng, unsigned bits) {
  if (bits < 3) fail(ErrorKind::kInvariantViolation, "safe primes need at least 3 bits");
  for (;;) {
    Integer q = rng.random_bits_odd(bits - 1);
    // Cheap sieve: q = 1 mod 3 makes 2q + 1 divisible by 3.
    if (q > 3 && mpz_fdiv_ui(q.get_mpz_t(), 3) == 1) continue;
    if (!is_probable_prime(q)) continue;
    Integer p = 2 * q + 1;
    if (is_probable_prime(p)) return p;
  }
}

PrimeField::PrimeField(Integer p) : p_(std::move(p)) {
  if (p_ < 2 || !is_probable_prime(p_)) {
    fail(ErrorKind::kInvariantViolation, "field modulus " + p_.get_str() + " is not prime");
  }
}

}  // namespace pqf
