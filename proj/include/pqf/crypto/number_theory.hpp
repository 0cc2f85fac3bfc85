#pragma once

#include <optional>

#include "pqf/core/random.hpp"
#include "pqf/core/rational.hpp"

namespace pqf {

// Miller-Rabin with 64 rounds: error below 2^-128 for composites.
bool is_probable_prime(const Integer& n);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer powmod(const Integer& base, const Integer& exp, const Integer& mod);
// Throws kInvariantViolation when a is not invertible.
Integer invmod(const Integer& a, const Integer& mod);
// Least nonnegative residue.
Integer mod(const Integer& a, const Integer& m);

// Square root modulo an odd prime (Tonelli-Shanks); empty for non-residues.
std::optional<Integer> sqrt_mod_prime(const Integer& a, const Integer& p);

// Uniform in [lo, hi].
Integer uniform_in(Rng& rng, const Integer& lo, const Integer& hi);

Integer random_prime(Rng& rng, unsigned bits);
// p = 2q + 1 with q prime.
Integer random_safe_prime(Rng& rng, unsigned bits);

// A field F_p; construction checks primality.
class PrimeField {
 public:
  explicit PrimeField(Integer p);
  const Integer& p() const { return p_; }

 private:
  Integer p_;
};

}  // namespace pqf
