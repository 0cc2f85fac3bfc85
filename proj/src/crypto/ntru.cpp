#include "pqf/crypto/ntru.hpp"

#include <numeric>

#include "pqf/core/error.hpp"
#include "pqf/crypto/number_theory.hpp"

namespace pqf {

namespace {

std::int64_t reduce_mod(__int128 x, std::int64_t s) {
  auto r = static_cast<std::int64_t>(x % s);
  return r < 0 ? r + s : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t s) {
  return reduce_mod(static_cast<__int128>(a) * b, s);
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t s) {
  return static_cast<std::int64_t>(invmod(Integer(static_cast<long>(a)), Integer(static_cast<long>(s))).get_si());
}

bool is_prime_int(std::int64_t x) { return x >= 2 && is_probable_prime(Integer(static_cast<long>(x))); }

// Plain polynomials over Z/sZ, lowest degree first, no trailing zeros.
using Poly = Coeffs;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_sub(const Poly& a, const Poly& b, std::int64_t s) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = reduce_mod(static_cast<__int128>(r[i]) - b[i], s);
  trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t s) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = reduce_mod(r[i + j] + static_cast<__int128>(a[i]) * b[j], s);
  trim(r);
  return r;
}

// a = q b + r over the field Z/sZ.
void poly_divmod(const Poly& a, const Poly& b, std::int64_t s, Poly& q, Poly& r) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, 0);
  const std::int64_t lead_inv = inverse_mod(b.back(), s);
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const std::int64_t c = mulmod(r.back(), lead_inv, s);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) {
      r[shift + i] = reduce_mod(static_cast<__int128>(r[shift + i]) - static_cast<__int128>(c) * b[i], s);
    }
    trim(r);
  }
  trim(q);
}

RingPoly invert_prime(const RingPoly& a) {
  const std::int64_t s = a.modulus();
  const std::size_t n = a.n();
  Poly r0(n + 1, 0);
  r0[0] = s - 1;
  r0[n] = 1;
  Poly r1 = a.coeffs();
  trim(r1);
  Poly t0;
  Poly t1{1};
  while (r1.size() > 1) {
    Poly q;
    Poly r;
    poly_divmod(r0, r1, s, q, r);
    Poly t = poly_sub(t0, poly_mul(q, t1, s), s);
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r1.empty()) fail(ErrorKind::kInvariantViolation, "ring element is not invertible: gcd with x^N - 1 is nontrivial");
  const std::int64_t c = inverse_mod(r1[0], s);
  Coeffs out(n, 0);
  for (std::size_t i = 0; i < t1.size(); ++i) out[i % n] = reduce_mod(out[i % n] + static_cast<__int128>(t1[i]) * c, s);
  return RingPoly(s, out);
}

std::int64_t smallest_prime_factor(std::int64_t s) {
  for (std::int64_t f = 2; f * f <= s && f < (1 << 20); ++f)
    if (s % f == 0) return f;
  return s;
}

void check_ternary(const Coeffs& v, std::size_t n, std::size_t d1, std::size_t d2, const char* what) {
  std::size_t plus = 0;
  std::size_t minus = 0;
  for (std::int64_t x : v) {
    if (x == 1) ++plus;
    else if (x == -1) ++minus;
    else if (x != 0) fail(ErrorKind::kInvariantViolation, std::string(what) + " has a coefficient outside {-1, 0, 1}");
  }
  if (v.size() != n || plus != d1 || minus != d2) {
    fail(ErrorKind::kInvariantViolation, std::string(what) + " is not in T(" + std::to_string(d1) + ", " +
                                             std::to_string(d2) + ")");
  }
}

}  // namespace

RingPoly::RingPoly(std::int64_t modulus, Coeffs coeffs) : modulus_(modulus), coeffs_(std::move(coeffs)) {
  if (modulus_ < 2 || modulus_ > (std::int64_t{1} << 62)) {
    fail(ErrorKind::kInvariantViolation, "ring modulus must lie in [2, 2^62]");
  }
  if (coeffs_.empty()) fail(ErrorKind::kInvariantViolation, "ring degree N must be positive");
  for (std::int64_t& c : coeffs_) c = reduce_mod(c, modulus_);
}

RingPoly RingPoly::zero(std::size_t n, std::int64_t modulus) { return RingPoly(modulus, Coeffs(n, 0)); }

RingPoly RingPoly::one(std::size_t n, std::int64_t modulus) { return monomial(n, modulus, 0); }

RingPoly RingPoly::monomial(std::size_t n, std::int64_t modulus, std::size_t k) {
  Coeffs c(n, 0);
  c.at(k % n) = 1;
  return RingPoly(modulus, c);
}

Coeffs RingPoly::centered() const {
  Coeffs out = coeffs_;
  for (std::int64_t& c : out)
    if (c > modulus_ / 2) c -= modulus_;
  return out;
}

RingPoly RingPoly::reduce(std::int64_t modulus) const { return RingPoly(modulus, coeffs_); }

namespace {

void require_same_ring(const RingPoly& a, const RingPoly& b) {
  if (a.n() != b.n() || a.modulus() != b.modulus()) fail(ErrorKind::kInvariantViolation, "ring elements from different rings");
}

}  // namespace

RingPoly operator+(const RingPoly& a, const RingPoly& b) {
  require_same_ring(a, b);
  Coeffs c(a.n());
  for (std::size_t i = 0; i < a.n(); ++i) c[i] = reduce_mod(static_cast<__int128>(a.coeffs_[i]) + b.coeffs_[i], a.modulus_);
  return RingPoly(a.modulus_, c);
}

RingPoly operator-(const RingPoly& a, const RingPoly& b) {
  require_same_ring(a, b);
  Coeffs c(a.n());
  for (std::size_t i = 0; i < a.n(); ++i) c[i] = reduce_mod(static_cast<__int128>(a.coeffs_[i]) - b.coeffs_[i], a.modulus_);
  return RingPoly(a.modulus_, c);
}

RingPoly operator*(const RingPoly& a, const RingPoly& b) {
  require_same_ring(a, b);
  const std::size_t n = a.n();
  Coeffs c(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = (i + j) % n;
      c[k] = reduce_mod(c[k] + static_cast<__int128>(a.coeffs_[i]) * b.coeffs_[j], a.modulus_);
    }
  }
  return RingPoly(a.modulus_, c);
}

RingPoly operator*(std::int64_t k, const RingPoly& a) {
  Coeffs c(a.n());
  for (std::size_t i = 0; i < a.n(); ++i) c[i] = mulmod(reduce_mod(k, a.modulus_), a.coeffs_[i], a.modulus_);
  return RingPoly(a.modulus_, c);
}

Coeffs convolve(const Coeffs& a, const Coeffs& b) {
  if (a.size() != b.size()) fail(ErrorKind::kInvariantViolation, "convolve: length mismatch");
  const std::size_t n = a.size();
  Coeffs c(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[(i + j) % n] += a[i] * b[j];
  return c;
}

RingPoly ring_invert(const RingPoly& a) {
  const std::int64_t s = a.modulus();
  if (is_prime_int(s)) return invert_prime(a);
  const std::int64_t base = smallest_prime_factor(s);
  std::int64_t rest = s;
  while (rest % base == 0) rest /= base;
  if (rest != 1 || !is_prime_int(base)) {
    fail(ErrorKind::kInvariantViolation, "ring_invert: modulus " + std::to_string(s) + " is not a prime power");
  }
  RingPoly b = invert_prime(a.reduce(base));
  // Newton step b <- b (2 - a b) squares the modulus.
  for (std::int64_t m = base; m < s;) {
    m = (m > s / m) ? s : std::min(s, m * m);
    const RingPoly am = a.reduce(m);
    const RingPoly bm = b.reduce(m);
    b = bm * (2 * RingPoly::one(a.n(), m) - am * bm);
  }
  return b;
}

Coeffs sample_ternary(std::size_t n, std::size_t d1, std::size_t d2, Rng& rng) {
  if (d1 + d2 > n) fail(ErrorKind::kInvariantViolation, "sample_ternary: d1 + d2 exceeds N");
  Coeffs v(n, 0);
  for (std::size_t i = 0; i < d1; ++i) v[i] = 1;
  for (std::size_t i = d1; i < d1 + d2; ++i) v[i] = -1;
  for (std::size_t i = n; i-- > 1;) {
    const auto j = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i)));
    std::swap(v[i], v[j]);
  }
  return v;
}

void validate_ntru_params(const NtruParams& p) {
  auto bad = [&](const std::string& why) {
    fail(ErrorKind::kInvariantViolation,
         "invalid NTRU parameters (" + std::to_string(p.n) + ", " + std::to_string(p.p) + ", " +
             std::to_string(p.q) + ", " + std::to_string(p.d) + "): " + why);
  };
  if (!is_prime_int(p.n)) bad("N must be prime");
  if (!is_prime_int(p.p)) bad("p must be prime");
  if (p.d < 1) bad("d must be positive");
  if (2 * p.d + 1 > p.n) bad("T(d + 1, d) needs 2d + 1 <= N");
  if (p.q < 2 || p.q > (std::int64_t{1} << 40)) bad("q out of range");
  const bool power_of_two = (p.q & (p.q - 1)) == 0;
  if (!is_prime_int(p.q) && !power_of_two) bad("q must be prime or a power of two");
  if (std::gcd(p.p, p.q) != 1) bad("gcd(p, q) != 1");
  if (std::gcd(p.n, p.q) != 1) bad("gcd(N, q) != 1");
  if (p.q <= (6 * p.d + 1) * p.p) bad("q must exceed (6d + 1) p");
}

NtruKeys ntru_keys_from(const NtruParams& params, const Coeffs& k1, const Coeffs& k2) {
  validate_ntru_params(params);
  const auto n = static_cast<std::size_t>(params.n);
  const auto d = static_cast<std::size_t>(params.d);
  check_ternary(k1, n, d + 1, d, "k1");
  check_ternary(k2, n, d, d, "k2");
  RingPoly g_p = ring_invert(RingPoly(params.p, k1));
  RingPoly g_q = ring_invert(RingPoly(params.q, k1));
  RingPoly h = g_q * RingPoly(params.q, k2);
  return NtruKeys{params, k1, k2, std::move(g_p), std::move(g_q), std::move(h)};
}

NtruKeys ntru_keygen(const NtruParams& params, std::uint64_t seed) {
  validate_ntru_params(params);
  const auto n = static_cast<std::size_t>(params.n);
  const auto d = static_cast<std::size_t>(params.d);
  Rng root(seed);
  Rng k1_rng = root.derive("ntru-k1");
  Rng k2_rng = root.derive("ntru-k2");
  const Coeffs k2 = sample_ternary(n, d, d, k2_rng);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const Coeffs k1 = sample_ternary(n, d + 1, d, k1_rng);
    try {
      return ntru_keys_from(params, k1, k2);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kInvariantViolation) throw;
    }
  }
  fail(ErrorKind::kAlgorithmFailure, "ntru_keygen: no invertible k1 after 1000 draws");
}

RingPoly ntru_encrypt_with(const NtruPublicKey& pub, const Coeffs& m, const Coeffs& r) {
  const NtruParams& p = pub.params;
  const auto n = static_cast<std::size_t>(p.n);
  if (m.size() != n) fail(ErrorKind::kInvariantViolation, "ntru_encrypt: message length must be N");
  for (std::int64_t x : m) {
    if (2 * x <= -p.p || 2 * x > p.p) fail(ErrorKind::kInvariantViolation, "ntru_encrypt: message coefficient outside (-p/2, p/2]");
  }
  check_ternary(r, n, static_cast<std::size_t>(p.d), static_cast<std::size_t>(p.d), "r");
  return p.p * (RingPoly(p.q, r) * pub.h) + RingPoly(p.q, m);
}

RingPoly ntru_encrypt(const NtruPublicKey& pub, const Coeffs& m, std::uint64_t seed) {
  Rng rng = Rng(seed).derive("ntru-r");
  const auto d = static_cast<std::size_t>(pub.params.d);
  return ntru_encrypt_with(pub, m, sample_ternary(static_cast<std::size_t>(pub.params.n), d, d, rng));
}

Coeffs ntru_decrypt(const NtruKeys& keys, const RingPoly& c) {
  const NtruParams& p = keys.params;
  if (c.modulus() != p.q || c.n() != static_cast<std::size_t>(p.n)) {
    fail(ErrorKind::kInvariantViolation, "ntru_decrypt: ciphertext is not in R_q");
  }
  const Coeffs m_star = (RingPoly(p.q, keys.k1) * c).centered();
  return (keys.g_p * RingPoly(p.p, m_star)).centered();
}

}  // namespace pqf
