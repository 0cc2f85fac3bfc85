#include "pqf/crypto/ajtai_dwork.hpp"

#include <cmath>

#include "pqf/core/random.hpp"

namespace pqf {

namespace {

constexpr unsigned kDyadicBits = 32;

Rational dyadic(double x) { return round_to_dyadic(Rational(x), kDyadicBits); }

std::vector<double> ball_point(Rng& rng, std::size_t n, double radius) {
  std::vector<double> g(n);
  double norm = 0.0;
  while (norm == 0.0) {
    norm = 0.0;
    for (double& x : g) {
      x = rng.normal();
      norm += x * x;
    }
  }
  norm = std::sqrt(norm);
  const double r = radius * std::pow(rng.uniform_real(), 1.0 / static_cast<double>(n));
  for (double& x : g) x *= r / norm;
  return g;
}

double to_double(const Rational& x) { return x.get_d(); }

}  // namespace

AdKeyPair ad_keygen(std::uint64_t seed, std::size_t n, double m_bound, double d) {
  if (n < 2) fail(ErrorKind::kInvariantViolation, "ad_keygen: n must be at least 2");
  if (!(m_bound > 0.0)) fail(ErrorKind::kInvariantViolation, "ad_keygen: M must be positive");
  const double n3 = static_cast<double>(n * n * n);
  const double d_min = 8.0 * n3 * m_bound;
  if (d == 0.0) d = d_min;
  if (!(d >= d_min)) {
    fail(ErrorKind::kInvariantViolation, "ad_keygen: parameter constraint d >= 8 n^3 M violated");
  }
  Rng root(seed);

  // a_1 .. a_{n-1}: independent, |a_i| <= M.
  Rng ball_rng = root.derive("ad-hyperplane");
  RationalMatrix a(n, n);
  for (;;) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const std::vector<double> p = ball_point(ball_rng, n, m_bound * (1.0 - 1e-6));
      for (std::size_t j = 0; j < n; ++j) a(i, j) = dyadic(p[j]);
    }
    RationalMatrix top(n - 1, n);
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = 0; j < n; ++j) top(i, j) = a(i, j);
    if (rank(top) == n - 1) break;
  }

  // Generalised cross product: <a_i, w> = 0 for i < n.
  RatVector w(n);
  for (std::size_t col = 0; col < n; ++col) {
    RationalMatrix minor(n - 1, n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != col) minor(i, k++) = a(i, j);
    w[col] = (col % 2 == 0 ? 1 : -1) * determinant(minor);
  }
  const Rational w_sq = dot(w, w);
  const double w_norm = std::sqrt(to_double(w_sq));

  Rng shift_rng = root.derive("ad-shift");
  const double target = d * (1.0 + 1e-6) + shift_rng.uniform_real() * d * (1.0 - 3e-6);
  const Rational lambda = round_to_dyadic(Rational(target / w_norm), 48);
  for (std::size_t j = 0; j < n; ++j) a(n - 1, j) = lambda * w[j];
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Rational c = dyadic(2.0 * shift_rng.uniform_real() - 1.0);
    for (std::size_t j = 0; j < n; ++j) a(n - 1, j) += c * a(i, j);
  }

  // Public basis: the same lattice behind seeded row operations.
  Rng mix_rng = root.derive("ad-mix");
  RationalMatrix b = a;
  for (std::size_t op = 0; op < n * n; ++op) {
    const auto i = static_cast<std::size_t>(mix_rng.uniform_int(0, static_cast<std::int64_t>(n) - 1));
    auto j = static_cast<std::size_t>(mix_rng.uniform_int(0, static_cast<std::int64_t>(n) - 2));
    if (j >= i) ++j;
    const int c = (mix_rng.next_u64() & 1) ? 1 : -1;
    for (std::size_t col = 0; col < n; ++col) b(i, col) += c * b(j, col);
  }

  std::vector<double> u(n);
  for (std::size_t j = 0; j < n; ++j) u[j] = to_double(w[j]) / w_norm;
  const Rational scale = lambda * w_sq;
  AdKeyPair key{n, m_bound, d, Basis(a), Basis(b), std::move(w), scale, std::move(u),
                to_double(lambda) * w_norm};
  if (key.d_star < d || key.d_star > 2 * d) {
    fail(ErrorKind::kAlgorithmFailure, "ad_keygen: d* fell outside [d, 2d]");
  }
  return key;
}

RatVector ad_encrypt_zero_with(const AdPublicKey& pub, const IntVector& z, const RatVector& v) {
  const std::size_t n = pub.public_basis.dim();
  if (z.size() != n || v.size() != n) fail(ErrorKind::kInvariantViolation, "ad_encrypt: dimension mismatch");
  RatVector c = lattice_point(pub.public_basis, z);
  for (std::size_t j = 0; j < n; ++j) c[j] += v[j];
  return c;
}

RatVector ad_encrypt_bit(const AdPublicKey& pub, int bit, std::uint64_t seed) {
  if (bit != 0 && bit != 1) fail(ErrorKind::kInvariantViolation, "ad_encrypt_bit: bit must be 0 or 1");
  const std::size_t n = pub.public_basis.dim();
  Rng rng = Rng(seed).derive(bit == 0 ? "ad-zero" : "ad-one");
  if (bit == 1) {
    RatVector c(n);
    for (Rational& x : c) x = dyadic(-2.0 * pub.d + 4.0 * pub.d * rng.uniform_real());
    return c;
  }
  IntVector z(n);
  for (Integer& x : z) x = rng.uniform_int(-16, 16);
  const double radius = pub.d / (16.0 * static_cast<double>(n)) * (1.0 - 1e-9);
  std::vector<double> sum(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const std::vector<double> p = ball_point(rng, n, radius);
    for (std::size_t j = 0; j < n; ++j) sum[j] += p[j];
  }
  RatVector v(n);
  for (std::size_t j = 0; j < n; ++j) v[j] = dyadic(sum[j]);
  return ad_encrypt_zero_with(pub, z, v);
}

Rational ad_gamma(const AdKeyPair& key, const RatVector& c) {
  if (c.size() != key.n) fail(ErrorKind::kInvariantViolation, "ad_decrypt: dimension mismatch");
  const Rational t = dot(c, key.normal) / key.scale;
  return t - floor(t);
}

int ad_decrypt_bit(const AdKeyPair& key, const RatVector& c, double tau) {
  if (!(tau > 0.0 && tau < 0.25)) fail(ErrorKind::kInvariantViolation, "ad_decrypt: tau must lie in (0, 1/4)");
  const Rational gamma = ad_gamma(key, c);
  const Rational t(tau);
  return (gamma < t || 1 - gamma < t) ? 0 : 1;
}

}  // namespace pqf
