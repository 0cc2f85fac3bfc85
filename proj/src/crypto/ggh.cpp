#include "pqf/crypto/ggh.hpp"

#include <cmath>

#include "pqf/core/random.hpp"

namespace pqf {

namespace {

double log_abs(const Rational& x) {
  // log|p/q| without overflowing double.
  long e_num = 0;
  long e_den = 0;
  const double n = mpz_get_d_2exp(&e_num, x.get_num_mpz_t());
  const double d = mpz_get_d_2exp(&e_den, x.get_den_mpz_t());
  return std::log(std::fabs(n)) - std::log(d) + static_cast<double>(e_num - e_den) * std::log(2.0);
}

Basis integer_basis(const IntegerMatrix& m) { return Basis(to_rational(m)); }

IntegerMatrix integer_rows(const Basis& b) {
  IntegerMatrix m(b.dim(), b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) m(i, j) = b.rows()(i, j).get_num();
  return m;
}

}  // namespace

double orthogonality_defect(const Basis& b) {
  double log_prod = 0.0;
  for (std::size_t i = 0; i < b.dim(); ++i) log_prod += 0.5 * log_abs(dot(b.row(i), b.row(i)));
  return std::exp(log_prod - log_abs(determinant(b.rows())));
}

Rational rounding_correction_radius(const Basis& b) {
  const RationalMatrix inv = inverse(b.rows());
  Rational worst = 0;
  for (std::size_t j = 0; j < b.dim(); ++j) {
    Rational col = 0;
    for (std::size_t i = 0; i < b.dim(); ++i) col += abs(inv(i, j));
    if (col > worst) worst = col;
  }
  return 1 / (2 * worst);
}

GghKeyPair ggh_keygen(std::uint64_t seed, const GghParams& params) {
  const std::size_t n = params.n;
  if (n < 2) fail(ErrorKind::kInvariantViolation, "ggh_keygen: n must be at least 2");
  if (params.k < 2) fail(ErrorKind::kInvariantViolation, "ggh_keygen: k must be at least 2");
  if (params.message_bound < 1) fail(ErrorKind::kInvariantViolation, "ggh_keygen: message bound must be positive");
  Rng root(seed);

  Rng good_rng = root.derive("ggh-good");
  IntegerMatrix a(n, n);
  double good_defect = 0.0;
  for (int attempt = 0;; ++attempt) {
    if (attempt == 1000) {
      fail(ErrorKind::kAlgorithmFailure, "ggh_keygen: no good basis below the defect threshold");
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        a(i, j) = good_rng.uniform_int(-1, 1) + (i == j ? params.k : 0);
    if (determinant(a) == 0) continue;
    good_defect = orthogonality_defect(integer_basis(a));
    if (good_defect < params.defect_threshold) break;
  }

  // U is a product of row operations r_i += c r_j, applied until B is skewed enough.
  Rng mix_rng = root.derive("ggh-mix");
  IntegerMatrix u = IntegerMatrix::identity(n);
  IntegerMatrix b = a;
  double bad_defect = good_defect;
  for (std::size_t ops = 0; ops < n * n || bad_defect <= params.defect_threshold; ++ops) {
    if (ops == 100000) fail(ErrorKind::kAlgorithmFailure, "ggh_keygen: mixing did not exceed the defect threshold");
    const auto i = static_cast<std::size_t>(mix_rng.uniform_int(0, static_cast<std::int64_t>(n) - 1));
    auto j = static_cast<std::size_t>(mix_rng.uniform_int(0, static_cast<std::int64_t>(n) - 2));
    if (j >= i) ++j;
    std::int64_t c = mix_rng.uniform_int(1, 2);
    if (mix_rng.next_u64() & 1) c = -c;
    for (std::size_t col = 0; col < n; ++col) {
      u(i, col) += c * u(j, col);
      b(i, col) += c * b(j, col);
    }
    bad_defect = orthogonality_defect(integer_basis(b));
  }

  Basis good = integer_basis(a);
  Rational radius = rounding_correction_radius(good);
  return GghKeyPair{params, std::move(good), integer_basis(b), UnimodularMatrix(u), good_defect,
                    bad_defect, std::move(radius)};
}

IntVector ggh_encrypt_with(const GghPublicKey& pub, const IntVector& m, const IntVector& v) {
  const std::size_t n = pub.bad_basis.dim();
  if (m.size() != n || v.size() != n) fail(ErrorKind::kInvariantViolation, "ggh_encrypt: dimension mismatch");
  for (const Integer& x : m) {
    if (abs(x) > pub.message_bound) fail(ErrorKind::kInvariantViolation, "ggh_encrypt: message entry out of bound");
  }
  const IntegerMatrix b = integer_rows(pub.bad_basis);
  IntVector c = v;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[j] += m[i] * b(i, j);
  return c;
}

IntVector ggh_encrypt(const GghPublicKey& pub, const IntVector& m, std::int64_t v_bound,
                      std::uint64_t seed) {
  if (v_bound < 0) fail(ErrorKind::kInvariantViolation, "ggh_encrypt: v_bound must be nonnegative");
  Rng rng = Rng(seed).derive("ggh-v");
  IntVector v(pub.bad_basis.dim());
  for (Integer& x : v) x = rng.uniform_int(-v_bound, v_bound);
  return ggh_encrypt_with(pub, m, v);
}

IntVector ggh_decode(const Basis& decoding, const GghPublicKey& pub, const IntVector& c) {
  const std::size_t n = decoding.dim();
  if (c.size() != n || pub.bad_basis.dim() != n) fail(ErrorKind::kInvariantViolation, "ggh_decode: dimension mismatch");
  const RatVector t = row_times(std::span<const Integer>(c), inverse(decoding.rows()));
  IntVector x(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Rational frac = t[j] - floor(t[j]);
    if (frac == Rational(1, 2)) fail(ErrorKind::kAlgorithmFailure, "ggh decryption failure: rounding tie");
    x[j] = round_half_even(t[j]);
  }
  const RatVector d = lattice_point(decoding, x);
  const RatVector m = row_times(std::span<const Rational>(d), inverse(pub.bad_basis.rows()));
  IntVector out(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[j].get_den() != 1) fail(ErrorKind::kAlgorithmFailure, "ggh decryption failure: non-integral message");
    if (abs(m[j].get_num()) > pub.message_bound) {
      fail(ErrorKind::kAlgorithmFailure, "ggh decryption failure: message entry out of bound");
    }
    out[j] = m[j].get_num();
  }
  return out;
}

IntVector ggh_decrypt(const GghKeyPair& key, const IntVector& c) {
  return ggh_decode(key.good_basis, key.public_key(), c);
}

}  // namespace pqf
