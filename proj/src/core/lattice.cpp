#include "pqf/core/lattice.hpp"

#include <cmath>
#include <optional>
#include <string>

namespace pqf {

Basis::Basis(RationalMatrix rows) : rows_(std::move(rows)) {
  if (rows_.rows() == 0 || !rows_.square()) {
    fail(ErrorKind::kInvariantViolation, "basis must be a non-empty n x n matrix");
  }
  if (determinant(rows_) == 0) {
    fail(ErrorKind::kInvariantViolation, "basis rows are linearly dependent");
  }
}

Basis Basis::identity(std::size_t n) { return Basis(RationalMatrix::identity(n)); }

QuadraticForm::QuadraticForm(RationalMatrix gram) : gram_(std::move(gram)) {
  const std::size_t n = gram_.rows();
  if (n == 0 || !gram_.square()) {
    fail(ErrorKind::kInvariantViolation, "Gram matrix must be a non-empty n x n matrix");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gram_(i, j) != gram_(j, i)) {
        fail(ErrorKind::kInvariantViolation, "Gram matrix is not symmetric");
      }
  // Leading principal minors via the pivots of an LDL' elimination: the k-th
  // minor is the product of the first k pivots, so all minors are positive
  // exactly when all pivots are.
  RationalMatrix m = gram_;
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(m(k, k)) <= 0) {
      fail(ErrorKind::kInvariantViolation,
           "form is not positive definite (leading minor " + std::to_string(k + 1) + ")");
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
}

Rational QuadraticForm::evaluate(std::span<const Integer> z) const {
  RatVector x(z.begin(), z.end());
  return evaluate(std::span<const Rational>(x));
}

Rational QuadraticForm::evaluate(std::span<const Rational> x) const {
  const std::size_t n = dim();
  if (x.size() != n) fail(ErrorKind::kInvariantViolation, "form argument has wrong length");
  Rational s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    Rational row = gram_(i, i) * x[i];
    for (std::size_t j = i + 1; j < n; ++j) row += 2 * gram_(i, j) * x[j];
    s += x[i] * row;
  }
  return s;
}

UnimodularMatrix::UnimodularMatrix(IntegerMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || !entries_.square()) {
    fail(ErrorKind::kInvariantViolation, "unimodular matrix must be square");
  }
  Integer d = determinant(entries_);
  if (d != 1 && d != -1) {
    fail(ErrorKind::kInvariantViolation, "matrix is not unimodular (|det| != 1)");
  }
}

UnimodularMatrix UnimodularMatrix::identity(std::size_t n) {
  return UnimodularMatrix(IntegerMatrix::identity(n));
}

UnimodularMatrix UnimodularMatrix::inverse() const {
  RationalMatrix inv = pqf::inverse(to_rational(entries_));
  IntegerMatrix out(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) out(i, j) = inv(i, j).get_num();
  return UnimodularMatrix(std::move(out));
}

UnimodularMatrix operator*(const UnimodularMatrix& a, const UnimodularMatrix& b) {
  return UnimodularMatrix(a.entries_ * b.entries_);
}

QuadraticForm gram_matrix(const Basis& b) {
  const std::size_t n = b.dim();
  RationalMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      c(i, j) = dot(b.row(i), b.row(j));
      c(j, i) = c(i, j);
    }
  return QuadraticForm(std::move(c));
}

LatticeDeterminant lattice_determinant(const QuadraticForm& f) {
  LatticeDeterminant d;
  d.squared = determinant(f.gram());
  d.approx = std::sqrt(d.squared.get_d());
  return d;
}

LatticeDeterminant lattice_determinant(const Basis& b) {
  LatticeDeterminant d;
  Rational det = determinant(b.rows());
  d.squared = det * det;
  d.approx = std::fabs(det.get_d());
  return d;
}

GsoData gram_schmidt(const QuadraticForm& f) {
  const std::size_t n = f.dim();
  GsoData g{RationalMatrix::identity(n), RatVector(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rational s = f(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= g.mu(j, k) * g.mu(i, k) * g.star_norms_sq[k];
      g.mu(i, j) = s / g.star_norms_sq[j];
    }
    Rational b = f(i, i);
    for (std::size_t k = 0; k < i; ++k) b -= g.mu(i, k) * g.mu(i, k) * g.star_norms_sq[k];
    g.star_norms_sq[i] = b;
  }
  return g;
}

GsoData gram_schmidt(const Basis& b) { return gram_schmidt(gram_matrix(b)); }

Basis apply_unimodular(const Basis& b, const UnimodularMatrix& u) {
  if (u.dim() != b.dim()) fail(ErrorKind::kInvariantViolation, "unimodular matrix dimension mismatch");
  return Basis(to_rational(u.entries()) * b.rows());
}

QuadraticForm apply_unimodular(const QuadraticForm& f, const UnimodularMatrix& u) {
  if (u.dim() != f.dim()) fail(ErrorKind::kInvariantViolation, "unimodular matrix dimension mismatch");
  RationalMatrix ur = to_rational(u.entries());
  return QuadraticForm(ur * f.gram() * ur.transposed());
}

namespace {

// One Cholesky pass at a fixed working precision; empty result when a pivot
// stops being positive after rounding.
std::optional<RationalMatrix> cholesky_at(const QuadraticForm& f, unsigned bits) {
  const std::size_t n = f.dim();
  RationalMatrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational d = f(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (sgn(d) <= 0) return std::nullopt;
    l(j, j) = round_to_dyadic(sqrt_upper(d, bits + 2), bits);
    if (sgn(l(j, j)) <= 0) return std::nullopt;
    for (std::size_t i = j + 1; i < n; ++i) {
      Rational s = f(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = round_to_dyadic(s / l(j, j), bits);
    }
  }
  return l;
}

}  // namespace

Basis form_to_basis(const QuadraticForm& f, unsigned precision) {
  if (precision == 0) fail(ErrorKind::kInvariantViolation, "precision must be positive");
  Rational tolerance(1);
  mpz_mul_2exp(tolerance.get_den_mpz_t(), tolerance.get_den_mpz_t(), precision);
  tolerance.canonicalize();
  for (unsigned guard = 16; guard <= 16 * 64; guard += 16) {
    auto l = cholesky_at(f, precision + guard);
    if (!l) continue;
    if (determinant(*l) == 0) continue;
    Basis b(*l);
    QuadraticForm g = gram_matrix(b);
    bool ok = true;
    for (std::size_t i = 0; i < f.dim() && ok; ++i)
      for (std::size_t j = 0; j < f.dim() && ok; ++j)
        if (abs(g(i, j) - f(i, j)) > tolerance) ok = false;
    if (ok) return b;
  }
  fail(ErrorKind::kAlgorithmFailure, "form_to_basis: could not reach requested precision");
}

RatVector coefficients_of(const Basis& b, std::span<const Rational> w) {
  return row_times(w, inverse(b.rows()));
}

RatVector lattice_point(const Basis& b, std::span<const Integer> z) {
  return row_times(z, b.rows());
}

}  // namespace pqf
