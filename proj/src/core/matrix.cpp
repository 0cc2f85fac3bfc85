#include "pqf/core/matrix.hpp"

namespace pqf {

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

Rational determinant(const RationalMatrix& input) {
  if (!input.square()) fail(ErrorKind::kInvariantViolation, "determinant of non-square matrix");
  RationalMatrix m = input;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      m.swap_rows(pivot, col);
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      Rational f = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

Integer determinant(const IntegerMatrix& m) {
  Rational d = determinant(to_rational(m));
  return d.get_num();
}

std::size_t rank(RationalMatrix m) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, r);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      Rational f = m(i, col) / m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(i, c) -= f * m(r, c);
    }
    ++r;
  }
  return r;
}

RationalMatrix inverse(const RationalMatrix& input) {
  if (!input.square()) fail(ErrorKind::kInvariantViolation, "inverse of non-square matrix");
  const std::size_t n = input.rows();
  RationalMatrix a = input;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) fail(ErrorKind::kInvariantViolation, "matrix is singular");
    a.swap_rows(pivot, col);
    inv.swap_rows(pivot, col);
    Rational p = a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) /= p;
      inv(col, c) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      Rational f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

std::vector<Rational> row_times(std::span<const Rational> v, const RationalMatrix& m) {
  if (v.size() != m.rows()) fail(ErrorKind::kInvariantViolation, "vector/matrix size mismatch");
  std::vector<Rational> out(m.cols(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

std::vector<Rational> row_times(std::span<const Integer> v, const RationalMatrix& m) {
  std::vector<Rational> q(v.begin(), v.end());
  return row_times(q, m);
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) fail(ErrorKind::kInvariantViolation, "dot product size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace pqf
