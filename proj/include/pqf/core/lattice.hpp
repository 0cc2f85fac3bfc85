#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pqf/core/matrix.hpp"
#include "pqf/core/rational.hpp"

namespace pqf {

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// An ordered list of n linearly independent rational vectors in Q^n.
/// Row i is the basis vector a_i; the lattice is { zA : z in Z^n }.
class Basis {
 public:
  /// Throws kInvariantViolation unless the matrix is square, non-empty and
  /// non-singular.
  explicit Basis(RationalMatrix rows);

  static Basis identity(std::size_t n);

  std::size_t dim() const { return rows_.rows(); }
  const RationalMatrix& rows() const { return rows_; }
  std::span<const Rational> row(std::size_t i) const { return rows_.row(i); }

  friend bool operator==(const Basis&, const Basis&) = default;

 private:
  RationalMatrix rows_;
};

/// A positive definite quadratic form F(x) = x C x' given by its symmetric
/// Gram matrix C.
class QuadraticForm {
 public:
  /// Throws kInvariantViolation unless C is square, symmetric and every
  /// leading principal minor is positive.
  explicit QuadraticForm(RationalMatrix gram);

  std::size_t dim() const { return gram_.rows(); }
  const RationalMatrix& gram() const { return gram_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return gram_(i, j); }

  Rational evaluate(std::span<const Integer> z) const;
  Rational evaluate(std::span<const Rational> x) const;

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  RationalMatrix gram_;
};

/// Integer matrix with determinant +-1.
class UnimodularMatrix {
 public:
  explicit UnimodularMatrix(IntegerMatrix entries);

  static UnimodularMatrix identity(std::size_t n);

  std::size_t dim() const { return entries_.rows(); }
  const IntegerMatrix& entries() const { return entries_; }

  UnimodularMatrix inverse() const;

  friend UnimodularMatrix operator*(const UnimodularMatrix& a, const UnimodularMatrix& b);
  friend bool operator==(const UnimodularMatrix&, const UnimodularMatrix&) = default;

 private:
  IntegerMatrix entries_;
};

/// Gram-Schmidt data: mu(i, j) for j < i (the diagonal is 1 and the upper
/// triangle 0) and the squared norms of the orthogonalised vectors.
struct GsoData {
  RationalMatrix mu;
  RatVector star_norms_sq;
};

/// det(Lambda)^2 exactly, plus a float view of det(Lambda).
struct LatticeDeterminant {
  Rational squared;
  double approx = 0.0;
};

QuadraticForm gram_matrix(const Basis& b);

LatticeDeterminant lattice_determinant(const Basis& b);
LatticeDeterminant lattice_determinant(const QuadraticForm& f);

GsoData gram_schmidt(const Basis& b);
GsoData gram_schmidt(const QuadraticForm& f);

Basis apply_unimodular(const Basis& b, const UnimodularMatrix& u);
/// The equivalent form U C U'.
QuadraticForm apply_unimodular(const QuadraticForm& f, const UnimodularMatrix& u);

/// A basis A with AA' = C up to 2^-precision entrywise; entries are dyadic
/// rationals.
Basis form_to_basis(const QuadraticForm& f, unsigned precision);

/// Coefficients p with w = pA.
RatVector coefficients_of(const Basis& b, std::span<const Rational> w);

/// The point zA for integer or rational coefficient vectors.
RatVector lattice_point(const Basis& b, std::span<const Integer> z);

}  // namespace pqf
