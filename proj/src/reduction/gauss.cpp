#include <numeric>

#include "gso_engine.hpp"
#include "pqf/solvers/solvers.hpp"

namespace pqf {

ReductionReport gauss_reduce(const QuadraticForm& f) {
  if (f.dim() != 2) fail(ErrorKind::kInvariantViolation, "gauss_reduce needs a 2-dimensional input");
  Rational c11 = f(0, 0);
  Rational c12 = f(0, 1);
  Rational c22 = f(1, 1);
  IntegerMatrix u = IntegerMatrix::identity(2);
  std::uint64_t iterations = 0;
  for (;;) {
    ++iterations;
    if (c22 < c11) {
      const Rational before = c11;
      std::swap(c11, c22);
      u.swap_rows(0, 1);
      if (!(c11 < before)) fail(ErrorKind::kAlgorithmFailure, "gauss_reduce: |a_1| failed to decrease");
    }
    const Integer m = round_half_even(c12 / c11);
    if (m == 0) break;
    c22 += m * m * c11 - 2 * m * c12;
    c12 -= m * c11;
    for (std::size_t j = 0; j < 2; ++j) u(1, j) -= m * u(0, j);
  }
  return detail::finish_report(f, u, iterations, {{"gauss", true}});
}

ReductionReport gauss_reduce(const Basis& b) {
  return detail::with_basis(gauss_reduce(gram_matrix(b)), b);
}

namespace {

// gcd of the k x k minors of the first k rows of m.
Integer minor_gcd(const IntegerMatrix& m, std::size_t k) {
  const std::size_t n = m.cols();
  Integer g = 0;
  std::vector<std::size_t> cols(k);
  std::iota(cols.begin(), cols.end(), 0);
  for (;;) {
    IntegerMatrix sub(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) sub(r, c) = m(r, cols[c]);
    Integer d = determinant(sub);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    std::size_t idx = k;
    while (idx > 0 && cols[idx - 1] == n - k + idx - 1) --idx;
    if (idx == 0) break;
    ++cols[idx - 1];
    for (std::size_t t = idx; t < k; ++t) cols[t] = cols[t - 1] + 1;
  }
  return g;
}

}  // namespace

ReductionReport minkowski_reduce(const QuadraticForm& input) {
  const std::size_t n = input.dim();
  require_dimension_at_most(n, 6, "minkowski_reduce");
  const ReductionReport pre = lll_reduce(input, LllParams::classical());
  const QuadraticForm& f = pre.reduced_form;
  IntegerMatrix u(n, n);
  // Unit vectors stay admissible at every step, so this radius always suffices.
  Rational bound = f(0, 0);
  for (std::size_t i = 1; i < n; ++i) bound = std::max(bound, f(i, i));
  // Candidates come sorted by value, then lexicographically.
  const std::vector<ShortVector> candidates = short_vectors(f, bound);
  for (std::size_t k = 0; k < n; ++k) {
    bool placed = false;
    for (const ShortVector& v : candidates) {
      for (std::size_t c = 0; c < n; ++c) u(k, c) = v.z[c];
      if (minor_gcd(u, k + 1) == 1) {
        placed = true;
        break;
      }
    }
    if (!placed) fail(ErrorKind::kAlgorithmFailure, "minkowski_reduce: no primitive extension found");
  }
  const QuadraticForm greedy = apply_unimodular(f, UnimodularMatrix(u));
  // Sign flips of a_2..a_n make c_1j >= 0 without changing any c_ii.
  IntegerMatrix flips = IntegerMatrix::identity(n);
  for (std::size_t j = 1; j < n; ++j)
    if (sgn(greedy(0, j)) < 0) flips(j, j) = -1;
  ReductionReport r =
      detail::finish_report(input, flips * u * pre.transform.entries(), n, {});
  r.certified.push_back({"minkowski", is_minkowski_reduced(r.reduced_form)});
  return r;
}

}  // namespace pqf
