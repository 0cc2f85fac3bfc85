#include <algorithm>

#include "pqf/reduction/reduction.hpp"
#include "pqf/solvers/solvers.hpp"

namespace pqf {

bool is_lagrange_reduced(const QuadraticForm& f) {
  if (f.dim() != 2) fail(ErrorKind::kInvariantViolation, "is_lagrange_reduced needs dimension 2");
  return f(0, 0) <= f(1, 1) && sgn(f(0, 1)) >= 0 && 2 * f(0, 1) <= f(0, 0);
}

bool is_gauss_ternary_reduced(const QuadraticForm& f) {
  if (f.dim() != 3) fail(ErrorKind::kInvariantViolation, "is_gauss_ternary_reduced needs dimension 3");
  const Rational &c11 = f(0, 0), &c22 = f(1, 1), &c33 = f(2, 2);
  const Rational &c12 = f(0, 1), &c13 = f(0, 2), &c23 = f(1, 2);
  return c11 <= c22 && c22 <= c33 &&
         sgn(c12) >= 0 && 2 * c12 <= c11 &&
         sgn(c13) >= 0 && 2 * c13 <= c11 &&
         2 * abs(c23) <= c22 &&
         -2 * c23 <= c11 + c22 - 2 * (c12 + c13);
}

bool is_minkowski_reduced(const QuadraticForm& f) {
  const std::size_t n = f.dim();
  require_dimension_at_most(n, 6, "is_minkowski_reduced");
  for (std::size_t j = 1; j < n; ++j)
    if (sgn(f(0, j)) < 0) return false;
  Rational bound = f(0, 0);
  for (std::size_t i = 1; i < n; ++i) bound = std::max(bound, f(i, i));
  // A violating z has F(z) < c_ii <= max diagonal, so this region is complete.
  for (const ShortVector& v : short_vectors(f, bound)) {
    Integer g = 0;
    for (std::size_t i = n; i-- > 0;) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.z[i].get_mpz_t());
      if (g == 1 && v.value < f(i, i)) return false;
    }
  }
  return true;
}

}  // namespace pqf
