#include "pqf/geometry/geometry.hpp"
#include "pqf/solvers/solvers.hpp"

namespace pqf {

Rational gamma_functional(const QuadraticForm& f) {
  const std::size_t n = f.dim();
  require_dimension_at_most(n, 10, "gamma_functional");
  const Rational m = svp_exact_uncapped(f).length_sq;
  Rational p = 1;
  for (std::size_t i = 0; i < n; ++i) p *= m;
  return p / determinant(f.gram());
}

PerfectionReport is_perfect_form(const QuadraticForm& f) {
  const std::size_t n = f.dim();
  require_dimension_at_most(n, 8, "is_perfect_form");
  const std::vector<IntVector> mins = enumerate_min_vectors(f);
  PerfectionReport r;
  r.minimum = svp_exact_uncapped(f).length_sq;
  r.minimal_pairs = mins.size();
  r.unknowns = n * (n + 1) / 2;
  // F(z) = sum_a c_aa z_a^2 + sum_{a<b} 2 c_ab z_a z_b is linear in the c's.
  RationalMatrix rows(mins.size(), r.unknowns);
  for (std::size_t k = 0; k < mins.size(); ++k) {
    const IntVector& z = mins[k];
    std::size_t col = 0;
    for (std::size_t a = 0; a < n; ++a) rows(k, col++) = z[a] * z[a];
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) rows(k, col++) = 2 * z[a] * z[b];
  }
  r.rank = mins.empty() ? 0 : rank(rows);
  r.perfect = r.rank == r.unknowns;
  return r;
}

}  // namespace pqf
