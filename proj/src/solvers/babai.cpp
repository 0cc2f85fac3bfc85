#include "pqf/solvers/solvers.hpp"

namespace pqf {

CvpResult babai_round(const QuadraticForm& f, std::span<const Rational> target, const LllParams& p) {
  const std::size_t n = f.dim();
  if (target.size() != n) fail(ErrorKind::kInvariantViolation, "babai target has wrong length");
  const ReductionReport red = lll_reduce(f, p);
  const IntegerMatrix& u = red.transform.entries();
  // Coordinates t of the target in the reduced basis: p = t U.
  const RatVector t = row_times(target, to_rational(red.transform.inverse().entries()));
  IntVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = round_half_even(t[i]);
  CvpResult c;
  c.witness.assign(n, Integer(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c.witness[j] += x[i] * u(i, j);
  RatVector diff(n);
  for (std::size_t j = 0; j < n; ++j) diff[j] = c.witness[j] - target[j];
  c.dist_sq = f.evaluate(std::span<const Rational>(diff));
  return c;
}

CvpResult babai_round(const Basis& b, std::span<const Rational> w, const LllParams& p) {
  if (w.size() != b.dim()) fail(ErrorKind::kInvariantViolation, "babai target has wrong length");
  const RatVector coeffs = coefficients_of(b, w);
  return babai_round(gram_matrix(b), coeffs, p);
}

}  // namespace pqf
