#include "gso_engine.hpp"
#include "pqf/solvers/solvers.hpp"

namespace pqf {

QuadraticForm projected_form(const GsoData& g, std::size_t start) {
  const std::size_t n = g.star_norms_sq.size();
  const std::size_t m = n - start;
  RationalMatrix p(m, m);
  for (std::size_t j = start; j < n; ++j)
    for (std::size_t l = start; l <= j; ++l) {
      Rational s = 0;
      for (std::size_t k = start; k <= l; ++k) s += g.mu(j, k) * g.mu(l, k) * g.star_norms_sq[k];
      p(j - start, l - start) = s;
      p(l - start, j - start) = s;
    }
  return QuadraticForm(std::move(p));
}

UnimodularMatrix complete_to_unimodular(const IntVector& z) {
  const std::size_t m = z.size();
  // Column operations T with z T = e_1; the answer is T^-1.
  IntVector v = z;
  IntegerMatrix t = IntegerMatrix::identity(m);
  for (std::size_t j = 1; j < m; ++j) {
    if (v[j] == 0) continue;
    Integer g, s, r;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), r.get_mpz_t(), v[0].get_mpz_t(), v[j].get_mpz_t());
    const Integer a = v[0] / g;
    const Integer b = v[j] / g;
    for (std::size_t i = 0; i < m; ++i) {
      const Integer c0 = t(i, 0);
      const Integer cj = t(i, j);
      t(i, 0) = s * c0 + r * cj;
      t(i, j) = -b * c0 + a * cj;
    }
    v[0] = g;
    v[j] = 0;
  }
  if (v[0] == -1) {
    for (std::size_t i = 0; i < m; ++i) t(i, 0) = -t(i, 0);
    v[0] = 1;
  }
  if (v[0] != 1) fail(ErrorKind::kInvariantViolation, "complete_to_unimodular: vector is not primitive");
  return UnimodularMatrix(t).inverse();
}

ReductionReport kz_reduce(const QuadraticForm& f) {
  const std::size_t n = f.dim();
  require_dimension_at_most(n, 8, "kz_reduce");
  IntegerMatrix u = IntegerMatrix::identity(n);
  QuadraticForm cur = f;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const GsoData g = gram_schmidt(cur);
    const SvpResult s = svp_exact_uncapped(projected_form(g, i));
    // Keep a_i when its projection is already shortest.
    if (g.star_norms_sq[i] == s.length_sq) continue;
    const UnimodularMatrix w = complete_to_unimodular(s.witness);
    IntegerMatrix step = IntegerMatrix::identity(n);
    for (std::size_t r = 0; r < n - i; ++r)
      for (std::size_t c = 0; c < n - i; ++c) step(i + r, i + c) = w.entries()(r, c);
    u = step * u;
    cur = apply_unimodular(f, UnimodularMatrix(u));
  }
  detail::GsoEngine e(cur);
  for (std::size_t k = 1; k < n; ++k) e.size_reduce_row(k);
  ReductionReport r = detail::finish_report(f, e.transform() * u, n, {});
  r.certified.push_back({"korkin-zolotarev", is_kz_reduced(r.reduced_form).holds});
  return r;
}

ReductionReport kz_reduce(const Basis& b) {
  return detail::with_basis(kz_reduce(gram_matrix(b)), b);
}

ReducednessCheck is_kz_reduced(const QuadraticForm& f) {
  const std::size_t n = f.dim();
  require_dimension_at_most(n, 8, "is_kz_reduced");
  const GsoData g = gram_schmidt(f);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational shortest = svp_exact_uncapped(projected_form(g, i)).length_sq;
    if (g.star_norms_sq[i] != shortest) {
      return {false, i == 0 ? "shortest-first" : "projected-shortest", i + 1, i + 1,
              g.star_norms_sq[i] / shortest};
    }
  }
  // <pi_{i-1}(a_i), pi_{i-1}(a_j)> = mu_ji B_i.
  const Rational half(1, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (abs(g.mu(j, i)) > half) return {false, "projection-size", i + 1, j + 1, g.mu(j, i)};
  return {};
}

ReducednessCheck is_kz_reduced(const Basis& b) { return is_kz_reduced(gram_matrix(b)); }

}  // namespace pqf
