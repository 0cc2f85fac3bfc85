#include <algorithm>
#include <string>

#include "gso_engine.hpp"

namespace pqf {

namespace detail {

GsoEngine::GsoEngine(const QuadraticForm& f) : u_(IntegerMatrix::identity(f.dim())) {
  GsoData g = gram_schmidt(f);
  mu_ = std::move(g.mu);
  b_ = std::move(g.star_norms_sq);
}

bool GsoEngine::reduce_pair(std::size_t k, std::size_t l) {
  const Integer q = round_half_even(mu_(k, l));
  if (q == 0) return false;
  for (std::size_t c = 0; c < dim(); ++c) u_(k, c) -= q * u_(l, c);
  mu_(k, l) -= q;
  for (std::size_t i = 0; i < l; ++i) mu_(k, i) -= q * mu_(l, i);
  return true;
}

void GsoEngine::swap_adjacent(std::size_t k) {
  const std::size_t n = dim();
  const Rational m = mu_(k, k - 1);
  const Rational bk = b_[k] + m * m * b_[k - 1];
  mu_(k, k - 1) = m * b_[k - 1] / bk;
  b_[k] = b_[k - 1] * b_[k] / bk;
  b_[k - 1] = bk;
  u_.swap_rows(k - 1, k);
  for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu_(k - 1, j), mu_(k, j));
  for (std::size_t i = k + 1; i < n; ++i) {
    const Rational t = mu_(i, k);
    mu_(i, k) = mu_(i, k - 1) - m * t;
    mu_(i, k - 1) = t + mu_(k, k - 1) * mu_(i, k);
  }
}

ReductionReport finish_report(const QuadraticForm& f, const IntegerMatrix& u,
                              std::uint64_t iterations,
                              std::vector<Certification> certified) {
  UnimodularMatrix t(u);
  QuadraticForm g = apply_unimodular(f, t);
  return ReductionReport{std::move(g), std::nullopt, std::move(t), iterations, std::move(certified)};
}

ReductionReport with_basis(ReductionReport r, const Basis& b) {
  r.reduced_basis = apply_unimodular(b, r.transform);
  return r;
}

}  // namespace detail

namespace {

bool lll_condition_holds(const detail::GsoEngine& e, std::size_t i, const LllParams& p,
                         const Rational& sigma) {
  if (p.mode == LllMode::kPaperSigma) return e.star(i) >= sigma * e.star(i - 1);
  const Rational& m = e.mu(i, i - 1);
  return e.star(i) >= (p.delta - m * m) * e.star(i - 1);
}

std::string mode_name(LllMode m) {
  return m == LllMode::kPaperSigma ? "paper-sigma" : "classical-lovasz";
}

}  // namespace

LllParams LllParams::paper_sigma() {
  LllParams p;
  p.mode = LllMode::kPaperSigma;
  return p;
}

LllParams LllParams::classical(Rational delta) {
  LllParams p;
  p.mode = LllMode::kClassicalLovasz;
  p.delta = std::move(delta);
  return p;
}

Rational LllParams::effective_sigma(std::size_t n) const {
  return sigma ? *sigma : default_sigma(n);
}

Rational default_sigma(std::size_t n) {
  if (n < 2) return Rational(1, 4);
  // Least k with (k / 2^64)^(n-1) >= (3/4)^n.
  Integer rhs;
  mpz_ui_pow_ui(rhs.get_mpz_t(), 3, n);
  mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), 64 * (n - 1));
  Integer four_n;
  mpz_ui_pow_ui(four_n.get_mpz_t(), 4, n);
  Integer lo = 0;
  Integer hi = 1;
  hi <<= 64;
  while (lo < hi) {
    Integer mid = (lo + hi) / 2;
    Integer lhs;
    mpz_pow_ui(lhs.get_mpz_t(), mid.get_mpz_t(), n - 1);
    if (lhs * four_n >= rhs) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  Rational frac(lo);
  mpz_mul_2exp(frac.get_den_mpz_t(), frac.get_den_mpz_t(), 64);
  frac.canonicalize();
  return Rational(1, 4) + frac;
}

bool ReductionReport::all_certified() const {
  return std::all_of(certified.begin(), certified.end(),
                     [](const Certification& c) { return c.holds; });
}

ReductionReport size_reduce(const QuadraticForm& f) {
  detail::GsoEngine e(f);
  for (std::size_t k = 1; k < e.dim(); ++k) e.size_reduce_row(k);
  return detail::finish_report(f, e.transform(), 1, {{"size-reduced", true}});
}

ReductionReport size_reduce(const Basis& b) {
  return detail::with_basis(size_reduce(gram_matrix(b)), b);
}

ReductionReport lll_reduce(const QuadraticForm& f, const LllParams& p) {
  if (p.max_iterations == 0) fail(ErrorKind::kInvariantViolation, "max_iterations must be >= 1");
  const std::size_t n = f.dim();
  const Rational sigma = p.effective_sigma(n);
  if (p.mode == LllMode::kPaperSigma && (sigma <= Rational(1, 4) || sigma >= 1) && n >= 2) {
    fail(ErrorKind::kInvariantViolation, "sigma must lie in (1/4, 1)");
  }
  if (p.mode == LllMode::kClassicalLovasz && (p.delta <= Rational(1, 4) || p.delta > 1)) {
    fail(ErrorKind::kInvariantViolation, "delta must lie in (1/4, 1]");
  }
  detail::GsoEngine e(f);
  std::uint64_t iterations = 0;
  std::size_t i = 1;
  while (i < n) {
    if (++iterations > p.max_iterations) {
      fail(ErrorKind::kAlgorithmFailure,
           "lll_reduce: iteration cap " + std::to_string(p.max_iterations) + " exceeded (" +
               mode_name(p.mode) + " mode)");
    }
    e.size_reduce_row(i);
    if (lll_condition_holds(e, i, p, sigma)) {
      ++i;
    } else {
      e.swap_adjacent(i);
      i = std::max<std::size_t>(i - 1, 1);
    }
  }
  ReductionReport r = detail::finish_report(f, e.transform(), iterations, {});
  const ReducednessCheck c = is_lll_reduced(r.reduced_form, p);
  r.certified.push_back({mode_name(p.mode), c.holds});
  return r;
}

ReductionReport lll_reduce(const Basis& b, const LllParams& p) {
  return detail::with_basis(lll_reduce(gram_matrix(b), p), b);
}

ReducednessCheck is_size_reduced(const QuadraticForm& f) {
  GsoData g = gram_schmidt(f);
  const Rational half(1, 2);
  for (std::size_t i = 1; i < f.dim(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (abs(g.mu(i, j)) > half) return {false, "size", i + 1, j + 1, g.mu(i, j)};
  return {};
}

ReducednessCheck is_lll_reduced(const QuadraticForm& f, const LllParams& p) {
  ReducednessCheck size = is_size_reduced(f);
  if (!size.holds) return size;
  GsoData g = gram_schmidt(f);
  const Rational sigma = p.effective_sigma(f.dim());
  for (std::size_t i = 1; i < f.dim(); ++i) {
    const Rational& b0 = g.star_norms_sq[i - 1];
    const Rational& b1 = g.star_norms_sq[i];
    if (p.mode == LllMode::kPaperSigma) {
      if (b1 < sigma * b0) return {false, "sigma", i + 1, i, b1 / b0};
    } else {
      const Rational& m = g.mu(i, i - 1);
      if (b1 < (p.delta - m * m) * b0) return {false, "lovasz", i + 1, i, b1 / b0 + m * m};
    }
  }
  return {};
}

ReducednessCheck is_lll_reduced(const Basis& b, const LllParams& p) {
  return is_lll_reduced(gram_matrix(b), p);
}

}  // namespace pqf
