#include <algorithm>
#include <cmath>
#include <functional>

#include "pqf/solvers/solvers.hpp"

namespace pqf {

namespace {

// Integers x with (x - c)^2 <= t; empty when lo > hi.
std::pair<Integer, Integer> integer_window(const Rational& c, const Rational& t) {
  const Integer r = round_half_even(c);
  auto inside = [&](const Integer& x) {
    const Rational d = x - c;
    return d * d <= t;
  };
  if (!inside(r)) return {Integer(1), Integer(0)};
  const double width = std::sqrt(std::max(0.0, t.get_d()));
  Integer lo(std::floor(c.get_d() - width));
  Integer hi(std::ceil(c.get_d() + width));
  if (lo > r) lo = r;
  if (hi < r) hi = r;
  if (inside(lo)) {
    while (inside(lo - 1)) --lo;
  } else {
    while (!inside(lo)) ++lo;
  }
  if (inside(hi)) {
    while (inside(hi + 1)) ++hi;
  } else {
    while (!inside(hi)) --hi;
  }
  return {lo, hi};
}

// Depth-first enumeration of F'(x - p') <= bound on an LLL-reduced form F',
// last coordinate first. Without a target, x runs over one representative
// of each nonzero +-pair. The visitor may shrink the bound.
class Enumerator {
 public:
  using Visitor = std::function<void(const IntVector&, const Rational&, Rational&)>;

  Enumerator(const GsoData& reduced_gso, std::optional<RatVector> target)
      : g_(reduced_gso), n_(reduced_gso.star_norms_sq.size()), target_(std::move(target)),
        x_(n_), y_(n_) {}

  void run(Rational& bound, const Visitor& visit) { descend(n_, 0, bound, visit, true); }

 private:
  void descend(std::size_t level, const Rational& partial, Rational& bound, const Visitor& visit,
               bool all_zero_above) {
    if (level == 0) {
      if (!target_ && all_zero_above) return;
      visit(x_, partial, bound);
      return;
    }
    const std::size_t i = level - 1;
    Rational d = 0;
    for (std::size_t j = i + 1; j < n_; ++j) d += g_.mu(j, i) * y_[j];
    const Rational p = target_ ? (*target_)[i] : Rational(0);
    const Rational c = p - d;
    const Rational& bi = g_.star_norms_sq[i];
    auto [lo, hi] = integer_window(c, (bound - partial) / bi);
    if (!target_ && all_zero_above && lo < 0) lo = 0;
    for (Integer x = lo; x <= hi; ++x) {
      const Rational e = x - c;
      const Rational value = partial + bi * e * e;
      if (value > bound) {
        if (x > c) break;
        continue;
      }
      x_[i] = x;
      y_[i] = x - p;
      descend(i, value, bound, visit, all_zero_above && x == 0);
    }
    x_[i] = 0;
    y_[i] = 0;
  }

  const GsoData& g_;
  std::size_t n_;
  std::optional<RatVector> target_;
  IntVector x_;
  RatVector y_;
};

IntVector times(const IntVector& x, const IntegerMatrix& u) {
  IntVector z(u.cols());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < u.cols(); ++j) z[j] += x[i] * u(i, j);
  }
  return z;
}

void sign_normalize(IntVector& z) {
  for (const Integer& v : z) {
    if (v == 0) continue;
    if (v < 0)
      for (Integer& w : z) w = -w;
    return;
  }
}

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

ReductionReport preprocess(const QuadraticForm& f) {
  return lll_reduce(f, LllParams::classical(Rational(99, 100)));
}

}  // namespace

std::vector<ShortVector> short_vectors(const QuadraticForm& f, const Rational& bound,
                                       std::size_t max_count) {
  const ReductionReport pre = preprocess(f);
  const GsoData g = gram_schmidt(pre.reduced_form);
  Enumerator e(g, std::nullopt);
  std::vector<ShortVector> out;
  Rational r = bound;
  e.run(r, [&](const IntVector& x, const Rational& value, Rational&) {
    if (out.size() >= max_count) {
      fail(ErrorKind::kSizeCap, "short_vectors: more than " + std::to_string(max_count) + " vectors");
    }
    IntVector z = times(x, pre.transform.entries());
    sign_normalize(z);
    out.push_back({std::move(z), value});
  });
  std::sort(out.begin(), out.end(), [](const ShortVector& a, const ShortVector& b) {
    if (a.value != b.value) return a.value < b.value;
    return lex_less(a.z, b.z);
  });
  return out;
}

SvpResult svp_exact_uncapped(const QuadraticForm& f) {
  const ReductionReport pre = preprocess(f);
  const QuadraticForm& g = pre.reduced_form;
  Rational bound = g(0, 0);
  for (std::size_t i = 1; i < g.dim(); ++i) bound = std::min(bound, g(i, i));
  std::vector<IntVector> best;
  const GsoData gso = gram_schmidt(g);
  Enumerator e(gso, std::nullopt);
  e.run(bound, [&](const IntVector& x, const Rational& value, Rational& r) {
    if (value < r) {
      r = value;
      best.clear();
    }
    best.push_back(x);
  });
  SvpResult s;
  s.length_sq = bound;
  s.count_pairs = static_cast<unsigned long>(best.size());
  for (const IntVector& x : best) {
    IntVector z = times(x, pre.transform.entries());
    sign_normalize(z);
    if (s.witness.empty() || lex_less(z, s.witness)) s.witness = std::move(z);
  }
  return s;
}

SvpResult svp_exact(const QuadraticForm& f) {
  require_dimension_at_most(f.dim(), 12, "svp_exact");
  return svp_exact_uncapped(f);
}

SvpResult svp_exact(const Basis& b) { return svp_exact(gram_matrix(b)); }

std::vector<IntVector> enumerate_min_vectors(const QuadraticForm& f) {
  require_dimension_at_most(f.dim(), 10, "enumerate_min_vectors");
  const Rational m = svp_exact_uncapped(f).length_sq;
  std::vector<IntVector> out;
  for (ShortVector& v : short_vectors(f, m)) out.push_back(std::move(v.z));
  return out;
}

std::vector<IntVector> enumerate_min_vectors(const Basis& b) {
  return enumerate_min_vectors(gram_matrix(b));
}

struct CvpOracle::Impl {
  QuadraticForm reduced;
  IntegerMatrix transform;
  RationalMatrix inverse;
  GsoData gso;
};

CvpOracle::CvpOracle(const QuadraticForm& f) {
  ReductionReport pre = preprocess(f);
  RationalMatrix inv = to_rational(pre.transform.inverse().entries());
  GsoData g = gram_schmidt(pre.reduced_form);
  impl_ = std::make_shared<const Impl>(
      Impl{pre.reduced_form, pre.transform.entries(), std::move(inv), std::move(g)});
}

std::size_t CvpOracle::dim() const { return impl_->reduced.dim(); }

CvpResult CvpOracle::closest(std::span<const Rational> target) const {
  const std::size_t n = dim();
  if (target.size() != n) fail(ErrorKind::kInvariantViolation, "cvp target has wrong length");
  const RatVector t = row_times(target, impl_->inverse);
  // Babai's rounding point gives the starting radius.
  RatVector d0(n);
  for (std::size_t i = 0; i < n; ++i) d0[i] = round_half_even(t[i]) - t[i];
  Rational bound = impl_->reduced.evaluate(std::span<const Rational>(d0));
  std::vector<IntVector> best;
  Enumerator e(impl_->gso, t);
  e.run(bound, [&](const IntVector& x, const Rational& value, Rational& r) {
    if (value < r) {
      r = value;
      best.clear();
    }
    best.push_back(x);
  });
  CvpResult c;
  c.dist_sq = bound;
  for (const IntVector& x : best) {
    IntVector z = times(x, impl_->transform);
    if (c.witness.empty() || lex_less(z, c.witness)) c.witness = std::move(z);
  }
  return c;
}

CvpResult cvp_exact_uncapped(const QuadraticForm& f, std::span<const Rational> target) {
  if (target.size() != f.dim()) fail(ErrorKind::kInvariantViolation, "cvp target has wrong length");
  return CvpOracle(f).closest(target);
}

CvpResult cvp_exact(const QuadraticForm& f, std::span<const Rational> target) {
  require_dimension_at_most(f.dim(), 12, "cvp_exact");
  return cvp_exact_uncapped(f, target);
}

CvpResult cvp_exact(const Basis& b, std::span<const Rational> w) {
  require_dimension_at_most(b.dim(), 12, "cvp_exact");
  if (w.size() != b.dim()) fail(ErrorKind::kInvariantViolation, "cvp target has wrong length");
  const RatVector p = coefficients_of(b, w);
  return cvp_exact_uncapped(gram_matrix(b), p);
}

Rational hermite_constant_power(std::size_t n) {
  static const Rational table[] = {Rational(1),     Rational(4, 3), Rational(2),  Rational(4),
                                   Rational(8),     Rational(64, 3), Rational(64), Rational(256)};
  if (n < 1 || n > 8) fail(ErrorKind::kSizeCap, "Hermite constants are tabulated for n <= 8");
  return table[n - 1];
}

bool minkowski_length_check(const QuadraticForm& f) {
  const std::size_t n = f.dim();
  require_dimension_at_most(n, 8, "minkowski_length_check");
  const Rational l2 = svp_exact_uncapped(f).length_sq;
  Rational lhs = 1;
  for (std::size_t i = 0; i < n; ++i) lhs *= l2;
  return lhs <= hermite_constant_power(n) * determinant(f.gram());
}

bool minkowski_length_check(const Basis& b) { return minkowski_length_check(gram_matrix(b)); }

}  // namespace pqf
