#include <cmath>
#include <queue>

#include "pqf/core/random.hpp"
#include "pqf/geometry/geometry.hpp"
#include "pqf/solvers/solvers.hpp"

namespace pqf {

namespace {

constexpr double kUp = 1.0 + 1e-14;
constexpr double kDown = 1.0 - 1e-14;

struct Cell {
  RatVector center;
  unsigned level = 0;  // side 2^-level
  double ub = 0.0;
  std::uint64_t order = 0;
};

struct CellLess {
  bool operator()(const Cell& a, const Cell& b) const {
    if (a.ub != b.ub) return a.ub < b.ub;
    return a.order > b.order;
  }
};

Rational dyadic(unsigned level) {
  Rational h(1);
  mpz_mul_2exp(h.get_den_mpz_t(), h.get_den_mpz_t(), level);
  h.canonicalize();
  return h;
}

}  // namespace

CoveringReport covering_radius_estimate(const QuadraticForm& input, std::uint64_t budget,
                                        std::uint64_t seed) {
  const std::size_t n = input.dim();
  require_dimension_at_most(n, 6, "covering_radius_estimate");
  if (budget == 0) fail(ErrorKind::kInvariantViolation, "covering budget must be positive");
  const ReductionReport red = lll_reduce(input, LllParams::classical(Rational(99, 100)));
  const QuadraticForm& f = red.reduced_form;
  const CvpOracle oracle(f);

  // Any point of a cell of side h lies within (h/2) sqrt(max_s F(s)) of its
  // centre, s over the sign vectors.
  Rational corner_sq = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    RatVector s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1 ? 1 : -1;
    corner_sq = std::max(corner_sq, f.evaluate(std::span<const Rational>(s)));
  }
  const double corner = std::sqrt(corner_sq.get_d()) * kUp;

  CoveringReport rep;
  Rng rng = Rng(seed).derive("covering-probes");
  std::uint64_t order = 0;
  RatVector best_point;

  auto evaluate = [&](const RatVector& p) {
    ++rep.evaluations;
    Rational d = oracle.closest(p).dist_sq;
    if (best_point.empty() || d > rep.best_dist_sq) {
      rep.best_dist_sq = d;
      best_point = p;
    }
    return d;
  };
  auto probe = [&]() {
    RatVector p(n);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = Rational(static_cast<long>(rng.uniform_int(0, (std::int64_t{1} << 40) - 1)));
      p[i] /= Rational(Integer(1) << 40);
    }
    evaluate(p);
  };

  std::priority_queue<Cell, std::vector<Cell>, CellLess> heap;
  {
    Cell root{RatVector(n, Rational(1, 2)), 0, 0.0, order++};
    const Rational d = evaluate(root.center);
    root.ub = std::sqrt(d.get_d()) * kUp + corner / 2.0;
    heap.push(std::move(root));
  }
  const std::uint64_t children = std::uint64_t{1} << n;
  while (rep.evaluations < budget) {
    const double lo = std::sqrt(rep.best_dist_sq.get_d()) * kDown;
    if (heap.top().ub <= lo * (1.0 + 1e-12)) break;
    Cell parent = heap.top();
    heap.pop();
    const unsigned level = parent.level + 1;
    const Rational quarter = dyadic(level + 1);
    const double reach = corner * std::ldexp(1.0, -static_cast<int>(level)) / 2.0;
    for (std::uint64_t mask = 0; mask < children; ++mask) {
      Cell child{parent.center, level, parent.ub, order++};
      for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1) {
          child.center[i] += quarter;
        } else {
          child.center[i] -= quarter;
        }
      }
      // Children left unevaluated keep the parent's bound.
      if (rep.evaluations < budget) {
        const Rational d = evaluate(child.center);
        child.ub = std::min(parent.ub, std::sqrt(d.get_d()) * kUp + reach);
        if (rep.evaluations % 10 == 0 && rep.evaluations < budget) probe();
      }
      heap.push(std::move(child));
    }
  }

  const double lo = std::sqrt(rep.best_dist_sq.get_d()) * kDown;
  rep.covering_radius_lo = lo;
  rep.covering_radius_hi = std::max(heap.top().ub, std::sqrt(rep.best_dist_sq.get_d()) * kUp);
  const double det = std::sqrt(determinant(f.gram()).get_d());
  const double omega = unit_ball_volume(n);
  const double nn = static_cast<double>(n);
  rep.density_lo = omega * std::pow(rep.covering_radius_lo, nn) / det * kDown;
  rep.density_hi = omega * std::pow(rep.covering_radius_hi, nn) / det * kUp;
  rep.best_point = row_times(std::span<const Rational>(best_point), to_rational(red.transform.entries()));
  return rep;
}

CoveringReport covering_radius_estimate(const Basis& b, std::uint64_t budget, std::uint64_t seed) {
  return covering_radius_estimate(gram_matrix(b), budget, seed);
}

RealBracket phi_ratio(const QuadraticForm& f, std::uint64_t budget, std::uint64_t seed) {
  require_dimension_at_most(f.dim(), 6, "phi_ratio");
  const CoveringReport c = covering_radius_estimate(f, budget, seed);
  const double l = std::sqrt(svp_exact_uncapped(f).length_sq.get_d());
  return {2.0 * c.covering_radius_lo / l * kDown, 2.0 * c.covering_radius_hi / l * kUp};
}

RealBracket phi_ratio(const Basis& b, std::uint64_t budget, std::uint64_t seed) {
  return phi_ratio(gram_matrix(b), budget, seed);
}

}  // namespace pqf
