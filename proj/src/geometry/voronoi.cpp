#include <algorithm>
#include <array>

#include "pqf/geometry/geometry.hpp"
#include "pqf/reduction/reduction.hpp"
#include "pqf/solvers/solvers.hpp"

namespace pqf {

namespace {

using Point = std::array<Rational, 2>;

Rational bilinear(const QuadraticForm& f, const Point& a, const Point& b) {
  return a[0] * (f(0, 0) * b[0] + f(0, 1) * b[1]) + a[1] * (f(1, 0) * b[0] + f(1, 1) * b[1]);
}

// Bisector of o and z: points p with <p, z> = F(z)/2; negative means the o side.
Rational side(const QuadraticForm& f, const Point& p, const Point& z) {
  return bilinear(f, p, z) - bilinear(f, z, z) / 2;
}

std::vector<Point> clip(const std::vector<Point>& poly, const QuadraticForm& f, const Point& z) {
  std::vector<Point> out;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    const Point& a = poly[k];
    const Point& b = poly[(k + 1) % poly.size()];
    const Rational ga = side(f, a, z);
    const Rational gb = side(f, b, z);
    if (sgn(ga) <= 0) out.push_back(a);
    if ((sgn(ga) < 0 && sgn(gb) > 0) || (sgn(ga) > 0 && sgn(gb) < 0)) {
      const Rational t = ga / (ga - gb);
      out.push_back({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])});
    }
  }
  std::vector<Point> dedup;
  for (const Point& p : out)
    if (dedup.empty() || dedup.back() != p) dedup.push_back(p);
  while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
  return dedup;
}

Rational segment_dist_sq(const QuadraticForm& f, const Point& a, const Point& b) {
  const Point d{b[0] - a[0], b[1] - a[1]};
  const Rational dd = bilinear(f, d, d);
  Rational t = -bilinear(f, a, d) / dd;
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  const Point q{a[0] + t * d[0], a[1] + t * d[1]};
  return bilinear(f, q, q);
}

}  // namespace

VoronoiReport dv_identities_check(const QuadraticForm& input) {
  if (input.dim() != 2) fail(ErrorKind::kSizeCap, "dv_identities_check supports dimension 2 only");
  ReductionReport red = gauss_reduce(input);
  IntegerMatrix u = red.transform.entries();
  if (sgn(red.reduced_form(0, 1)) < 0) {
    u(1, 0) = -u(1, 0);
    u(1, 1) = -u(1, 1);
  }
  const QuadraticForm f = apply_unimodular(input, UnimodularMatrix(u));

  std::vector<Point> candidates;
  for (int x = -2; x <= 2; ++x)
    for (int y = -2; y <= 2; ++y)
      if (x != 0 || y != 0) candidates.push_back({Rational(x), Rational(y)});

  // Start from the strip intersection of the +-e_1 and +-e_2 bisectors.
  const RationalMatrix inv = inverse(f.gram());
  std::vector<Point> poly;
  for (auto [s1, s2] : {std::pair{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}) {
    const Rational r0 = s1 * f(0, 0) / 2;
    const Rational r1 = s2 * f(1, 1) / 2;
    poly.push_back({r0 * inv(0, 0) + r1 * inv(1, 0), r0 * inv(0, 1) + r1 * inv(1, 1)});
  }
  for (const Point& z : candidates) poly = clip(poly, f, z);

  VoronoiReport rep;
  const SvpResult s = svp_exact_uncapped(input);
  rep.length_sq = s.length_sq;
  bool first = true;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    const Point& a = poly[k];
    const Point& b = poly[(k + 1) % poly.size()];
    const Rational va = bilinear(f, a, a);
    if (first || va > rep.max_vertex_norm_sq) rep.max_vertex_norm_sq = va;
    const Rational dist = segment_dist_sq(f, a, b);
    if (first || dist < rep.min_facet_dist_sq) rep.min_facet_dist_sq = dist;
    first = false;
    for (const Point& z : candidates) {
      if (sgn(side(f, a, z)) == 0 && sgn(side(f, b, z)) == 0) {
        rep.facet_vectors.push_back({z[0].get_num() * u(0, 0) + z[1].get_num() * u(1, 0),
                                     z[0].get_num() * u(0, 1) + z[1].get_num() * u(1, 1)});
        break;
      }
    }
    rep.vertices.push_back({a[0] * u(0, 0) + a[1] * u(1, 0), a[0] * u(0, 1) + a[1] * u(1, 1)});
  }
  // Circumradius of the non-obtuse triangle o, a_1, a_2 of the reduced basis.
  const Rational c11 = f(0, 0), c22 = f(1, 1), c12 = f(0, 1);
  rep.covering_radius_sq = c11 * c22 * (c11 + c22 - 2 * c12) / (4 * determinant(f.gram()));
  rep.holds = 4 * rep.min_facet_dist_sq == rep.length_sq &&
              rep.max_vertex_norm_sq == rep.covering_radius_sq;
  return rep;
}

VoronoiReport dv_identities_check(const Basis& b) { return dv_identities_check(gram_matrix(b)); }

}  // namespace pqf
