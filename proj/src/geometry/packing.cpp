#include <cmath>
#include <numbers>

#include "pqf/geometry/geometry.hpp"
#include "pqf/solvers/solvers.hpp"

namespace pqf {

double unit_ball_volume(std::size_t n) {
  const double h = static_cast<double>(n) / 2.0;
  return std::pow(std::numbers::pi, h) / std::tgamma(h + 1.0);
}

PackingReport packing_report(const QuadraticForm& f) {
  const std::size_t n = f.dim();
  require_dimension_at_most(n, 10, "packing_report");
  const SvpResult s = svp_exact_uncapped(f);
  PackingReport r;
  r.length_sq = s.length_sq;
  r.kissing_pairs = s.count_pairs;
  const double l = std::sqrt(s.length_sq.get_d());
  r.packing_radius = l / 2.0;
  const double det = std::sqrt(determinant(f.gram()).get_d());
  r.density = unit_ball_volume(n) * std::pow(r.packing_radius, static_cast<double>(n)) / det;
  return r;
}

PackingReport packing_report(const Basis& b) { return packing_report(gram_matrix(b)); }

}  // namespace pqf
