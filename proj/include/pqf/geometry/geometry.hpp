#pragma once

#include <cstdint>
#include <vector>

#include "pqf/core/lattice.hpp"

namespace pqf {

// Volume of the n-dimensional unit ball.
double unit_ball_volume(std::size_t n);

struct PackingReport {
  Rational length_sq;
  double packing_radius = 0.0;
  double density = 0.0;
  Integer kissing_pairs;
};

// dim <= 10.
PackingReport packing_report(const QuadraticForm& f);
PackingReport packing_report(const Basis& b);

struct CoveringReport {
  double covering_radius_lo = 0.0;
  double covering_radius_hi = 0.0;
  double density_lo = 0.0;
  double density_hi = 0.0;
  // Exact squared distance to the lattice at the best point found.
  Rational best_dist_sq;
  // That point, in coefficient coordinates of the input.
  RatVector best_point;
  std::uint64_t evaluations = 0;
};

// Branch and bound over cells of the fundamental parallelepiped, with seeded
// random probes mixed in; each evaluation is one exact closest-vector query.
// Brackets only tighten as the budget grows. dim <= 6.
CoveringReport covering_radius_estimate(const QuadraticForm& f, std::uint64_t budget,
                                        std::uint64_t seed);
CoveringReport covering_radius_estimate(const Basis& b, std::uint64_t budget, std::uint64_t seed);

struct RealBracket {
  double lo = 0.0;
  double hi = 0.0;
};

// 2 rho / l. dim <= 6.
RealBracket phi_ratio(const QuadraticForm& f, std::uint64_t budget, std::uint64_t seed);
RealBracket phi_ratio(const Basis& b, std::uint64_t budget, std::uint64_t seed);

// m(F)^n / det(C). dim <= 10.
Rational gamma_functional(const QuadraticForm& f);

struct PerfectionReport {
  bool perfect = false;
  std::size_t rank = 0;
  std::size_t unknowns = 0;
  Rational minimum;
  std::size_t minimal_pairs = 0;
};

// dim <= 8.
PerfectionReport is_perfect_form(const QuadraticForm& f);

struct VoronoiReport {
  bool holds = false;
  // Cell vertices in coefficient coordinates of the input, in boundary order.
  std::vector<RatVector> vertices;
  // Lattice vectors whose bisectors carry the facets.
  std::vector<IntVector> facet_vectors;
  Rational min_facet_dist_sq;
  Rational max_vertex_norm_sq;
  Rational length_sq;
  Rational covering_radius_sq;
};

// Dimension 2 only.
VoronoiReport dv_identities_check(const QuadraticForm& f);
VoronoiReport dv_identities_check(const Basis& b);

}  // namespace pqf
