#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "pqf/core/catalog.hpp"
#include "pqf/solvers/solvers.hpp"

using namespace pqf;

namespace {

Basis rows(std::initializer_list<std::initializer_list<Rational>> r) { return Basis(RationalMatrix(r)); }

IntVector to_int(const std::vector<std::int64_t>& v) { return IntVector(v.begin(), v.end()); }

RatVector random_target(std::mt19937_64& g, std::size_t n, int span) {
  std::uniform_int_distribution<int> num(-span * 12, span * 12);
  RatVector t(n);
  for (auto& v : t) v = Rational(num(g), 12);
  for (auto& v : t) v.canonicalize();
  return t;
}

}  // namespace

TEST(Svp, IntegerLattices) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const SvpResult s = svp_exact(Basis::identity(n));
    EXPECT_EQ(s.length_sq, 1);
    EXPECT_EQ(s.count_pairs, Integer(n));
  }
}

TEST(Svp, RootLattices) {
  const SvpResult a2 = svp_exact(catalog("A2").form);
  EXPECT_EQ(a2.length_sq, 2);
  EXPECT_EQ(a2.count_pairs, 3);
  const SvpResult e8 = svp_exact(catalog("E8").form);
  EXPECT_EQ(e8.length_sq, 2);
  EXPECT_EQ(e8.count_pairs, 120);
  EXPECT_EQ(catalog("E8").form.evaluate(e8.witness), 2);
}

TEST(Svp, WitnessIsLexicographicallyLeastNormalised) {
  const SvpResult s = svp_exact(Basis::identity(3));
  EXPECT_EQ(s.witness, (IntVector{0, 0, 1}));
}

TEST(Svp, DimensionCap) {
  EXPECT_THROW(svp_exact(Basis::identity(13)), Error);
  try {
    svp_exact(Basis::identity(13));
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSizeCap);
  }
}

TEST(Svp, AgreesWithBoxSearch) {
  std::mt19937_64 g(101);
  int checked = 0;
  while (checked < 60) {
    const std::size_t n = 2 + checked % 3;
    const QuadraticForm f = gram_matrix(Basis(oracle::random_nonsingular(g, n, -9, 9)));
    Rational diag_min = f(0, 0);
    for (std::size_t i = 1; i < n; ++i) diag_min = std::min(diag_min, f(i, i));
    // Skip instances where the box could miss a minimiser.
    if (oracle::coefficient_reach(f.gram(), {}, diag_min) > 25) continue;
    const SvpResult s = svp_exact(f);
    const oracle::BoxSvp o = oracle::box_svp(f.gram(), 25);
    EXPECT_EQ(s.length_sq, o.length_sq) << checked;
    EXPECT_EQ(s.count_pairs, Integer(o.count_pairs)) << checked;
    EXPECT_EQ(s.witness, to_int(o.witness)) << checked;
    ++checked;
  }
}

TEST(Svp, InvariantUnderUnimodularChange) {
  std::mt19937_64 g(102);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + t % 5;
    const Basis b(oracle::random_nonsingular(g, n, -9, 9));
    IntegerMatrix u = IntegerMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) u(i, j) = c(g);
    for (std::size_t i = 1; i < n; ++i) {
      const int k = c(g);
      for (std::size_t col = 0; col < n; ++col) u(i, col) += k * u(0, col);
    }
    const SvpResult a = svp_exact(b), s = svp_exact(apply_unimodular(b, UnimodularMatrix(u)));
    EXPECT_EQ(a.length_sq, s.length_sq);
    EXPECT_EQ(a.count_pairs, s.count_pairs);
  }
}

TEST(MinVectors, Examples) {
  EXPECT_EQ(enumerate_min_vectors(QuadraticForm(RationalMatrix::identity(4))).size(), 4u);
  EXPECT_EQ(enumerate_min_vectors(catalog("D4").form).size(), 12u);
  EXPECT_EQ(enumerate_min_vectors(catalog("D5").form).size(), 20u);
}

TEST(MinVectors, AllMinimalAndRegionSound) {
  for (const char* name : {"A2", "D3", "D4", "D5", "E6", "A3star", "U(4)", "W5"}) {
    const QuadraticForm f = catalog(name).form;
    const Rational m = svp_exact(f).length_sq;
    const std::vector<IntVector> v = enumerate_min_vectors(f);
    for (const IntVector& z : v) EXPECT_EQ(f.evaluate(z), m) << name;
    // Nothing shorter inside the larger region.
    const std::vector<ShortVector> wider = short_vectors(f, m + 1);
    for (const ShortVector& s : wider) EXPECT_GE(s.value, m) << name;
    std::size_t at_min = 0;
    for (const ShortVector& s : wider) at_min += s.value == m;
    EXPECT_EQ(at_min, v.size()) << name;
    if (f.dim() <= 4) EXPECT_EQ(oracle::box_count(f.gram(), m, 6), std::int64_t(v.size())) << name;
  }
}

TEST(Cvp, Examples) {
  const CvpResult z2 = cvp_exact(Basis::identity(2), RatVector{Rational(2, 5), Rational(7, 10)});
  EXPECT_EQ(z2.witness, (IntVector{0, 1}));
  EXPECT_EQ(z2.dist_sq, Rational(1, 4));
  // rows (m,0),(0,1/m), m = 4, w = (m/2, 1/(2m)).
  const Basis skew = rows({{4, 0}, {0, Rational(1, 4)}});
  const CvpResult s = cvp_exact(skew, RatVector{2, Rational(1, 8)});
  EXPECT_EQ(s.dist_sq, Rational(257, 64));
  EXPECT_EQ(s.dist_sq, (Rational(16) + Rational(1, 16)) / 4);
}

TEST(Cvp, AgreesWithBoxSearch) {
  std::mt19937_64 g(103);
  int checked = 0;
  while (checked < 100) {
    const std::size_t n = 2 + checked % 4;
    const QuadraticForm f = gram_matrix(Basis(oracle::random_nonsingular(g, n, -6, 6)));
    const RatVector target = random_target(g, n, 3);
    IntVector rounded(n);
    RatVector diff(n);
    for (std::size_t i = 0; i < n; ++i) {
      rounded[i] = round_half_even(target[i]);
      diff[i] = rounded[i] - target[i];
    }
    const int box = n <= 3 ? 25 : 12;
    if (oracle::coefficient_reach(f.gram(), target, f.evaluate(diff)) > box) continue;
    const CvpResult c = cvp_exact(f, target);
    const oracle::BoxCvp o = oracle::box_cvp(f.gram(), target, box);
    EXPECT_EQ(c.dist_sq, o.dist_sq) << checked;
    EXPECT_EQ(c.witness, to_int(o.witness)) << checked;
    ++checked;
  }
}

TEST(Cvp, TranslationInvariance) {
  std::mt19937_64 g(104);
  std::uniform_int_distribution<int> shift(-20, 20);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + t % 4;
    const Basis b(oracle::random_nonsingular(g, n, -9, 9));
    const RatVector w = random_target(g, n, 5);
    IntVector z(n);
    for (auto& v : z) v = shift(g);
    const RatVector p = lattice_point(b, z);
    RatVector moved(n);
    for (std::size_t i = 0; i < n; ++i) moved[i] = w[i] + p[i];
    const CvpResult a = cvp_exact(b, w), m = cvp_exact(b, moved);
    EXPECT_EQ(a.dist_sq, m.dist_sq);
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(m.witness[i], a.witness[i] + z[i]);
  }
}

TEST(Cvp, OracleClassMatchesFunction) {
  const QuadraticForm f = catalog("D4").form;
  const CvpOracle o(f);
  std::mt19937_64 g(105);
  for (int t = 0; t < 30; ++t) {
    const RatVector target = random_target(g, 4, 4);
    const CvpResult a = o.closest(target), b = cvp_exact(f, target);
    EXPECT_EQ(a.dist_sq, b.dist_sq);
    EXPECT_EQ(a.witness, b.witness);
  }
}

TEST(Babai, Examples) {
  const Basis b = rows({{3, 1}, {1, 4}});
  const RatVector on = lattice_point(b, IntVector{2, -1});
  const CvpResult r = babai_round(b, on, LllParams::classical());
  EXPECT_EQ(r.dist_sq, 0);
  EXPECT_EQ(r.witness, (IntVector{2, -1}));
  const RatVector w{Rational(2, 5), Rational(7, 10)};
  const CvpResult z = babai_round(Basis::identity(2), w, LllParams::classical());
  const CvpResult e = cvp_exact(Basis::identity(2), w);
  EXPECT_EQ(z.dist_sq, e.dist_sq);
  EXPECT_EQ(z.witness, e.witness);
}

TEST(Babai, WithinWorstCaseFactorOfExact) {
  std::mt19937_64 g(106);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + t % 7;
    const Basis b(oracle::random_nonsingular(g, n, -50, 50));
    const RatVector w = random_target(g, n, 60);
    const CvpResult approx = babai_round(b, w, LllParams::classical());
    const CvpResult exact = cvp_exact(b, w);
    EXPECT_GE(approx.dist_sq, exact.dist_sq);
    const double factor = 2 * std::pow(2 / std::sqrt(3.0), double(n));
    EXPECT_LE(std::sqrt(approx.dist_sq.get_d()), factor * std::sqrt(exact.dist_sq.get_d()) + 1e-9) << t;
    // The witness is genuine: its distance is what was reported.
    const RatVector v = lattice_point(b, approx.witness);
    Rational d = 0;
    for (std::size_t i = 0; i < n; ++i) d += (w[i] - v[i]) * (w[i] - v[i]);
    EXPECT_EQ(d, approx.dist_sq);
  }
}

TEST(Babai, OrthogonalBasisIsExact) {
  std::mt19937_64 g(107);
  std::uniform_int_distribution<int> diag(1, 9);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + t % 4;
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = diag(g);
    const Basis b(m);
    const RatVector w = random_target(g, n, 10);
    EXPECT_EQ(babai_round(b, w, LllParams::classical()).dist_sq, cvp_exact(b, w).dist_sq);
  }
}

TEST(Hermite, KnownValues) {
  const std::vector<Rational> expected{1, Rational(4, 3), 2, 4, 8, Rational(64, 3), 64, 256};
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(hermite_constant_power(n), expected[n - 1]);
}

TEST(MinkowskiLength, Examples) {
  for (std::size_t n = 2; n <= 8; ++n) EXPECT_TRUE(minkowski_length_check(Basis::identity(n)));
  // Equality cases: l^4 = 4 = (4/3) 3, l^16 = 256 = 256 * 1.
  const QuadraticForm a2 = catalog("A2").form;
  EXPECT_EQ(svp_exact(a2).length_sq * svp_exact(a2).length_sq, hermite_constant_power(2) * determinant(a2.gram()));
  EXPECT_TRUE(minkowski_length_check(a2));
  EXPECT_TRUE(minkowski_length_check(catalog("E8").form));
  std::mt19937_64 g(108);
  for (int t = 0; t < 40; ++t) {
    EXPECT_TRUE(minkowski_length_check(Basis(oracle::random_nonsingular(g, 2 + t % 7, -9, 9))));
  }
  EXPECT_THROW(minkowski_length_check(Basis::identity(9)), Error);
}
