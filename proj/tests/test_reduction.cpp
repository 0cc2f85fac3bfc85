#include <gtest/gtest.h>

#include <cmath>
#include <optional>
#include <random>

#include "oracles.hpp"
#include "pqf/core/catalog.hpp"
#include "pqf/reduction/reduction.hpp"
#include "pqf/solvers/solvers.hpp"

using namespace pqf;

namespace {

Basis rows(std::initializer_list<std::initializer_list<Rational>> r) { return Basis(RationalMatrix(r)); }

// reduced_basis = transform * input and |det transform| = 1.
void expect_consistent(const ReductionReport& r, const Basis& input) {
  ASSERT_TRUE(r.reduced_basis.has_value());
  EXPECT_EQ(*r.reduced_basis, apply_unimodular(input, r.transform));
  EXPECT_EQ(abs(determinant(r.transform.entries())), 1);
  EXPECT_EQ(r.reduced_form, gram_matrix(*r.reduced_basis));
  EXPECT_EQ(lattice_determinant(*r.reduced_basis).squared, lattice_determinant(input).squared);
}

Rational norm_sq(std::span<const Rational> v) {
  Rational s = 0;
  for (const Rational& x : v) s += x * x;
  return s;
}

}  // namespace

TEST(Sigma, DefaultIsTightUpperApproximation) {
  for (std::size_t n = 2; n <= 10; ++n) {
    const Rational s = default_sigma(n);
    const double exact = 0.25 + std::pow(0.75, double(n) / double(n - 1));
    EXPECT_GE(s.get_d(), exact - 1e-15);
    EXPECT_LE(s.get_d(), exact + 1e-15);
    EXPECT_GT(s, Rational(1, 4));
    EXPECT_LT(s, 1);
    // Rounded to a multiple of 2^-64.
    EXPECT_EQ(Rational(s * Rational(Integer(1) << 64)).get_den(), 1);
  }
  EXPECT_EQ(default_sigma(2), Rational(13, 16));
}

TEST(GaussReduce, ExampleFromZ2) {
  const Basis b = rows({{1, 11}, {-1, -10}});
  const ReductionReport r = gauss_reduce(b);
  expect_consistent(r, b);
  EXPECT_EQ(r.reduced_form(0, 0), 1);
  EXPECT_EQ(lattice_determinant(*r.reduced_basis).squared, 1);
}

TEST(GaussReduce, IdentityUnchanged) {
  const ReductionReport r = gauss_reduce(Basis::identity(2));
  EXPECT_EQ(*r.reduced_basis, Basis::identity(2));
  EXPECT_EQ(r.iterations, 1u);
}

TEST(GaussReduce, FirstVectorIsShortestAgainstOracle) {
  const Basis b = rows({{5, 0}, {2, 1}});
  const ReductionReport r = gauss_reduce(b);
  EXPECT_EQ(r.reduced_form(0, 0), oracle::box_svp(gram_matrix(b).gram(), 25).length_sq);
  std::mt19937_64 g(17);
  for (int t = 0; t < 200; ++t) {
    const Basis s(oracle::random_nonsingular(g, 2, -40, 40));
    const ReductionReport rr = gauss_reduce(s);
    expect_consistent(rr, s);
    EXPECT_EQ(rr.reduced_form(0, 0), svp_exact(s).length_sq);
    // Lagrange conditions after normalising the sign of c_12.
    RationalMatrix c = rr.reduced_form.gram();
    if (c(0, 1) < 0) {
      c(0, 1) = -c(0, 1);
      c(1, 0) = -c(1, 0);
    }
    EXPECT_TRUE(is_lagrange_reduced(QuadraticForm(c))) << t;
  }
}

TEST(SizeReduce, Examples) {
  EXPECT_EQ(*size_reduce(Basis::identity(3)).reduced_basis, Basis::identity(3));
  EXPECT_EQ(*size_reduce(rows({{1, 0}, {7, 1}})).reduced_basis, Basis::identity(2));
}

TEST(SizeReduce, SeededBasesMeetMuBoundWithUnchangedStarNorms) {
  std::mt19937_64 g(5);
  for (int t = 0; t < 30; ++t) {
    const Basis b(oracle::random_nonsingular(g, 5, -50, 50));
    const ReductionReport r = size_reduce(b);
    expect_consistent(r, b);
    const GsoData before = gram_schmidt(b), after = gram_schmidt(*r.reduced_basis);
    EXPECT_EQ(before.star_norms_sq, after.star_norms_sq);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < i; ++j) EXPECT_LE(abs(after.mu(i, j)), Rational(1, 2));
    EXPECT_TRUE(is_size_reduced(r.reduced_form).holds);
  }
}

TEST(LllReduce, IdentityAndZ2Example) {
  for (const LllParams& p : {LllParams::classical(), LllParams::paper_sigma()}) {
    const ReductionReport id = lll_reduce(Basis::identity(3), p);
    EXPECT_EQ(*id.reduced_basis, Basis::identity(3));
    EXPECT_TRUE(id.all_certified());
    const Basis b = rows({{1, 11}, {-1, -10}});
    const ReductionReport r = lll_reduce(b, p);
    expect_consistent(r, b);
    EXPECT_EQ(r.reduced_form(0, 0), 1);
  }
}

TEST(LllReduce, CertifiedOutputsAreReducedAndFirstVectorBounded) {
  std::mt19937_64 g(31);
  int sigma_certified = 0, sigma_capped = 0;
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = 2 + t % 7;
    const Basis b(oracle::random_nonsingular(g, n, -999, 999));
    const Rational ell = svp_exact(b).length_sq;
    const double bound = std::pow(2.0 / std::sqrt(3.0), double(n)) * std::sqrt(ell.get_d());
    LllParams sigma_mode = LllParams::paper_sigma();
    sigma_mode.max_iterations = 20000;
    for (const LllParams& p : {LllParams::classical(), LllParams::classical(Rational(99, 100)), sigma_mode}) {
      std::optional<ReductionReport> r;
      try {
        r = lll_reduce(b, p);
      } catch (const Error& e) {
        // Only the sigma swap rule may fail to terminate.
        ASSERT_EQ(p.mode, LllMode::kPaperSigma);
        ASSERT_EQ(e.kind(), ErrorKind::kAlgorithmFailure);
        ++sigma_capped;
        continue;
      }
      if (p.mode == LllMode::kPaperSigma) ++sigma_certified;
      expect_consistent(*r, b);
      EXPECT_TRUE(r->all_certified());
      EXPECT_TRUE(is_lll_reduced(*r->reduced_basis, p).holds);
      EXPECT_LE(std::sqrt(norm_sq(r->reduced_basis->row(0)).get_d()), bound * (1 + 1e-12));
      if (p.mode == LllMode::kClassicalLovasz && p.delta == Rational(3, 4)) {
        Integer largest = 0;
        for (std::size_t i = 0; i < n; ++i)
          for (const Rational& v : b.row(i)) largest = std::max<Integer>(largest, abs(v.get_num()));
        EXPECT_LT(r->iterations, 64 * n * n * (bit_length(largest) + 1));
      }
    }
  }
  std::printf("sigma mode: %d certified, %d hit the iteration cap\n", sigma_certified, sigma_capped);
  EXPECT_EQ(sigma_certified + sigma_capped, 120);
}

TEST(LllReduce, PaperSigmaCannotTerminateOnA2) {
  // Every basis of A2 has B_2 / B_1 <= 3/4 < sigma(2).
  LllParams p = LllParams::paper_sigma();
  p.max_iterations = 1000;
  try {
    lll_reduce(catalog("A2").form, p);
    ADD_FAILURE() << "expected the iteration cap";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kAlgorithmFailure);
  }
}

TEST(LllReduce, PaperSigmaHitsIterationCapAsError) {
  LllParams p = LllParams::paper_sigma();
  p.max_iterations = 1;
  try {
    lll_reduce(rows({{1, 11}, {-1, -10}}), p);
    ADD_FAILURE() << "expected the iteration cap";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kAlgorithmFailure);
  }
}

TEST(IsLllReduced, Witnesses) {
  const ReducednessCheck c = is_lll_reduced(rows({{1, 0}, {7, 1}}), LllParams::classical());
  EXPECT_FALSE(c.holds);
  EXPECT_EQ(c.i, 2u);
  EXPECT_EQ(c.j, 1u);
  EXPECT_EQ(c.value, 7);
  // 1 < sigma * 4 with sigma = 13/16.
  const ReducednessCheck s = is_lll_reduced(rows({{2, 0}, {0, 1}}), LllParams::paper_sigma());
  EXPECT_FALSE(s.holds);
  EXPECT_EQ(s.i, 2u);
  EXPECT_TRUE(is_lll_reduced(rows({{1, 0}, {0, 2}}), LllParams::paper_sigma()).holds);
}

TEST(Lagrange, Examples) {
  EXPECT_TRUE(is_lagrange_reduced(QuadraticForm(RationalMatrix{{1, Rational(1, 2)}, {Rational(1, 2), 1}})));
  EXPECT_FALSE(is_lagrange_reduced(QuadraticForm(RationalMatrix{{2, 0}, {0, 1}})));
  EXPECT_FALSE(is_lagrange_reduced(QuadraticForm(RationalMatrix{{2, -1}, {-1, 2}})));
}

TEST(GaussTernary, Examples) {
  EXPECT_TRUE(is_gauss_ternary_reduced(QuadraticForm(RationalMatrix::identity(3))));
  EXPECT_FALSE(is_gauss_ternary_reduced(QuadraticForm(RationalMatrix{{1, 0, 0}, {0, 3, 0}, {0, 0, 2}})));
  const ReductionReport d3 = minkowski_reduce(catalog("D3").form);
  EXPECT_TRUE(is_gauss_ternary_reduced(d3.reduced_form));
}

TEST(Minkowski, Examples) {
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_TRUE(is_minkowski_reduced(QuadraticForm(RationalMatrix::identity(n))));
  EXPECT_FALSE(is_minkowski_reduced(QuadraticForm(RationalMatrix{{2, 0}, {0, 1}})));
  EXPECT_TRUE(is_minkowski_reduced(QuadraticForm(RationalMatrix{{2, 1}, {1, 2}})));
  EXPECT_THROW(is_minkowski_reduced(catalog("E7").form), Error);
}

TEST(Minkowski, ReducedFormsHaveShortestFirstVector) {
  std::mt19937_64 g(8);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + t % 4;
    const QuadraticForm f = gram_matrix(Basis(oracle::random_nonsingular(g, n, -7, 7)));
    const ReductionReport r = minkowski_reduce(f);
    EXPECT_EQ(apply_unimodular(f, r.transform), r.reduced_form);
    ASSERT_TRUE(is_minkowski_reduced(r.reduced_form)) << t;
    EXPECT_EQ(r.reduced_form(0, 0), svp_exact(f).length_sq);
    if (n == 2) EXPECT_TRUE(is_lagrange_reduced(r.reduced_form));
  }
}

TEST(KorkinZolotarev, Examples) {
  EXPECT_EQ(*kz_reduce(Basis::identity(4)).reduced_basis, Basis::identity(4));
  const ReducednessCheck bad = is_kz_reduced(rows({{2, 0}, {0, 1}}));
  EXPECT_FALSE(bad.holds);
  EXPECT_EQ(bad.i, 1u);
  const ReductionReport e8 = kz_reduce(catalog("E8").form);
  EXPECT_EQ(e8.reduced_form(0, 0), 2);
  EXPECT_TRUE(is_kz_reduced(e8.reduced_form).holds);
  EXPECT_THROW(kz_reduce(QuadraticForm(RationalMatrix::identity(9))), Error);
}

TEST(KorkinZolotarev, TwoDimensionalAgreesWithGauss) {
  std::mt19937_64 g(12);
  for (int t = 0; t < 100; ++t) {
    const Basis b(oracle::random_nonsingular(g, 2, -30, 30));
    const ReductionReport kz = kz_reduce(b);
    expect_consistent(kz, b);
    EXPECT_TRUE(is_kz_reduced(*kz.reduced_basis).holds);
    EXPECT_EQ(kz.reduced_form(0, 0), gauss_reduce(b).reduced_form(0, 0));
  }
}

TEST(KorkinZolotarev, SeededBasesAndLllComparison) {
  std::mt19937_64 g(13);
  int lll_also_kz = 0, total = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + t % 4;
    const Basis b(oracle::random_nonsingular(g, n, -20, 20));
    const ReductionReport kz = kz_reduce(b);
    expect_consistent(kz, b);
    EXPECT_TRUE(is_kz_reduced(*kz.reduced_basis).holds);
    EXPECT_EQ(kz.reduced_form(0, 0), svp_exact(b).length_sq);
    ++total;
    if (is_kz_reduced(*lll_reduce(b, LllParams::classical()).reduced_basis).holds) ++lll_also_kz;
  }
  RecordProperty("lll_outputs_also_kz", std::to_string(lll_also_kz) + "/" + std::to_string(total));
  std::printf("LLL outputs that are also K-Z reduced: %d/%d\n", lll_also_kz, total);
}

TEST(Unimodular, CompletionHasGivenFirstRow) {
  const UnimodularMatrix u = complete_to_unimodular(IntVector{3, 5, 7});
  EXPECT_EQ(u.entries()(0, 0), 3);
  EXPECT_EQ(u.entries()(0, 1), 5);
  EXPECT_EQ(u.entries()(0, 2), 7);
  EXPECT_THROW(complete_to_unimodular(IntVector{2, 4}), Error);
}
