#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pqf/core/lattice.hpp"

namespace pqf {

enum class LllMode {
  // B_i >= sigma B_{i-1}, the star-norm condition alone.
  kPaperSigma,
  // B_i >= (delta - mu_{i,i-1}^2) B_{i-1}.
  kClassicalLovasz,
};

struct LllParams {
  LllMode mode = LllMode::kClassicalLovasz;
  // Sigma-mode threshold; empty means default_sigma(n).
  std::optional<Rational> sigma;
  Rational delta{3, 4};
  std::uint64_t max_iterations = 200000;

  static LllParams paper_sigma();
  static LllParams classical(Rational delta = Rational(3, 4));

  Rational effective_sigma(std::size_t n) const;
};

// 1/4 + (3/4)^(n/(n-1)) rounded up to a multiple of 2^-64; n >= 2.
Rational default_sigma(std::size_t n);

struct Certification {
  std::string criterion;
  bool holds = false;
};

struct ReductionReport {
  QuadraticForm reduced_form;
  // Present when the input was a basis: transform * input rows.
  std::optional<Basis> reduced_basis;
  UnimodularMatrix transform;
  std::uint64_t iterations = 0;
  std::vector<Certification> certified;

  bool all_certified() const;
};

// First violated condition, with 1-based indices as in the literature.
struct ReducednessCheck {
  bool holds = true;
  std::string condition;
  std::size_t i = 0;
  std::size_t j = 0;
  Rational value;
};

ReductionReport gauss_reduce(const QuadraticForm& f);
ReductionReport gauss_reduce(const Basis& b);

ReductionReport size_reduce(const QuadraticForm& f);
ReductionReport size_reduce(const Basis& b);

// Throws kAlgorithmFailure when max_iterations passes are exceeded.
ReductionReport lll_reduce(const QuadraticForm& f, const LllParams& p);
ReductionReport lll_reduce(const Basis& b, const LllParams& p);

ReducednessCheck is_size_reduced(const QuadraticForm& f);
ReducednessCheck is_lll_reduced(const QuadraticForm& f, const LllParams& p);
ReducednessCheck is_lll_reduced(const Basis& b, const LllParams& p);

bool is_lagrange_reduced(const QuadraticForm& f);
bool is_gauss_ternary_reduced(const QuadraticForm& f);
// dim <= 6.
bool is_minkowski_reduced(const QuadraticForm& f);

// Greedy shortest primitive extensions, then signs with c_1j >= 0; dim <= 6.
ReductionReport minkowski_reduce(const QuadraticForm& f);

// dim <= 8.
ReductionReport kz_reduce(const QuadraticForm& f);
ReductionReport kz_reduce(const Basis& b);
ReducednessCheck is_kz_reduced(const QuadraticForm& f);
ReducednessCheck is_kz_reduced(const Basis& b);

// Gram matrix of pi_{i-1}(a_i), ..., pi_{i-1}(a_n) for 0-based start index i.
QuadraticForm projected_form(const GsoData& g, std::size_t start);

// A unimodular matrix whose first row is the primitive vector z.
UnimodularMatrix complete_to_unimodular(const IntVector& z);

}  // namespace pqf
