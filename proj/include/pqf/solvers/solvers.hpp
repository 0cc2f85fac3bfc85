#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "pqf/core/lattice.hpp"
#include "pqf/reduction/reduction.hpp"

namespace pqf {

// Coefficient vectors are in the coordinates of the input basis or form.
struct SvpResult {
  Rational length_sq;
  // Lexicographically smallest minimiser with first nonzero entry positive.
  IntVector witness;
  Integer count_pairs;
};

struct CvpResult {
  Rational dist_sq;
  IntVector witness;
};

struct ShortVector {
  IntVector z;
  Rational value;
};

// All nonzero z with F(z) <= bound, one per +-pair (first nonzero entry
// positive), sorted by value and then lexicographically. Throws kSizeCap
// beyond max_count vectors.
std::vector<ShortVector> short_vectors(const QuadraticForm& f, const Rational& bound,
                                       std::size_t max_count = 4000000);

// dim <= 12.
SvpResult svp_exact(const QuadraticForm& f);
SvpResult svp_exact(const Basis& b);
SvpResult svp_exact_uncapped(const QuadraticForm& f);

// Minimal vectors, one per +-pair, sorted; dim <= 10.
std::vector<IntVector> enumerate_min_vectors(const QuadraticForm& f);
std::vector<IntVector> enumerate_min_vectors(const Basis& b);

// Minimises F(z - p) over integer z for a rational coefficient target p;
// dim <= 12. Ties go to the lexicographically smallest z.
CvpResult cvp_exact(const QuadraticForm& f, std::span<const Rational> target);
// Target given as a point w of the ambient space.
CvpResult cvp_exact(const Basis& b, std::span<const Rational> w);
CvpResult cvp_exact_uncapped(const QuadraticForm& f, std::span<const Rational> target);

// Repeated exact closest-vector queries against one form, reduced once.
class CvpOracle {
 public:
  explicit CvpOracle(const QuadraticForm& f);
  std::size_t dim() const;
  CvpResult closest(std::span<const Rational> target) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

// Rounds the coordinates of the target in an LLL-reduced basis.
CvpResult babai_round(const QuadraticForm& f, std::span<const Rational> target, const LllParams& p);
CvpResult babai_round(const Basis& b, std::span<const Rational> w, const LllParams& p);

// gamma_n^n for n = 1..8: 1, 4/3, 2, 4, 8, 64/3, 64, 256.
Rational hermite_constant_power(std::size_t n);

// l^(2n) <= gamma_n^n det(C), exactly; dim <= 8.
bool minkowski_length_check(const QuadraticForm& f);
bool minkowski_length_check(const Basis& b);

}  // namespace pqf
