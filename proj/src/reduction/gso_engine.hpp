#pragma once

#include "pqf/core/lattice.hpp"
#include "pqf/reduction/reduction.hpp"

namespace pqf::detail {

// Exact GSO of the current basis U*A, kept up to date under size reduction
// steps and adjacent swaps. The basis itself is never materialised.
class GsoEngine {
 public:
  explicit GsoEngine(const QuadraticForm& f);

  std::size_t dim() const { return b_.size(); }
  const Rational& mu(std::size_t i, std::size_t j) const { return mu_(i, j); }
  const Rational& star(std::size_t i) const { return b_[i]; }
  const IntegerMatrix& transform() const { return u_; }

  // a_k -= round(mu_kl) a_l; returns true when the rounded value was nonzero.
  bool reduce_pair(std::size_t k, std::size_t l);
  // Exchanges a_{k-1} and a_k.
  void swap_adjacent(std::size_t k);

  void size_reduce_row(std::size_t k) {
    for (std::size_t l = k; l-- > 0;) reduce_pair(k, l);
  }

 private:
  RationalMatrix mu_;
  RatVector b_;
  IntegerMatrix u_;
};

ReductionReport finish_report(const QuadraticForm& f, const IntegerMatrix& u,
                              std::uint64_t iterations,
                              std::vector<Certification> certified);
ReductionReport with_basis(ReductionReport r, const Basis& b);

}  // namespace pqf::detail
