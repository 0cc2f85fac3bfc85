#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pqf/core/rational.hpp"

namespace pqf {

using Amplitude = std::complex<double>;

inline constexpr double kNormTolerance = 1e-12;

// 2^arity square matrix; rows and columns are labelled big-endian over the
// target qubits. Construction checks unitarity within 1e-12.
class GateMatrix {
 public:
  GateMatrix(std::size_t arity, std::vector<Amplitude> entries);

  static GateMatrix identity(std::size_t arity);

  std::size_t arity() const { return arity_; }
  std::size_t size() const { return std::size_t{1} << arity_; }
  const Amplitude& operator()(std::size_t r, std::size_t c) const { return entries_[r * size() + c]; }

 private:
  std::size_t arity_;
  std::vector<Amplitude> entries_;
};

// T_q for q = 2^arity as a gate.
GateMatrix fourier_gate(std::size_t arity);

// Amplitude index a = sum alpha_i 2^i labels the ket |alpha_{k-1} ... alpha_0>;
// qubit i is alpha_i. Construction checks the norm within 1e-12.
class QuantumState {
 public:
  QuantumState(std::size_t num_qubits, std::vector<Amplitude> amplitudes);

  static QuantumState basis(std::size_t num_qubits, std::uint64_t index);
  static QuantumState uniform(std::size_t num_qubits);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t size() const { return amplitudes_.size(); }
  const std::vector<Amplitude>& amplitudes() const { return amplitudes_; }
  const Amplitude& amplitude(std::size_t index) const { return amplitudes_[index]; }
  double norm_sq() const;
  std::vector<double> probabilities() const;

 private:
  std::size_t num_qubits_;
  std::vector<Amplitude> amplitudes_;
};

// "|010>" for index 2 of a 3-qubit state.
std::string ket_label(std::size_t num_qubits, std::uint64_t index);

// targets[0] is the most significant bit of the gate's local label.
QuantumState apply_gate(const QuantumState& s, const GateMatrix& g, std::span<const std::size_t> targets);

// beta_b = q^{-1/2} sum_a exp(2 pi i a b / q) alpha_a by radix-2 FFT; k <= 20.
QuantumState fourier_transform(const QuantumState& s);

// The demonstration superposition i/sqrt2 |000> + 1/2 |100> - 1/2 |110>.
QuantumState gate_demo_input();

// All convergents of b/q in lowest terms, in order.
std::vector<Rational> continued_fraction_approx(std::uint64_t b, std::uint64_t q);

// q = 2^k with n^2 <= q < 2n^2.
std::size_t order_register_bits(std::uint64_t n);

// First register after T_q, with the function register x^a mod n traced out.
struct OrderDistribution {
  std::uint64_t n = 0;
  std::uint64_t x = 0;
  std::size_t k = 0;
  std::vector<double> probabilities;  // indexed by b
};

OrderDistribution order_outcome_distribution(std::uint64_t n, std::uint64_t x, std::size_t k);

// Seeded samples of b from the exact distribution.
std::vector<std::uint64_t> sample_outcomes(const OrderDistribution& dist, std::size_t count,
                                           std::uint64_t seed);

struct OrderFindResult {
  std::uint64_t r = 0;
  std::size_t rounds = 0;
  std::vector<std::uint64_t> samples;
  std::vector<std::uint64_t> candidates;
};

// n odd, n <= 2^10, gcd(x, n) = 1; k = 0 picks order_register_bits(n);
// max_rounds = 0 picks 2 ceil(log2 n). Throws kAlgorithmFailure when rounds run out.
OrderFindResult order_find(std::uint64_t n, std::uint64_t x, std::size_t k, std::uint64_t seed,
                           std::size_t max_rounds = 0);

std::uint64_t classical_order(std::uint64_t n, std::uint64_t x);

struct FactorResult {
  std::uint64_t factor = 0;
  std::uint64_t x = 0;
  std::uint64_t r = 0;  // 0 when the gcd shortcut fired
  std::size_t attempts = 0;
};

// n odd composite, not a prime power, n <= 2^10.
FactorResult shor_factor(std::uint64_t n, std::uint64_t seed, std::size_t max_attempts = 8);

}  // namespace pqf
