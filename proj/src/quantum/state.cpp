#include <cmath>
#include <numbers>

#include "pqf/core/error.hpp"
#include "pqf/quantum/quantum.hpp"

namespace pqf {

GateMatrix::GateMatrix(std::size_t arity, std::vector<Amplitude> entries)
    : arity_(arity), entries_(std::move(entries)) {
  if (arity_ == 0 || arity_ > 10) fail(ErrorKind::kInvariantViolation, "gate arity must lie in [1, 10]");
  const std::size_t m = size();
  if (entries_.size() != m * m) fail(ErrorKind::kInvariantViolation, "gate needs 4^arity entries");
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Amplitude s = 0.0;
      for (std::size_t k = 0; k < m; ++k) s += std::conj((*this)(k, i)) * (*this)(k, j);
      if (std::abs(s - Amplitude(i == j ? 1.0 : 0.0)) > kNormTolerance) {
        fail(ErrorKind::kInvariantViolation, "gate is not unitary");
      }
    }
  }
}

GateMatrix GateMatrix::identity(std::size_t arity) {
  const std::size_t m = std::size_t{1} << arity;
  std::vector<Amplitude> e(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) e[i * m + i] = 1.0;
  return GateMatrix(arity, std::move(e));
}

GateMatrix fourier_gate(std::size_t arity) {
  const std::size_t q = std::size_t{1} << arity;
  std::vector<Amplitude> e(q * q);
  const double scale = 1.0 / std::sqrt(static_cast<double>(q));
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((a * b) % q) / static_cast<double>(q);
      e[a * q + b] = std::polar(scale, angle);
    }
  return GateMatrix(arity, std::move(e));
}

QuantumState::QuantumState(std::size_t num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  if (num_qubits_ == 0 || num_qubits_ > 24) fail(ErrorKind::kSizeCap, "state must have 1 to 24 qubits");
  if (amplitudes_.size() != (std::size_t{1} << num_qubits_)) {
    fail(ErrorKind::kInvariantViolation, "state needs 2^k amplitudes");
  }
  if (std::abs(norm_sq() - 1.0) > kNormTolerance) fail(ErrorKind::kInvariantViolation, "state is not normalised");
}

QuantumState QuantumState::basis(std::size_t num_qubits, std::uint64_t index) {
  if (num_qubits == 0 || num_qubits > 24) fail(ErrorKind::kSizeCap, "state must have 1 to 24 qubits");
  std::vector<Amplitude> a(std::size_t{1} << num_qubits, 0.0);
  if (index >= a.size()) fail(ErrorKind::kInvariantViolation, "basis index out of range");
  a[index] = 1.0;
  return QuantumState(num_qubits, std::move(a));
}

QuantumState QuantumState::uniform(std::size_t num_qubits) {
  if (num_qubits == 0 || num_qubits > 24) fail(ErrorKind::kSizeCap, "state must have 1 to 24 qubits");
  const std::size_t q = std::size_t{1} << num_qubits;
  return QuantumState(num_qubits, std::vector<Amplitude>(q, 1.0 / std::sqrt(static_cast<double>(q))));
}

double QuantumState::norm_sq() const {
  double s = 0.0;
  for (const Amplitude& a : amplitudes_) s += std::norm(a);
  return s;
}

std::vector<double> QuantumState::probabilities() const {
  std::vector<double> p(amplitudes_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(amplitudes_[i]);
  return p;
}

std::string ket_label(std::size_t num_qubits, std::uint64_t index) {
  std::string s = "|";
  for (std::size_t i = num_qubits; i-- > 0;) s += ((index >> i) & 1) ? '1' : '0';
  return s + ">";
}

QuantumState apply_gate(const QuantumState& s, const GateMatrix& g, std::span<const std::size_t> targets) {
  if (targets.size() != g.arity()) fail(ErrorKind::kInvariantViolation, "target count differs from gate arity");
  std::uint64_t mask = 0;
  for (std::size_t t : targets) {
    if (t >= s.num_qubits()) fail(ErrorKind::kInvariantViolation, "target qubit out of range");
    if (mask & (std::uint64_t{1} << t)) fail(ErrorKind::kInvariantViolation, "target qubits must be distinct");
    mask |= std::uint64_t{1} << t;
  }
  const std::size_t m = g.size();
  const std::size_t arity = g.arity();
  // Full index of local label l on top of a base index with the target bits cleared.
  auto spread = [&](std::uint64_t base, std::size_t l) {
    std::uint64_t idx = base;
    for (std::size_t j = 0; j < arity; ++j)
      if ((l >> (arity - 1 - j)) & 1) idx |= std::uint64_t{1} << targets[j];
    return idx;
  };
  std::vector<Amplitude> out(s.size(), 0.0);
  std::vector<Amplitude> local(m);
  for (std::uint64_t base = 0; base < s.size(); ++base) {
    if (base & mask) continue;
    for (std::size_t l = 0; l < m; ++l) local[l] = s.amplitude(spread(base, l));
    for (std::size_t r = 0; r < m; ++r) {
      Amplitude acc = 0.0;
      for (std::size_t c = 0; c < m; ++c) acc += g(r, c) * local[c];
      out[spread(base, r)] = acc;
    }
  }
  return QuantumState(s.num_qubits(), std::move(out));
}

QuantumState fourier_transform(const QuantumState& s) {
  const std::size_t k = s.num_qubits();
  if (k > 20) fail(ErrorKind::kSizeCap, "fourier_transform supports at most 20 qubits");
  const std::size_t q = s.size();
  std::vector<Amplitude> a = s.amplitudes();
  for (std::size_t i = 1, j = 0; i < q; ++i) {
    std::size_t bit = q >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  // Twiddles evaluated directly, not by recurrence.
  std::vector<Amplitude> w(q / 2);
  for (std::size_t t = 0; t < q / 2; ++t) {
    w[t] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(q));
  }
  for (std::size_t len = 2; len <= q; len <<= 1) {
    const std::size_t stride = q / len;
    for (std::size_t i = 0; i < q; i += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        const Amplitude u = a[i + j];
        const Amplitude v = a[i + j + len / 2] * w[j * stride];
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
      }
    }
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(q));
  for (Amplitude& x : a) x *= scale;
  return QuantumState(k, std::move(a));
}

QuantumState gate_demo_input() {
  std::vector<Amplitude> a(8, 0.0);
  a[0b000] = Amplitude(0.0, 1.0 / std::sqrt(2.0));
  a[0b100] = 0.5;
  a[0b110] = -0.5;
  return QuantumState(3, std::move(a));
}

}  // namespace pqf
