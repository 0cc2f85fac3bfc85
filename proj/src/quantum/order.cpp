#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "pqf/core/error.hpp"
#include "pqf/core/random.hpp"
#include "pqf/quantum/quantum.hpp"

namespace pqf {

namespace {

constexpr std::uint64_t kMaxN = 1024;

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::size_t ceil_log2(std::uint64_t n) {
  std::size_t k = 0;
  while ((std::uint64_t{1} << k) < n) ++k;
  return k;
}

void check_order_inputs(std::uint64_t n, std::uint64_t x) {
  if (n > kMaxN) fail(ErrorKind::kSizeCap, "order finding supports n <= 2^10");
  if (n < 3 || n % 2 == 0) fail(ErrorKind::kInvariantViolation, "order finding needs odd n >= 3");
  if (std::gcd(x % n, n) != 1) fail(ErrorKind::kInvariantViolation, "order finding needs gcd(x, n) = 1");
}

// Least divisor t of r with x^t = 1.
std::uint64_t reduce_to_order(std::uint64_t n, std::uint64_t x, std::uint64_t r) {
  for (std::uint64_t p = 2; p <= r; ++p) {
    while (r % p == 0 && powmod_u64(x, r / p, n) == 1) r /= p;
  }
  return r;
}

}  // namespace

std::vector<Rational> continued_fraction_approx(std::uint64_t b, std::uint64_t q) {
  if (q == 0 || b >= q) fail(ErrorKind::kInvariantViolation, "continued fraction needs 0 <= b < q");
  std::vector<Rational> out;
  // h_k / k_k from the partial quotients of b / q.
  Integer h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
  Integer num = b, den = q;
  while (true) {
    const Integer a = num / den;
    const Integer h = a * h_prev + h_prev2;
    const Integer k = a * k_prev + k_prev2;
    out.emplace_back(h, k);
    out.back().canonicalize();
    const Integer rem = num - a * den;
    if (rem == 0) break;
    num = den;
    den = rem;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
  }
  return out;
}

std::size_t order_register_bits(std::uint64_t n) {
  std::size_t k = 0;
  while ((std::uint64_t{1} << k) < n * n) ++k;
  return k;
}

OrderDistribution order_outcome_distribution(std::uint64_t n, std::uint64_t x, std::size_t k) {
  check_order_inputs(n, x);
  if (k == 0) k = order_register_bits(n);
  const std::uint64_t q = std::uint64_t{1} << k;
  if (k > 21 || q < n * n) fail(ErrorKind::kInvariantViolation, "register must satisfy n^2 <= q <= 2^21");

  // Function register x^a mod n; slices S_v = { a : x^a = v }.
  std::map<std::uint64_t, std::vector<std::uint64_t>> slices;
  std::uint64_t v = 1;
  for (std::uint64_t a = 0; a < q; ++a) {
    slices[v].push_back(a);
    v = v * (x % n) % n;
  }

  // |FFT|^2 is invariant under translating a slice, so slices with the same
  // shape share one transform.
  OrderDistribution d{n, x, k, std::vector<double>(q, 0.0)};
  std::map<std::vector<std::uint64_t>, std::vector<double>> cache;
  for (const auto& [value, slice] : slices) {
    std::vector<std::uint64_t> shape(slice.size());
    for (std::size_t i = 0; i < slice.size(); ++i) shape[i] = slice[i] - slice[0];
    auto it = cache.find(shape);
    if (it == cache.end()) {
      const double amp = 1.0 / std::sqrt(static_cast<double>(shape.size()));
      std::vector<Amplitude> psi(q, 0.0);
      for (std::uint64_t a : shape) psi[a] = amp;
      const QuantumState beta = fourier_transform(QuantumState(k, std::move(psi)));
      it = cache.emplace(shape, beta.probabilities()).first;
    }
    const double weight = static_cast<double>(slice.size()) / static_cast<double>(q);
    for (std::uint64_t b = 0; b < q; ++b) d.probabilities[b] += weight * it->second[b];
  }
  return d;
}

std::vector<std::uint64_t> sample_outcomes(const OrderDistribution& dist, std::size_t count,
                                           std::uint64_t seed) {
  std::vector<double> cdf(dist.probabilities.size());
  std::partial_sum(dist.probabilities.begin(), dist.probabilities.end(), cdf.begin());
  Rng rng = Rng(seed).derive("order-samples");
  std::vector<std::uint64_t> out(count);
  for (std::uint64_t& b : out) {
    const double u = rng.uniform_real() * cdf.back();
    b = static_cast<std::uint64_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    b = std::min<std::uint64_t>(b, cdf.size() - 1);
  }
  return out;
}

std::uint64_t classical_order(std::uint64_t n, std::uint64_t x) {
  check_order_inputs(n, x);
  std::uint64_t r = 1;
  for (std::uint64_t v = x % n; v != 1; v = v * (x % n) % n) ++r;
  return r;
}

OrderFindResult order_find(std::uint64_t n, std::uint64_t x, std::size_t k, std::uint64_t seed,
                           std::size_t max_rounds) {
  check_order_inputs(n, x);
  OrderFindResult res;
  if (x % n == 1) {
    res.r = 1;
    return res;
  }
  if (max_rounds == 0) max_rounds = 2 * ceil_log2(n);
  const OrderDistribution dist = order_outcome_distribution(n, x, k);
  const std::uint64_t q = std::uint64_t{1} << dist.k;
  const std::vector<std::uint64_t> samples = sample_outcomes(dist, max_rounds, seed);
  const std::size_t multiples = std::max<std::size_t>(1, ceil_log2(n));

  std::set<std::uint64_t> denominators;
  for (std::size_t round = 0; round < max_rounds; ++round) {
    const std::uint64_t b = samples[round];
    res.samples.push_back(b);
    res.rounds = round + 1;
    for (const Rational& c : continued_fraction_approx(b, q)) {
      const std::uint64_t r = c.get_den().get_ui();
      if (r <= n) denominators.insert(r);
    }
    // Two rounds whose convergents collapsed different factors of r.
    std::set<std::uint64_t> candidates = denominators;
    for (std::uint64_t a : denominators)
      for (std::uint64_t c : denominators) {
        const std::uint64_t l = std::lcm(a, c);
        if (l <= n) candidates.insert(l);
      }
    std::set<std::uint64_t> tested;
    for (std::uint64_t c : candidates)
      for (std::size_t m = 1; m <= multiples && c * m <= n; ++m) tested.insert(c * m);
    res.candidates.assign(tested.begin(), tested.end());
    for (std::uint64_t t : tested) {
      if (powmod_u64(x, t, n) == 1) {
        res.r = reduce_to_order(n, x, t);
        return res;
      }
    }
  }
  fail(ErrorKind::kAlgorithmFailure,
       "order finding exhausted " + std::to_string(max_rounds) + " rounds; retry with another seed");
}

FactorResult shor_factor(std::uint64_t n, std::uint64_t seed, std::size_t max_attempts) {
  if (n > kMaxN) fail(ErrorKind::kSizeCap, "shor_factor supports n <= 2^10");
  if (n < 9 || n % 2 == 0) fail(ErrorKind::kInvariantViolation, "shor_factor needs an odd composite n");
  bool prime = true;
  for (std::uint64_t f = 3; f * f <= n; f += 2)
    if (n % f == 0) prime = false;
  if (prime) fail(ErrorKind::kInvariantViolation, "shor_factor needs a composite n");
  for (std::uint64_t base = 3; base * base <= n; base += 2) {
    std::uint64_t m = n;
    while (m % base == 0) m /= base;
    if (m == 1) fail(ErrorKind::kInvariantViolation, "shor_factor needs n that is not a prime power");
  }

  Rng root(seed);
  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    Rng rng = root.derive(attempt);
    const auto x = static_cast<std::uint64_t>(rng.uniform_int(2, static_cast<std::int64_t>(n) - 2));
    const std::uint64_t g = std::gcd(x, n);
    if (g > 1) return FactorResult{g, x, 0, attempt};
    std::uint64_t r = 0;
    try {
      r = order_find(n, x, 0, rng.next_u64()).r;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kAlgorithmFailure) throw;
      continue;
    }
    if (r % 2 == 1) continue;
    const std::uint64_t half = powmod_u64(x, r / 2, n);
    if (half == n - 1) continue;
    for (std::uint64_t f : {std::gcd(half + n - 1, n), std::gcd(half + 1, n)}) {
      if (f > 1 && f < n && n % f == 0) return FactorResult{f, x, r, attempt};
    }
  }
  fail(ErrorKind::kAlgorithmFailure, "shor_factor exhausted " + std::to_string(max_attempts) + " attempts");
}

}  // namespace pqf
