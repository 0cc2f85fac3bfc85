// One PASS/FAIL line per acceptance criterion; exit status is nonzero when any line fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "pqf/cli/document.hpp"
#include "pqf/cli/run.hpp"
#include "pqf/core/catalog.hpp"
#include "pqf/crypto/ajtai_dwork.hpp"
#include "pqf/crypto/classic.hpp"
#include "pqf/crypto/elliptic.hpp"
#include "pqf/crypto/ggh.hpp"
#include "pqf/crypto/ntru.hpp"
#include "pqf/geometry/geometry.hpp"
#include "pqf/quantum/quantum.hpp"
#include "pqf/reduction/reduction.hpp"
#include "pqf/solvers/solvers.hpp"

using namespace pqf;
using std::numbers::pi;

namespace {

int failures = 0;

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void report(const std::string& id, bool pass, const std::string& detail) {
  std::printf("%s criterion %s: %s\n", pass ? "PASS" : "FAIL", id.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

void info(const std::string& id, const std::string& detail) {
  std::printf("INFO criterion %s: %s\n", id.c_str(), detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const std::vector<const char*> kRoot{"A2", "D3", "D4", "D5", "E6", "E7", "E8"};

void kissing_numbers() {
  const std::vector<std::size_t> want{6, 12, 24, 40, 72, 126, 240};
  const Timer t;
  bool ok = true;
  std::string got;
  for (std::size_t i = 0; i < kRoot.size(); ++i) {
    const std::size_t k = 2 * enumerate_min_vectors(catalog(kRoot[i]).form).size();
    ok = ok && k == want[i];
    got += (i ? " " : "") + std::to_string(k);
  }
  const double s = t.seconds();
  report("1", ok && s < 60, fmt("kissing numbers %s in %.2f s", got.c_str(), s));
}

void packing_densities() {
  const std::vector<double> want{pi / std::sqrt(12.0),
                                 pi / std::sqrt(18.0),
                                 pi * pi / 16,
                                 pi * pi / (15 * std::sqrt(2.0)),
                                 std::pow(pi, 3) / (48 * std::sqrt(3.0)),
                                 std::pow(pi, 3) / 105,
                                 std::pow(pi, 4) / 384};
  double worst = 0;
  for (std::size_t i = 0; i < kRoot.size(); ++i) {
    const double d = packing_report(catalog(kRoot[i]).form).density;
    worst = std::max(worst, std::abs(d / want[i] - 1));
  }
  report("2", worst < 1e-9, fmt("worst relative density error %.3g", worst));
}

void hermite_constants() {
  const std::vector<Rational> want{Rational(4, 3), 2, 4, 8, Rational(64, 3), 64, 256};
  bool ok = true;
  std::string got;
  for (std::size_t i = 0; i < kRoot.size(); ++i) {
    const Rational g = gamma_functional(catalog(kRoot[i]).form);
    ok = ok && g == want[i];
    got += (i ? " " : "") + to_string(g);
  }
  report("3", ok, "gamma^n = " + got);
}

bool bracket_holds(double lo, double hi, double target, double width) {
  return lo <= target * (1 + 1e-12) && hi >= target * (1 - 1e-12) && (hi - lo) / target < width;
}

void covering() {
  const Timer t;
  const CoveringReport a2 = covering_radius_estimate(catalog("A2").form, 100000, 1);
  const double a2_theta = 2 * pi / (3 * std::sqrt(3.0));
  const CoveringReport a3 = covering_radius_estimate(catalog("A3star").form, 1000000, 1);
  const double a3_theta = 5 * std::sqrt(5.0) * pi / 24;
  const double s = t.seconds();
  const bool ok_a2 = bracket_holds(a2.density_lo, a2.density_hi, a2_theta, 0.01);
  const bool ok_a3 = bracket_holds(a3.density_lo, a3.density_hi, a3_theta, 0.02);
  report("4", ok_a2 && ok_a3 && s < 300,
         fmt("A2 [%.9f, %.9f] vs %.9f; A3* [%.9f, %.9f] vs %.9f; %.1f s", a2.density_lo, a2.density_hi,
             a2_theta, a3.density_lo, a3.density_hi, a3_theta, s));
}

void phi_ratios() {
  const RealBracket a2 = phi_ratio(catalog("A2").form, 100000, 1);
  const RealBracket d3 = phi_ratio(catalog("D3").form, 100000, 1);
  const double a2_want = 2 / std::sqrt(3.0), d3_want = std::sqrt(5.0 / 3.0);
  report("5", bracket_holds(a2.lo, a2.hi, a2_want, 0.01) && bracket_holds(d3.lo, d3.hi, d3_want, 0.02),
         fmt("A2 [%.9f, %.9f] vs %.9f; D3 [%.9f, %.9f] vs %.9f", a2.lo, a2.hi, a2_want, d3.lo, d3.hi, d3_want));
  const RealBracket a3 = phi_ratio(catalog("A3star").form, 100000, 1);
  info("5", fmt("D3 has 2 rho / l = sqrt 2 = %.9f; A3* gives [%.9f, %.9f], containing sqrt(5/3)", std::sqrt(2.0),
                a3.lo, a3.hi));
}

void reduction_bounds() {
  const Timer t;
  std::mt19937_64 g(2024);
  const LllParams params = LllParams::classical(Rational(99, 100));
  int lll_violations = 0, babai_violations = 0, uncertified = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + trial % 9;
    const Basis b(oracle::random_nonsingular(g, n, -999, 999));
    const ReductionReport r = lll_reduce(b, params);
    if (!r.all_certified()) ++uncertified;
    const Rational a1 = r.reduced_form(0, 0);
    const Rational ell = svp_exact(b).length_sq;
    Rational factor = 1;
    for (std::size_t i = 0; i < n; ++i) factor *= Rational(4, 3);
    // |a_1| <= (2/sqrt 3)^n l, squared.
    if (a1 > factor * ell) ++lll_violations;
    RatVector w(n);
    std::uniform_int_distribution<int> num(-999 * 60, 999 * 60);
    for (auto& v : w) {
      v = Rational(num(g), 60);
      v.canonicalize();
    }
    const CvpResult approx = babai_round(b, w, params);
    const CvpResult exact = cvp_exact(b, w);
    // |w - v| <= 2 (2/sqrt 3)^n |w, L|, squared.
    if (approx.dist_sq > 4 * factor * exact.dist_sq) ++babai_violations;
  }
  const double s = t.seconds();
  report("6", lll_violations == 0 && babai_violations == 0 && uncertified == 0 && s < 600,
         fmt("500 bases, LLL violations %d, Babai violations %d, uncertified %d, %.1f s", lll_violations,
             babai_violations, uncertified, s));
}

void perfect_forms() {
  bool ok = true;
  for (const char* name : {"U(2)", "U(3)", "U(4)", "V(4)", "U(5)", "V(5)", "W5"}) {
    const PerfectionReport p = is_perfect_form(catalog(name).form);
    ok = ok && p.perfect && p.minimum == 1;
  }
  bool identities_fail = true;
  for (std::size_t n = 2; n <= 5; ++n) {
    identities_fail = identities_fail && !is_perfect_form(QuadraticForm(RationalMatrix::identity(n))).perfect;
  }
  report("7", ok && identities_fail,
         fmt("seven forms perfect with m = 1: %s; identity forms n = 2..5 not perfect: %s", ok ? "yes" : "no",
             identities_fail ? "yes" : "no"));
}

void crypto_round_trips() {
  std::mt19937_64 g(8);
  std::map<std::string, int> ok;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const RsaKeyPair rsa = rsa_keygen(s, 256);
    const Integer m = Integer(std::to_string(g() % 1000000007));
    ok["RSA"] += rsa_decrypt(rsa.priv, rsa_encrypt(rsa.pub, m)) == m;

    const DhGroup group = generate_dh_group(s, 64);
    const ElGamalKeyPair eg = elgamal_keygen(group, s);
    const Integer em = 1 + Integer(std::to_string(g() % 1000000));
    ok["ElGamal"] += elgamal_decrypt(eg.priv, elgamal_encrypt(eg.pub, em, s + 7)) == em;

    const EcDomain dom = ec_test_domain_64();
    const EcKeyPair ec = ec_elgamal_keygen(dom, s);
    const EcPoint pm = ec_mul(dom.curve, Integer(std::to_string(1 + g() % 1000000)), dom.base);
    ok["EC-ElGamal"] += ec_elgamal_decrypt(ec.priv, ec_elgamal_encrypt(ec.pub, pm, s + 11)) == pm;

    const GghKeyPair ggh = ggh_keygen(s, GghParams{});
    IntVector gm(4);
    for (auto& v : gm) v = static_cast<long>(g() % 201) - 100;
    try {
      ok["GGH"] += ggh_decrypt(ggh, ggh_encrypt(ggh.public_key(), gm, 3, s)) == gm;
    } catch (const Error&) {
    }

    for (const NtruParams p : {NtruParams{7, 3, 41, 2}, NtruParams{11, 3, 67, 3}}) {
      const NtruKeys k = ntru_keygen(p, s);
      Coeffs nm(p.n);
      for (auto& v : nm) v = static_cast<std::int64_t>(g() % 3) - 1;
      try {
        ok[fmt("NTRU(%lld,%lld,%lld,%lld)", (long long)p.n, (long long)p.p, (long long)p.q, (long long)p.d)] +=
            ntru_decrypt(k, ntru_encrypt(k.public_key(), nm, s)) == nm;
      } catch (const Error&) {
      }
    }
  }
  bool all = ok.size() == 6;
  std::string detail;
  for (const auto& [name, count] : ok) {
    all = all && count == 100;
    detail += name + " " + std::to_string(count) + "/100; ";
  }

  const AdKeyPair ad = ad_keygen(11, 8, 1.0);
  const double tau = 0.125;
  int zero_errors = 0, false_zero = 0;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    zero_errors += ad_decrypt_bit(ad, ad_encrypt_bit(ad.public_key(), 0, s), tau) != 0;
    false_zero += ad_decrypt_bit(ad, ad_encrypt_bit(ad.public_key(), 1, s + 100000), tau) == 0;
  }
  const double rate = false_zero / 1000.0, se = std::sqrt(2 * tau * (1 - 2 * tau) / 1000.0);
  const bool ad_ok = zero_errors == 0 && std::abs(rate - 2 * tau) <= 3 * se;
  detail += fmt("Ajtai-Dwork bit-0 errors %d/1000, bit-1 false-0 rate %.3f vs %.3f (3 se = %.4f)", zero_errors, rate,
                2 * tau, 3 * se);
  report("8", all && ad_ok, detail);
}

void gate_example() {
  const std::vector<std::size_t> targets{1, 0};
  const QuantumState out = apply_gate(gate_demo_input(), fourier_gate(2), targets);
  const Amplitude c(0, 1 / (2 * std::sqrt(2.0)));
  const std::vector<Amplitude> want{c, c, c, c, 0.0, 0.5, 0.0, 0.5};
  double worst = 0;
  for (std::size_t i = 0; i < 8; ++i) worst = std::max(worst, std::abs(out.amplitude(i) - want[i]));
  report("9", worst <= 1e-12, fmt("largest amplitude error %.3g", worst));
}

int run_quiet(const std::vector<std::string>& args, std::string& out) {
  std::istringstream in;
  std::ostringstream o, e;
  const int code = run_cli(args, in, o, e);
  out = o.str();
  return code;
}

void shor() {
  bool ok = true;
  std::string detail;
  for (std::uint64_t n : {15u, 21u}) {
    int first_try = 0, other_codes = 0, unresolved = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      bool done = false;
      for (std::uint64_t retry = 0; retry < 20 && !done; ++retry) {
        std::string out;
        const int code =
            run_quiet({"quantum", "factor", "--n", std::to_string(n), "--seed", std::to_string(seed + 1000 * retry)},
                      out);
        if (code == kExitOk) {
          const std::uint64_t f = std::stoull(parse_document(out).payload.at("factor").get<std::string>());
          if (f > 1 && f < n && n % f == 0) {
            done = true;
            first_try += retry == 0;
          }
        } else if (code != kExitAlgorithm) {
          ++other_codes;
          break;
        }
      }
      unresolved += !done;
    }
    ok = ok && first_try >= 100 && other_codes == 0 && unresolved == 0;
    detail += fmt("n = %llu first-invocation success %d/200, non-5 failures %d, unresolved after retries %d; ",
                  (unsigned long long)n, first_try, other_codes, unresolved);
  }

  const OrderDistribution d = order_outcome_distribution(15, 7, 8);
  const std::size_t samples = 10000;
  std::map<std::uint64_t, std::size_t> counts;
  for (std::uint64_t b : sample_outcomes(d, samples, 10)) ++counts[b];
  bool peaks = true;
  for (std::uint64_t b : {0u, 64u, 128u, 192u}) {
    const double p = d.probabilities[b];
    const double se = std::sqrt(p * (1 - p) / samples);
    peaks = peaks && std::abs(p - 0.25) < 1e-12 && std::abs(double(counts[b]) / samples - p) <= 3 * se;
    detail += fmt("b=%llu %.4f/%.4f ", (unsigned long long)b, double(counts[b]) / samples, p);
  }
  report("10", ok && peaks && counts.size() == 4, detail);
}

void oracle_equivalence() {
  std::mt19937_64 g(11);
  int checked = 0, mismatches = 0, skipped = 0;
  while (checked < 100) {
    const std::size_t n = 2 + checked % 3;
    const QuadraticForm f = gram_matrix(Basis(oracle::random_nonsingular(g, n, -6, 6)));
    std::uniform_int_distribution<int> num(-36, 36);
    std::vector<Rational> t(n);
    IntVector rounded(n);
    RatVector diff(n);
    for (std::size_t i = 0; i < n; ++i) {
      t[i] = Rational(num(g), 12);
      t[i].canonicalize();
      rounded[i] = round_half_even(t[i]);
      diff[i] = rounded[i] - t[i];
    }
    Rational diag_min = f(0, 0);
    for (std::size_t i = 1; i < n; ++i) diag_min = std::min(diag_min, f(i, i));
    // Only instances whose minimisers provably lie in the box.
    if (oracle::coefficient_reach(f.gram(), {}, diag_min) > 25 ||
        oracle::coefficient_reach(f.gram(), t, f.evaluate(diff)) > 25) {
      ++skipped;
      continue;
    }
    const SvpResult s = svp_exact(f);
    const oracle::BoxSvp bs = oracle::box_svp(f.gram(), 25);
    const CvpResult c = cvp_exact(f, t);
    const oracle::BoxCvp bc = oracle::box_cvp(f.gram(), t, 25);
    const IntVector bsw(bs.witness.begin(), bs.witness.end()), bcw(bc.witness.begin(), bc.witness.end());
    mismatches += s.length_sq != bs.length_sq || s.count_pairs != bs.count_pairs || s.witness != bsw ||
                  c.dist_sq != bc.dist_sq || c.witness != bcw;
    ++checked;
  }
  report("11", mismatches == 0,
         fmt("100 instances in dims 2-4, %d mismatches (%d draws skipped as not box-certifiable)", mismatches,
             skipped));
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void()>>> steps{
      {"1", kissing_numbers}, {"2", packing_densities}, {"3", hermite_constants}, {"4", covering},
      {"5", phi_ratios},      {"6", reduction_bounds},  {"7", perfect_forms},     {"8", crypto_round_trips},
      {"9", gate_example},    {"10", shor},             {"11", oracle_equivalence}};
  for (const auto& [id, step] : steps) {
    try {
      step();
    } catch (const std::exception& e) {
      report(id, false, std::string("threw: ") + e.what());
    }
  }
  std::printf("N/A  criterion 12: hardness results and asymptotic bounds are out of scope at desk scale\n");
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
