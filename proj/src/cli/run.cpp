#include "pqf/cli/run.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <variant>

#include "pqf/cli/document.hpp"
#include "pqf/core/catalog.hpp"
#include "pqf/geometry/geometry.hpp"
#include "pqf/quantum/quantum.hpp"
#include "pqf/reduction/reduction.hpp"
#include "pqf/solvers/solvers.hpp"

namespace pqf {

namespace {

struct Options {
  std::vector<std::string> files;
  std::optional<std::uint64_t> seed;
  std::string algo;
  std::string mode;
  std::optional<std::uint64_t> budget;
  std::optional<unsigned> precision;
  std::string params;
  std::string catalog;
  std::string target;
  std::string message;
  std::string delta;
  std::string alpha;
  std::string beta;
  std::optional<unsigned> bits;
  std::optional<std::int64_t> bound;
  std::optional<double> tau;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> x;
  std::optional<std::size_t> k;
  std::optional<std::size_t> attempts;
  std::optional<std::size_t> rounds;
};

[[noreturn]] void usage(const std::string& what) { fail(ErrorKind::kUsage, what); }

std::uint64_t need_seed(const Options& o) {
  if (!o.seed) usage("this operation is randomized and requires --seed");
  return *o.seed;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

Integer flag_integer(const std::string& text, const std::string& flag) {
  try {
    return parse_integer(text);
  } catch (const Error&) {
    usage(flag + ": \"" + text + "\" is not an integer");
  }
}

Rational flag_rational(const std::string& text, const std::string& flag) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    usage(flag + ": \"" + text + "\" is not a rational number");
  }
}

IntVector flag_int_list(const std::string& text, const std::string& flag) {
  if (text.empty()) usage(flag + " is required");
  IntVector v;
  for (const std::string& part : split(text, ',')) v.push_back(flag_integer(part, flag));
  return v;
}

RatVector flag_rat_list(const std::string& text, const std::string& flag) {
  if (text.empty()) usage(flag + " is required");
  RatVector v;
  for (const std::string& part : split(text, ',')) v.push_back(flag_rational(part, flag));
  return v;
}

std::int64_t small(const Integer& v, const std::string& flag) {
  if (!v.fits_slong_p()) usage(flag + ": value out of range");
  return v.get_si();
}

class Inputs {
 public:
  Inputs(const Options& o, std::istream& in) : o_(o), in_(in) {}

  Document load(std::size_t index, const std::string& what) {
    if (index >= o_.files.size()) usage("missing " + what + " document argument");
    const std::string& path = o_.files[index];
    std::string text;
    if (path == "-") {
      if (stdin_used_) usage("stdin can be read only once");
      stdin_used_ = true;
      std::ostringstream ss;
      ss << in_.rdbuf();
      text = ss.str();
    } else {
      std::ifstream f(path, std::ios::binary);
      if (!f) usage("cannot read " + path);
      std::ostringstream ss;
      ss << f.rdbuf();
      text = ss.str();
    }
    return parse_document(text);
  }

 private:
  const Options& o_;
  std::istream& in_;
  bool stdin_used_ = false;
};

using LatticeInput = std::variant<Basis, QuadraticForm>;

LatticeInput lattice_input(const Options& o, Inputs& inputs) {
  if (!o.catalog.empty()) {
    if (!o.files.empty()) usage("give either a document or --catalog, not both");
    CatalogEntry e = catalog(o.catalog);
    if (e.basis) return *e.basis;
    return e.form;
  }
  Document d = inputs.load(0, "lattice or form");
  if (d.kind == DocumentKind::kLattice) return basis_from(d);
  if (d.kind == DocumentKind::kForm) return form_from(d);
  fail(ErrorKind::kSchemaViolation, "kind: expected a lattice or form document");
}

QuadraticForm as_form(const LatticeInput& in) {
  if (const Basis* b = std::get_if<Basis>(&in)) return gram_matrix(*b);
  return std::get<QuadraticForm>(in);
}

LllParams lll_params(const Options& o) {
  if (o.mode.empty() || o.mode == "classical") {
    return LllParams::classical(o.delta.empty() ? Rational(3, 4) : flag_rational(o.delta, "--delta"));
  }
  if (o.mode == "paper-sigma") {
    if (!o.delta.empty()) usage("--delta applies to --mode classical only");
    return LllParams::paper_sigma();
  }
  usage("--mode must be classical or paper-sigma");
}

Json reduction_json(const ReductionReport& r) {
  Json j = Json::object();
  j["reduced_form"] = to_json(r.reduced_form.gram());
  if (r.reduced_basis) j["reduced_basis"] = to_json(r.reduced_basis->rows());
  j["transform"] = to_json(r.transform.entries());
  j["iterations"] = r.iterations;
  Json cert = Json::object();
  for (const Certification& c : r.certified) cert[c.criterion] = c.holds;
  j["certified"] = cert;
  j["all_certified"] = r.all_certified();
  return j;
}

Json check_json(const ReducednessCheck& c) {
  Json j{{"holds", c.holds}};
  if (!c.holds) {
    j["condition"] = c.condition;
    j["i"] = c.i;
    j["j"] = c.j;
    j["value"] = to_json(c.value);
  }
  return j;
}

// ---- lattice ----

Document lattice_reduce(const Options& o, Inputs& inputs) {
  const LatticeInput in = lattice_input(o, inputs);
  const std::string algo = o.algo.empty() ? "lll" : o.algo;
  const Basis* basis = std::get_if<Basis>(&in);
  const QuadraticForm form = as_form(in);
  std::optional<ReductionReport> r;
  if (algo == "lll") {
    const LllParams p = lll_params(o);
    r = basis ? lll_reduce(*basis, p) : lll_reduce(form, p);
  } else if (algo == "gauss") {
    r = basis ? gauss_reduce(*basis) : gauss_reduce(form);
  } else if (algo == "size") {
    r = basis ? size_reduce(*basis) : size_reduce(form);
  } else if (algo == "kz") {
    r = basis ? kz_reduce(*basis) : kz_reduce(form);
  } else if (algo == "minkowski") {
    r = minkowski_reduce(form);
    if (basis) r->reduced_basis = apply_unimodular(*basis, r->transform);
  } else {
    usage("--algo must be one of lll, gauss, size, kz, minkowski");
  }
  Json j = reduction_json(*r);
  j["operation"] = "reduce";
  j["algo"] = algo;
  if (algo == "lll") j["mode"] = o.mode.empty() ? "classical" : o.mode;
  if (o.precision) {
    const Basis approx = form_to_basis(r->reduced_form, *o.precision);
    Json rows = Json::array();
    for (std::size_t i = 0; i < approx.dim(); ++i) {
      Json row = Json::array();
      for (const Rational& v : approx.row(i)) row.push_back(v.get_d());
      rows.push_back(row);
    }
    j["approx_cholesky_basis"] = rows;
  }
  return report_document(j);
}

Document lattice_svp(const Options& o, Inputs& inputs) {
  const LatticeInput in = lattice_input(o, inputs);
  const Basis* basis = std::get_if<Basis>(&in);
  const SvpResult s = basis ? svp_exact(*basis) : svp_exact(std::get<QuadraticForm>(in));
  Json j{{"operation", "svp"},
         {"length_sq", to_json(s.length_sq)},
         {"witness", to_json(s.witness)},
         {"count_pairs", s.count_pairs.get_ui()},
         {"approx_length", std::sqrt(s.length_sq.get_d())}};
  if (basis) j["vector"] = to_json(lattice_point(*basis, s.witness));
  return report_document(j);
}

Document lattice_cvp(const Options& o, Inputs& inputs) {
  const LatticeInput in = lattice_input(o, inputs);
  const Basis* basis = std::get_if<Basis>(&in);
  const RatVector target = flag_rat_list(o.target, "--target");
  const std::string algo = o.algo.empty() ? "exact" : o.algo;
  CvpResult c;
  if (algo == "exact") {
    c = basis ? cvp_exact(*basis, target) : cvp_exact(std::get<QuadraticForm>(in), target);
  } else if (algo == "babai") {
    const LllParams p = lll_params(o);
    c = basis ? babai_round(*basis, target, p) : babai_round(std::get<QuadraticForm>(in), target, p);
  } else {
    usage("--algo must be exact or babai");
  }
  Json j{{"operation", "cvp"},
         {"algo", algo},
         {"dist_sq", to_json(c.dist_sq)},
         {"witness", to_json(c.witness)},
         {"approx_dist", std::sqrt(c.dist_sq.get_d())}};
  if (basis) j["point"] = to_json(lattice_point(*basis, c.witness));
  return report_document(j);
}

Document lattice_analyze(const Options& o, Inputs& inputs) {
  const std::uint64_t seed = need_seed(o);
  const LatticeInput in = lattice_input(o, inputs);
  const QuadraticForm f = as_form(in);
  const std::size_t n = f.dim();
  const std::uint64_t budget = o.budget.value_or(20000);
  Json j{{"operation", "analyze"}, {"dim", n}};
  const LatticeDeterminant det = lattice_determinant(f);
  j["determinant_sq"] = to_json(det.squared);
  j["approx_determinant"] = det.approx;
  Json skipped = Json::array();
  if (n <= 10) {
    const PackingReport p = packing_report(f);
    j["length_sq"] = to_json(p.length_sq);
    j["kissing_pairs"] = p.kissing_pairs.get_ui();
    j["kissing_number"] = 2 * p.kissing_pairs.get_ui();
    j["approx_packing_radius"] = p.packing_radius;
    j["approx_packing_density"] = p.density;
    j["gamma"] = to_json(gamma_functional(f));
  } else {
    skipped.push_back("packing");
  }
  if (n <= 8) {
    j["minkowski_length_bound"] = minkowski_length_check(f);
  } else {
    skipped.push_back("minkowski_length_bound");
  }
  if (n <= 6) {
    const CoveringReport c = covering_radius_estimate(f, budget, seed);
    j["approx_covering_radius_lo"] = c.covering_radius_lo;
    j["approx_covering_radius_hi"] = c.covering_radius_hi;
    j["approx_covering_density_lo"] = c.density_lo;
    j["approx_covering_density_hi"] = c.density_hi;
    j["deep_hole_candidate"] = to_json(c.best_point);
    j["deep_hole_dist_sq"] = to_json(c.best_dist_sq);
    j["evaluations"] = c.evaluations;
    const RealBracket phi = phi_ratio(f, budget, seed);
    j["approx_phi_lo"] = phi.lo;
    j["approx_phi_hi"] = phi.hi;
  } else {
    skipped.push_back("covering");
  }
  j["skipped"] = skipped;
  return report_document(j);
}

// ---- form ----

QuadraticForm form_input(const Options& o, Inputs& inputs) { return as_form(lattice_input(o, inputs)); }

Document form_check(const Options& o, Inputs& inputs) {
  const QuadraticForm f = form_input(o, inputs);
  const std::size_t n = f.dim();
  Json j{{"operation", "check"}, {"dim", n}};
  j["size_reduced"] = check_json(is_size_reduced(f));
  j["lll_classical"] = check_json(is_lll_reduced(f, LllParams::classical()));
  if (n >= 2) j["lll_paper_sigma"] = check_json(is_lll_reduced(f, LllParams::paper_sigma()));
  if (n == 2) j["lagrange"] = is_lagrange_reduced(f);
  if (n == 3) j["gauss_ternary"] = is_gauss_ternary_reduced(f);
  if (n <= 6) j["minkowski"] = is_minkowski_reduced(f);
  if (n <= 8) j["kz"] = check_json(is_kz_reduced(f));
  return report_document(j);
}

Document form_gamma(const Options& o, Inputs& inputs) {
  const QuadraticForm f = form_input(o, inputs);
  const Rational g = gamma_functional(f);
  const SvpResult s = svp_exact(f);
  return report_document(Json{{"operation", "gamma"},
                              {"gamma", to_json(g)},
                              {"approx_gamma", g.get_d()},
                              {"minimum", to_json(s.length_sq)},
                              {"determinant", to_json(determinant(f.gram()))}});
}

Document form_perfect(const Options& o, Inputs& inputs) {
  const QuadraticForm f = form_input(o, inputs);
  const PerfectionReport p = is_perfect_form(f);
  return report_document(Json{{"operation", "perfect"},
                              {"perfect", p.perfect},
                              {"rank", p.rank},
                              {"unknowns", p.unknowns},
                              {"minimum", to_json(p.minimum)},
                              {"minimal_pairs", p.minimal_pairs}});
}

// ---- crypto ----

Document dh_keygen(const Options& o, Inputs&) {
  return key_document(generate_dh_group(need_seed(o), o.bits.value_or(128)));
}

Document dh_exchange_cmd(const Options& o, Inputs& inputs) {
  DhGroup g;
  if (!o.params.empty()) {
    const IntVector v = flag_int_list(o.params, "--params");
    if (v.size() != 2) usage("--params for dh is p,g");
    g = make_dh_group(v[0], v[1]);
  } else {
    g = dh_group_from(inputs.load(0, "dh key"));
  }
  DhTranscript t;
  if (!o.alpha.empty() || !o.beta.empty()) {
    if (o.alpha.empty() || o.beta.empty()) usage("give both --alpha and --beta");
    t = dh_exchange(g, flag_integer(o.alpha, "--alpha"), flag_integer(o.beta, "--beta"));
  } else {
    Rng r(need_seed(o));
    const std::uint64_t a_seed = r.derive("alice").next_u64();
    const std::uint64_t b_seed = r.derive("bob").next_u64();
    t = dh_exchange_seeded(g, a_seed, b_seed);
  }
  return report_document(Json{{"operation", "dh-exchange"},
                              {"p", to_json(g.p)},
                              {"g", to_json(g.g)},
                              {"alpha", to_json(t.alpha)},
                              {"beta", to_json(t.beta)},
                              {"a", to_json(t.a)},
                              {"b", to_json(t.b)},
                              {"key", to_json(t.key_alice)},
                              {"keys_agree", t.key_alice == t.key_bob}});
}

Document rsa_keygen_cmd(const Options& o, Inputs&) {
  return key_document(rsa_keygen(need_seed(o), o.bits.value_or(512)));
}

Document rsa_encrypt_cmd(const Options& o, Inputs& inputs) {
  const RsaPublicKey pub = rsa_public_from(inputs.load(0, "rsa key"));
  const Integer c = rsa_encrypt(pub, flag_integer(o.message, "--message"));
  return ciphertext_document("rsa", Json{{"c", to_json(c)}});
}

Document rsa_decrypt_cmd(const Options&, Inputs& inputs) {
  const RsaPrivateKey priv = rsa_private_from(inputs.load(0, "rsa key"));
  const Document cipher = inputs.load(1, "rsa ciphertext");
  const Json& data = ciphertext_data(cipher, "rsa");
  const Integer m = rsa_decrypt(priv, json_integer(require_field(data, "c", "payload.data"), "payload.data.c"));
  return report_document(Json{{"operation", "rsa-decrypt"}, {"message", to_json(m)}});
}

DhGroup group_from_flags(const Options& o, std::uint64_t seed) {
  if (!o.params.empty()) {
    const IntVector v = flag_int_list(o.params, "--params");
    if (v.size() != 2) usage("--params for elgamal is p,g");
    return make_dh_group(v[0], v[1]);
  }
  return generate_dh_group(seed, o.bits.value_or(256));
}

Document elgamal_keygen_cmd(const Options& o, Inputs&) {
  const std::uint64_t seed = need_seed(o);
  return key_document(elgamal_keygen(group_from_flags(o, seed), seed));
}

Document elgamal_encrypt_cmd(const Options& o, Inputs& inputs) {
  const ElGamalPublicKey pub = elgamal_public_from(inputs.load(0, "elgamal key"));
  const ElGamalCiphertext c = elgamal_encrypt(pub, flag_integer(o.message, "--message"), need_seed(o));
  return ciphertext_document("elgamal", Json{{"c1", to_json(c.c1)}, {"c2", to_json(c.c2)}});
}

Document elgamal_decrypt_cmd(const Options&, Inputs& inputs) {
  const ElGamalPrivateKey priv = elgamal_private_from(inputs.load(0, "elgamal key"));
  const Document cipher = inputs.load(1, "elgamal ciphertext");
  const Json& data = ciphertext_data(cipher, "elgamal");
  const ElGamalCiphertext c{json_integer(require_field(data, "c1", "payload.data"), "payload.data.c1"),
                            json_integer(require_field(data, "c2", "payload.data"), "payload.data.c2")};
  return report_document(Json{{"operation", "elgamal-decrypt"}, {"message", to_json(elgamal_decrypt(priv, c))}});
}

Document ecc_keygen_cmd(const Options& o, Inputs&) {
  EcDomain d = ec_test_domain_64();
  if (!o.params.empty()) {
    const IntVector v = flag_int_list(o.params, "--params");
    if (v.size() != 6) usage("--params for ecc is p,a,b,x,y,order");
    EllipticCurve curve(v[0], v[1], v[2]);
    const EcPoint base = EcPoint::affine(v[3], v[4]);
    require_on_curve(curve, base);
    if (v[5] < 2 || !ec_mul(curve, v[5], base).infinity) {
      fail(ErrorKind::kInvariantViolation, "base point does not have the stated order");
    }
    d = EcDomain{curve, base, v[5]};
  }
  return key_document(ec_elgamal_keygen(d, need_seed(o)));
}

Document ecc_encrypt_cmd(const Options& o, Inputs& inputs) {
  const EcPublicKey pub = ec_public_from(inputs.load(0, "ecc key"));
  const IntVector m = flag_int_list(o.message, "--message");
  if (m.size() != 2) usage("--message for ecc is x,y");
  const EcCiphertext c = ec_elgamal_encrypt(pub, EcPoint::affine(m[0], m[1]), need_seed(o));
  return ciphertext_document("ecc", Json{{"c1", point_to_json(c.c1)}, {"c2", point_to_json(c.c2)}});
}

Document ecc_decrypt_cmd(const Options&, Inputs& inputs) {
  const EcPrivateKey priv = ec_private_from(inputs.load(0, "ecc key"));
  const Document cipher = inputs.load(1, "ecc ciphertext");
  const Json& data = ciphertext_data(cipher, "ecc");
  const EcCiphertext c{point_from_json(require_field(data, "c1", "payload.data"), "payload.data.c1"),
                       point_from_json(require_field(data, "c2", "payload.data"), "payload.data.c2")};
  require_on_curve(priv.domain.curve, c.c1);
  require_on_curve(priv.domain.curve, c.c2);
  return report_document(
      Json{{"operation", "ecc-decrypt"}, {"message", point_to_json(ec_elgamal_decrypt(priv, c))}});
}

Document ggh_keygen_cmd(const Options& o, Inputs&) {
  GghParams p;
  if (!o.params.empty()) {
    const std::vector<std::string> parts = split(o.params, ',');
    if (parts.size() < 2 || parts.size() > 4) usage("--params for ggh is n,k[,defect_threshold[,message_bound]]");
    p.n = static_cast<std::size_t>(small(flag_integer(parts[0], "--params"), "--params"));
    p.k = small(flag_integer(parts[1], "--params"), "--params");
    if (parts.size() >= 3) p.defect_threshold = flag_rational(parts[2], "--params").get_d();
    if (parts.size() == 4) p.message_bound = small(flag_integer(parts[3], "--params"), "--params");
  }
  require_dimension_at_most(p.n, 32, "ggh_keygen");
  return key_document(ggh_keygen(need_seed(o), p));
}

Document ggh_encrypt_cmd(const Options& o, Inputs& inputs) {
  const GghPublicKey pub = ggh_public_from(inputs.load(0, "ggh key"));
  const IntVector c = ggh_encrypt(pub, flag_int_list(o.message, "--message"), o.bound.value_or(3), need_seed(o));
  return ciphertext_document("ggh", Json{{"c", to_json(c)}});
}

Document ggh_decrypt_cmd(const Options&, Inputs& inputs) {
  const GghKeyPair key = ggh_keys_from(inputs.load(0, "ggh key"));
  const Document cipher = inputs.load(1, "ggh ciphertext");
  const Json& data = ciphertext_data(cipher, "ggh");
  const IntVector m = ggh_decrypt(key, json_int_vector(require_field(data, "c", "payload.data"), "payload.data.c"));
  return report_document(Json{{"operation", "ggh-decrypt"}, {"message", to_json(m)}});
}

Document ad_keygen_cmd(const Options& o, Inputs&) {
  std::size_t n = 8;
  double m_bound = 1.0;
  double d = 0.0;
  if (!o.params.empty()) {
    const std::vector<std::string> parts = split(o.params, ',');
    if (parts.size() < 2 || parts.size() > 3) usage("--params for ad is n,M[,d]");
    n = static_cast<std::size_t>(small(flag_integer(parts[0], "--params"), "--params"));
    m_bound = flag_rational(parts[1], "--params").get_d();
    if (parts.size() == 3) d = flag_rational(parts[2], "--params").get_d();
  }
  require_dimension_at_most(n, 16, "ad_keygen");
  return key_document(ad_keygen(need_seed(o), n, m_bound, d));
}

Document ad_encrypt_cmd(const Options& o, Inputs& inputs) {
  const AdPublicKey pub = ad_public_from(inputs.load(0, "ad key"));
  const Integer bit = flag_integer(o.message, "--message");
  if (bit != 0 && bit != 1) usage("--message for ad is 0 or 1");
  return ciphertext_document("ad", Json{{"c", to_json(ad_encrypt_bit(pub, static_cast<int>(bit.get_si()), need_seed(o)))}});
}

Document ad_decrypt_cmd(const Options& o, Inputs& inputs) {
  const AdKeyPair key = ad_keys_from(inputs.load(0, "ad key"));
  const Document cipher = inputs.load(1, "ad ciphertext");
  const Json& data = ciphertext_data(cipher, "ad");
  const RatVector c = json_rat_vector(require_field(data, "c", "payload.data"), "payload.data.c");
  const double tau = o.tau.value_or(0.125);
  const int bit = ad_decrypt_bit(key, c, tau);
  const Rational gamma = ad_gamma(key, c);
  return report_document(Json{{"operation", "ad-decrypt"},
                              {"bit", std::to_string(bit)},
                              {"gamma", to_json(gamma)},
                              {"approx_gamma", gamma.get_d()},
                              {"approx_tau", tau}});
}

NtruParams ntru_params_flag(const Options& o) {
  const IntVector v = flag_int_list(o.params, "--params");
  if (v.size() != 4) usage("--params for ntru is N,p,q,d");
  return NtruParams{small(v[0], "--params"), small(v[1], "--params"), small(v[2], "--params"),
                    small(v[3], "--params")};
}

Document ntru_keygen_cmd(const Options& o, Inputs&) {
  const NtruParams p = ntru_params_flag(o);
  if (p.n > 4096) fail(ErrorKind::kSizeCap, "ntru: N above 4096");
  return key_document(ntru_keygen(p, need_seed(o)));
}

Document ntru_encrypt_cmd(const Options& o, Inputs& inputs) {
  const NtruPublicKey pub = ntru_public_from(inputs.load(0, "ntru key"));
  Coeffs m;
  for (const Integer& v : flag_int_list(o.message, "--message")) m.push_back(small(v, "--message"));
  const RingPoly c = ntru_encrypt(pub, m, need_seed(o));
  Json coeffs = Json::array();
  for (std::int64_t v : c.coeffs()) coeffs.push_back(std::to_string(v));
  return ciphertext_document("ntru", Json{{"c", coeffs}});
}

Document ntru_decrypt_cmd(const Options&, Inputs& inputs) {
  const NtruKeys keys = ntru_keys_from(inputs.load(0, "ntru key"));
  const Document cipher = inputs.load(1, "ntru ciphertext");
  const Json& data = ciphertext_data(cipher, "ntru");
  Coeffs c;
  for (const Integer& v : json_int_vector(require_field(data, "c", "payload.data"), "payload.data.c")) {
    if (v < 0 || v >= keys.params.q) fail(ErrorKind::kSchemaViolation, "payload.data.c: coefficients must lie in [0, q)");
    c.push_back(v.get_si());
  }
  if (c.size() != static_cast<std::size_t>(keys.params.n)) {
    fail(ErrorKind::kSchemaViolation, "payload.data.c: expected N coefficients");
  }
  const Coeffs m = ntru_decrypt(keys, RingPoly(keys.params.q, c));
  Json out = Json::array();
  for (std::int64_t v : m) out.push_back(std::to_string(v));
  return report_document(Json{{"operation", "ntru-decrypt"}, {"message", out}});
}

// ---- quantum ----

std::uint64_t need(const std::optional<std::uint64_t>& v, const char* flag) {
  if (!v) usage(std::string(flag) + " is required");
  return *v;
}

Document quantum_order_find(const Options& o, Inputs&) {
  const std::uint64_t n = need(o.n, "--n");
  const std::uint64_t x = need(o.x, "--x");
  const OrderFindResult r = order_find(n, x, o.k.value_or(0), need_seed(o), o.rounds.value_or(0));
  Json samples = Json::array();
  for (std::uint64_t b : r.samples) samples.push_back(std::to_string(b));
  Json cands = Json::array();
  for (std::uint64_t c : r.candidates) cands.push_back(std::to_string(c));
  const std::size_t k = o.k.value_or(order_register_bits(n));
  return report_document(Json{{"operation", "order-find"},
                              {"n", std::to_string(n)},
                              {"x", std::to_string(x)},
                              {"q", std::to_string(std::uint64_t{1} << k)},
                              {"r", std::to_string(r.r)},
                              {"rounds", r.rounds},
                              {"samples", samples},
                              {"candidates", cands}});
}

Document quantum_factor(const Options& o, Inputs&) {
  const std::uint64_t n = need(o.n, "--n");
  const FactorResult f = shor_factor(n, need_seed(o), o.attempts.value_or(1));
  return report_document(Json{{"operation", "factor"},
                              {"n", std::to_string(n)},
                              {"factor", std::to_string(f.factor)},
                              {"cofactor", std::to_string(n / f.factor)},
                              {"x", std::to_string(f.x)},
                              {"r", std::to_string(f.r)},
                              {"gcd_shortcut", f.r == 0},
                              {"attempts", f.attempts}});
}

Json state_json(const QuantumState& s) {
  Json a = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Amplitude& v = s.amplitude(i);
    if (std::abs(v) < 1e-15) continue;
    a.push_back(Json{{"ket", ket_label(s.num_qubits(), i)}, {"approx_re", v.real()}, {"approx_im", v.imag()}});
  }
  return a;
}

Document quantum_gate_demo(const Options&, Inputs&) {
  const QuantumState in = gate_demo_input();
  const std::size_t targets[] = {1, 0};
  const QuantumState out = apply_gate(in, fourier_gate(2), targets);
  return report_document(Json{{"operation", "gate-demo"},
                              {"input", state_json(in)},
                              {"output", state_json(out)},
                              {"approx_norm_sq", out.norm_sq()}});
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage: return kExitUsage;
    case ErrorKind::kMalformedInput:
    case ErrorKind::kSchemaViolation: return kExitParse;
    case ErrorKind::kInvariantViolation: return kExitInvariant;
    case ErrorKind::kAlgorithmFailure: return kExitAlgorithm;
    case ErrorKind::kSizeCap: return kExitSizeCap;
  }
  return kExitAlgorithm;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Lattices, lattice cryptography and quantum order finding", "pqf"};
  app.require_subcommand(1);
  using Handler = std::function<Document(const Options&, Inputs&)>;
  std::map<CLI::App*, Handler> handlers;

  auto files = [&](CLI::App* c) { c->add_option("documents", o.files, "Input documents (- for stdin)"); };
  auto seed = [&](CLI::App* c) { c->add_option("--seed", o.seed, "Seed for randomized steps"); };
  auto lattice_source = [&](CLI::App* c) {
    files(c);
    c->add_option("--catalog", o.catalog, "Named lattice instead of a document");
  };

  CLI::App* lattice = app.add_subcommand("lattice", "Lattice operations");
  lattice->require_subcommand(1);
  {
    CLI::App* c = lattice->add_subcommand("reduce", "Reduce a basis or form");
    lattice_source(c);
    c->add_option("--algo", o.algo, "lll, gauss, size, kz or minkowski");
    c->add_option("--mode", o.mode, "classical or paper-sigma");
    c->add_option("--delta", o.delta, "Lovasz parameter for classical mode");
    c->add_option("--precision", o.precision, "Bits for an approximate Cholesky basis of the result");
    handlers[c] = lattice_reduce;
    c = lattice->add_subcommand("svp", "Exact shortest vector");
    lattice_source(c);
    handlers[c] = lattice_svp;
    c = lattice->add_subcommand("cvp", "Closest vector");
    lattice_source(c);
    c->add_option("--target", o.target, "Comma separated target (ambient for lattices, coefficients for forms)");
    c->add_option("--algo", o.algo, "exact or babai");
    c->add_option("--mode", o.mode, "LLL mode for babai");
    c->add_option("--delta", o.delta, "Lovasz parameter for babai");
    handlers[c] = lattice_cvp;
    c = lattice->add_subcommand("analyze", "Packing, covering and Hermite data");
    lattice_source(c);
    seed(c);
    c->add_option("--budget", o.budget, "Covering evaluations");
    handlers[c] = lattice_analyze;
  }

  CLI::App* form = app.add_subcommand("form", "Quadratic form operations");
  form->require_subcommand(1);
  {
    CLI::App* c = form->add_subcommand("check", "Reducedness predicates");
    lattice_source(c);
    handlers[c] = form_check;
    c = form->add_subcommand("gamma", "m(F)^n / det");
    lattice_source(c);
    handlers[c] = form_gamma;
    c = form->add_subcommand("perfect", "Perfection test");
    lattice_source(c);
    handlers[c] = form_perfect;
  }

  CLI::App* crypto = app.add_subcommand("crypto", "Cryptosystems");
  crypto->require_subcommand(1);
  auto scheme = [&](const char* name, const char* help,
                    std::initializer_list<std::pair<const char*, Handler>> actions) {
    CLI::App* s = crypto->add_subcommand(name, help);
    s->require_subcommand(1);
    for (const auto& [action, handler] : actions) {
      CLI::App* c = s->add_subcommand(action, std::string(name) + " " + action);
      files(c);
      seed(c);
      c->add_option("--params", o.params, "Scheme parameters, comma separated");
      c->add_option("--bits", o.bits, "Modulus size");
      c->add_option("--message", o.message, "Plaintext");
      c->add_option("--bound", o.bound, "Perturbation bound");
      c->add_option("--tau", o.tau, "Decryption threshold");
      c->add_option("--alpha", o.alpha, "Alice's exponent");
      c->add_option("--beta", o.beta, "Bob's exponent");
      handlers[c] = handler;
    }
  };
  scheme("dh", "Diffie-Hellman", {{"keygen", dh_keygen}, {"exchange", dh_exchange_cmd}});
  scheme("rsa", "RSA", {{"keygen", rsa_keygen_cmd}, {"encrypt", rsa_encrypt_cmd}, {"decrypt", rsa_decrypt_cmd}});
  scheme("elgamal", "ElGamal",
         {{"keygen", elgamal_keygen_cmd}, {"encrypt", elgamal_encrypt_cmd}, {"decrypt", elgamal_decrypt_cmd}});
  scheme("ecc", "Elliptic-curve ElGamal",
         {{"keygen", ecc_keygen_cmd}, {"encrypt", ecc_encrypt_cmd}, {"decrypt", ecc_decrypt_cmd}});
  scheme("ggh", "GGH", {{"keygen", ggh_keygen_cmd}, {"encrypt", ggh_encrypt_cmd}, {"decrypt", ggh_decrypt_cmd}});
  scheme("ad", "Ajtai-Dwork", {{"keygen", ad_keygen_cmd}, {"encrypt", ad_encrypt_cmd}, {"decrypt", ad_decrypt_cmd}});
  scheme("ntru", "NTRU", {{"keygen", ntru_keygen_cmd}, {"encrypt", ntru_encrypt_cmd}, {"decrypt", ntru_decrypt_cmd}});

  CLI::App* quantum = app.add_subcommand("quantum", "Quantum simulation");
  quantum->require_subcommand(1);
  {
    CLI::App* c = quantum->add_subcommand("order-find", "Order of x mod n");
    seed(c);
    c->add_option("--n", o.n, "Modulus");
    c->add_option("--x", o.x, "Base");
    c->add_option("--k", o.k, "Register bits");
    c->add_option("--rounds", o.rounds, "Sampling rounds");
    handlers[c] = quantum_order_find;
    c = quantum->add_subcommand("factor", "Factor n by order finding");
    seed(c);
    c->add_option("--n", o.n, "Odd composite to factor");
    c->add_option("--attempts", o.attempts, "Random bases to try");
    handlers[c] = quantum_factor;
    c = quantum->add_subcommand("gate-demo", "Two-qubit gate on a three-qubit state");
    handlers[c] = quantum_gate_demo;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "pqf: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App* cur = &app;
  while (!cur->get_subcommands().empty()) cur = cur->get_subcommands().front();
  const auto it = handlers.find(cur);
  if (it == handlers.end()) {
    err << "pqf: incomplete command\n";
    return kExitUsage;
  }
  try {
    Inputs inputs(o, in);
    const Document doc = it->second(o, inputs);
    out << serialize_document(doc);
    return kExitOk;
  } catch (const SharedFactorError& e) {
    err << "pqf: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const Error& e) {
    err << "pqf: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "pqf: internal failure: " << e.what() << "\n";
    return kExitAlgorithm;
  }
}

}  // namespace pqf
