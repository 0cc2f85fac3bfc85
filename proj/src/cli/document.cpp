#include "pqf/cli/document.hpp"

#include <cmath>

namespace pqf {

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  fail(ErrorKind::kSchemaViolation, where + ": " + what);
}

[[noreturn]] void invariant(const std::string& what) { fail(ErrorKind::kInvariantViolation, what); }

const Json& require_object(const Json& j, const std::string& where) {
  if (!j.is_object()) schema(where, "expected an object");
  return j;
}

const Json& require_array(const Json& j, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array");
  return j;
}

std::size_t json_size(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) schema(where, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

std::string json_string(const Json& j, const std::string& where) {
  if (!j.is_string()) schema(where, "expected a string");
  return j.get<std::string>();
}

// Only the listed keys may appear.
void allow_keys(const Json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  for (const auto& [k, v] : obj.items()) {
    bool ok = false;
    for (const char* allowed : keys) ok = ok || k == allowed;
    if (!ok) schema(where, "unexpected field \"" + k + "\"");
  }
}

DocumentKind kind_from(const std::string& s) {
  if (s == "lattice") return DocumentKind::kLattice;
  if (s == "form") return DocumentKind::kForm;
  if (s == "key") return DocumentKind::kKey;
  if (s == "ciphertext") return DocumentKind::kCiphertext;
  if (s == "report") return DocumentKind::kReport;
  schema("kind", "unknown document kind \"" + s + "\"");
}

std::int64_t json_int64(const Json& j, const std::string& where) {
  const Integer v = json_integer(j, where);
  if (!v.fits_slong_p()) schema(where, "integer out of range");
  return v.get_si();
}

Coeffs json_coeffs(const Json& j, const std::string& where) {
  Coeffs out;
  for (const Integer& v : json_int_vector(j, where)) {
    if (!v.fits_slong_p()) schema(where, "coefficient out of range");
    out.push_back(v.get_si());
  }
  return out;
}

Json coeffs_json(const Coeffs& c) {
  Json a = Json::array();
  for (std::int64_t x : c) a.push_back(std::to_string(x));
  return a;
}

IntegerMatrix integer_matrix(const RationalMatrix& m, const std::string& where) {
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) schema(where, "expected integer entries");
      out(i, j) = m(i, j).get_num();
    }
  return out;
}

const Json& key_payload(const Document& doc, const std::string& scheme) {
  if (doc.kind != DocumentKind::kKey) schema("kind", "expected a key document");
  if (scheme_of(doc) != scheme) schema("payload.scheme", "expected scheme \"" + scheme + "\"");
  return doc.payload;
}

const Json& public_part(const Document& doc, const std::string& scheme) {
  return require_object(require_field(key_payload(doc, scheme), "public", "payload"), "payload.public");
}

const Json& private_part(const Document& doc, const std::string& scheme) {
  const Json& p = key_payload(doc, scheme);
  if (!p.contains("private")) schema("payload", "key document has no private part");
  return require_object(p["private"], "payload.private");
}

Document make_key(const std::string& scheme, Json pub, Json priv) {
  Json p = Json::object();
  p["scheme"] = scheme;
  p["public"] = std::move(pub);
  if (!priv.is_null()) p["private"] = std::move(priv);
  return Document{DocumentKind::kKey, kDocumentVersion, std::move(p)};
}

Json dh_json(const DhGroup& g) {
  return Json{{"p", to_json(g.p)}, {"g", to_json(g.g)}, {"exponent_range", to_json(g.exponent_range)}};
}

DhGroup dh_from_json(const Json& j, const std::string& where) {
  DhGroup g = make_dh_group(json_integer(require_field(j, "p", where), where + ".p"),
                            json_integer(require_field(j, "g", where), where + ".g"));
  const Integer range = json_integer(require_field(j, "exponent_range", where), where + ".exponent_range");
  if (range < 2 || range > g.p - 1) invariant("exponent range must lie in [2, p - 1]");
  if (powmod(g.g, range, g.p) != 1) invariant("exponent range is not a multiple of ord(g)");
  g.exponent_range = range;
  return g;
}

Json domain_json(const EcDomain& d) {
  return Json{{"p", to_json(d.curve.p())}, {"a", to_json(d.curve.a())}, {"b", to_json(d.curve.b())},
              {"base", point_to_json(d.base)}, {"order", to_json(d.order)}};
}

EcDomain domain_from_json(const Json& j, const std::string& where) {
  require_object(j, where);
  EllipticCurve curve(json_integer(require_field(j, "p", where), where + ".p"),
                      json_integer(require_field(j, "a", where), where + ".a"),
                      json_integer(require_field(j, "b", where), where + ".b"));
  EcPoint base = point_from_json(require_field(j, "base", where), where + ".base");
  require_on_curve(curve, base);
  const Integer order = json_integer(require_field(j, "order", where), where + ".order");
  if (order < 2 || !ec_mul(curve, order, base).infinity) invariant("base point does not have the stated order");
  return EcDomain{curve, base, order};
}

Json ggh_params_json(const GghParams& p) {
  return Json{{"n", to_json(Integer(static_cast<unsigned long>(p.n)))},
              {"k", to_json(Integer(static_cast<long>(p.k)))},
              {"defect_threshold", to_json(Rational(p.defect_threshold))},
              {"message_bound", to_json(Integer(static_cast<long>(p.message_bound)))}};
}

GghParams ggh_params_from(const Json& j) {
  const std::string w = "payload.params";
  require_object(j, w);
  GghParams p;
  p.n = static_cast<std::size_t>(json_int64(require_field(j, "n", w), w + ".n"));
  p.k = json_int64(require_field(j, "k", w), w + ".k");
  p.defect_threshold = json_rational(require_field(j, "defect_threshold", w), w + ".defect_threshold").get_d();
  p.message_bound = json_int64(require_field(j, "message_bound", w), w + ".message_bound");
  return p;
}

Json ntru_params_json(const NtruParams& p) {
  return Json{{"N", std::to_string(p.n)}, {"p", std::to_string(p.p)}, {"q", std::to_string(p.q)},
              {"d", std::to_string(p.d)}};
}

NtruParams ntru_params_from(const Json& j) {
  const std::string w = "payload.params";
  require_object(j, w);
  NtruParams p{json_int64(require_field(j, "N", w), w + ".N"), json_int64(require_field(j, "p", w), w + ".p"),
               json_int64(require_field(j, "q", w), w + ".q"), json_int64(require_field(j, "d", w), w + ".d")};
  validate_ntru_params(p);
  return p;
}

void validate_key(const Document& doc) {
  const std::string s = scheme_of(doc);
  const bool priv = has_private(doc);
  if (s == "dh") {
    dh_group_from(doc);
  } else if (s == "rsa") {
    priv ? (void)rsa_private_from(doc) : (void)rsa_public_from(doc);
  } else if (s == "elgamal") {
    priv ? (void)elgamal_private_from(doc) : (void)elgamal_public_from(doc);
  } else if (s == "ecc") {
    priv ? (void)ec_private_from(doc) : (void)ec_public_from(doc);
  } else if (s == "ggh") {
    priv ? (void)ggh_keys_from(doc) : (void)ggh_public_from(doc);
  } else if (s == "ad") {
    priv ? (void)ad_keys_from(doc) : (void)ad_public_from(doc);
  } else if (s == "ntru") {
    priv ? (void)ntru_keys_from(doc) : (void)ntru_public_from(doc);
  } else {
    schema("payload.scheme", "unknown scheme \"" + s + "\"");
  }
}

}  // namespace

std::string_view kind_name(DocumentKind k) {
  switch (k) {
    case DocumentKind::kLattice: return "lattice";
    case DocumentKind::kForm: return "form";
    case DocumentKind::kKey: return "key";
    case DocumentKind::kCiphertext: return "ciphertext";
    case DocumentKind::kReport: return "report";
  }
  return "report";
}

const Json& require_field(const Json& obj, const std::string& key, const std::string& where) {
  require_object(obj, where);
  const auto it = obj.find(key);
  if (it == obj.end()) schema(where, "missing field \"" + key + "\"");
  return *it;
}

Integer json_integer(const Json& j, const std::string& where) {
  const std::string s = json_string(j, where);
  try {
    return parse_integer(s);
  } catch (const Error& e) {
    schema(where, e.what());
  }
}

Rational json_rational(const Json& j, const std::string& where) {
  const std::string s = json_string(j, where);
  try {
    return parse_rational(s);
  } catch (const Error& e) {
    schema(where, e.what());
  }
}

IntVector json_int_vector(const Json& j, const std::string& where) {
  require_array(j, where);
  IntVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(json_integer(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

RatVector json_rat_vector(const Json& j, const std::string& where) {
  require_array(j, where);
  RatVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(json_rational(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

RationalMatrix json_rat_matrix(const Json& j, const std::string& where) {
  require_array(j, where);
  if (j.empty()) schema(where, "expected a non-empty matrix");
  const std::size_t rows = j.size();
  const std::size_t cols = require_array(j[0], where + "[0]").size();
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const RatVector r = json_rat_vector(j[i], where + "[" + std::to_string(i) + "]");
    if (r.size() != cols) schema(where, "ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = r[c];
  }
  return m;
}

Json to_json(const Integer& x) { return x.get_str(); }
Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const Integer& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const RatVector& v) {
  Json a = Json::array();
  for (const Rational& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const IntegerMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(IntVector(m.row(i).begin(), m.row(i).end())));
  return a;
}

Json to_json(const RationalMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(RatVector(m.row(i).begin(), m.row(i).end())));
  return a;
}

Document parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::kMalformedInput, std::string("malformed JSON: ") + e.what());
  }
  require_object(j, "document");
  allow_keys(j, {"kind", "version", "payload"}, "document");
  Document doc;
  doc.kind = kind_from(json_string(require_field(j, "kind", "document"), "kind"));
  const Json& version = require_field(j, "version", "document");
  if (!version.is_number_integer() || version.get<std::int64_t>() != kDocumentVersion) {
    schema("version", "unsupported version");
  }
  doc.payload = require_object(require_field(j, "payload", "document"), "payload");
  switch (doc.kind) {
    // Re-encoding puts every entry in lowest terms.
    case DocumentKind::kLattice: doc = lattice_document(basis_from(doc)); break;
    case DocumentKind::kForm: doc = form_document(form_from(doc)); break;
    case DocumentKind::kKey: validate_key(doc); break;
    case DocumentKind::kCiphertext:
      json_string(require_field(doc.payload, "scheme", "payload"), "payload.scheme");
      require_object(require_field(doc.payload, "data", "payload"), "payload.data");
      allow_keys(doc.payload, {"scheme", "data"}, "payload");
      break;
    case DocumentKind::kReport: break;
  }
  return doc;
}

std::string serialize_document(const Document& doc) {
  Json j = Json::object();
  j["kind"] = std::string(kind_name(doc.kind));
  j["version"] = doc.version;
  j["payload"] = doc.payload;
  return j.dump(2) + "\n";
}

Document report_document(Json payload) {
  return Document{DocumentKind::kReport, kDocumentVersion, std::move(payload)};
}

Document lattice_document(const Basis& b) {
  return Document{DocumentKind::kLattice, kDocumentVersion,
                  Json{{"dim", b.dim()}, {"basis", to_json(b.rows())}}};
}

Document form_document(const QuadraticForm& f) {
  return Document{DocumentKind::kForm, kDocumentVersion, Json{{"dim", f.dim()}, {"gram", to_json(f.gram())}}};
}

Basis basis_from(const Document& doc) {
  if (doc.kind != DocumentKind::kLattice) schema("kind", "expected a lattice document");
  allow_keys(doc.payload, {"dim", "basis"}, "payload");
  const std::size_t dim = json_size(require_field(doc.payload, "dim", "payload"), "payload.dim");
  const RationalMatrix m = json_rat_matrix(require_field(doc.payload, "basis", "payload"), "payload.basis");
  if (m.rows() != dim || m.cols() != dim) schema("payload.basis", "expected a dim x dim matrix");
  return Basis(m);
}

QuadraticForm form_from(const Document& doc) {
  if (doc.kind != DocumentKind::kForm) schema("kind", "expected a form document");
  allow_keys(doc.payload, {"dim", "gram"}, "payload");
  const std::size_t dim = json_size(require_field(doc.payload, "dim", "payload"), "payload.dim");
  const RationalMatrix m = json_rat_matrix(require_field(doc.payload, "gram", "payload"), "payload.gram");
  if (m.rows() != dim || m.cols() != dim) schema("payload.gram", "expected a dim x dim matrix");
  return QuadraticForm(m);
}

std::string scheme_of(const Document& doc) {
  if (doc.kind != DocumentKind::kKey && doc.kind != DocumentKind::kCiphertext) {
    schema("kind", "expected a key or ciphertext document");
  }
  return json_string(require_field(doc.payload, "scheme", "payload"), "payload.scheme");
}

bool has_private(const Document& doc) { return doc.payload.contains("private"); }

Json point_to_json(const EcPoint& p) {
  if (p.infinity) return "o";
  return Json::array({to_json(p.x), to_json(p.y)});
}

EcPoint point_from_json(const Json& j, const std::string& where) {
  if (j.is_string() && j.get<std::string>() == "o") return EcPoint::at_infinity();
  const IntVector v = json_int_vector(j, where);
  if (v.size() != 2) schema(where, "expected \"o\" or [x, y]");
  return EcPoint::affine(v[0], v[1]);
}

Document key_document(const DhGroup& g) { return make_key("dh", dh_json(g), nullptr); }

Document key_document(const RsaPublicKey& k) {
  return make_key("rsa", Json{{"n", to_json(k.n)}, {"e", to_json(k.e)}}, nullptr);
}

Document key_document(const RsaKeyPair& k) {
  return make_key("rsa", Json{{"n", to_json(k.pub.n)}, {"e", to_json(k.pub.e)}},
                  Json{{"d", to_json(k.priv.d)}, {"p", to_json(k.priv.p)}, {"q", to_json(k.priv.q)}});
}

Document key_document(const ElGamalKeyPair& k) {
  Json pub = dh_json(k.pub.group);
  pub["a_pub"] = to_json(k.pub.a_pub);
  return make_key("elgamal", pub, Json{{"a", to_json(k.priv.a)}});
}

Document key_document(const EcKeyPair& k) {
  Document d = make_key("ecc", Json{{"q", point_to_json(k.pub.q)}}, Json{{"n", to_json(k.priv.n)}});
  d.payload["domain"] = domain_json(k.pub.domain);
  return d;
}

Document key_document(const GghKeyPair& k) {
  Document d = make_key("ggh", Json{{"bad_basis", to_json(k.bad_basis.rows())}},
                        Json{{"good_basis", to_json(k.good_basis.rows())}, {"transform", to_json(k.transform.entries())}});
  d.payload["params"] = ggh_params_json(k.params);
  return d;
}

Document key_document(const AdKeyPair& k) {
  Json pub{{"basis", to_json(k.public_basis.rows())}, {"d", to_json(Rational(k.d))}};
  Json priv{{"basis", to_json(k.private_basis.rows())},
            {"m_bound", to_json(Rational(k.m_bound))},
            {"normal", to_json(k.normal)},
            {"scale", to_json(k.scale)}};
  return make_key("ad", pub, priv);
}

Document key_document(const NtruKeys& k) {
  Document d = make_key("ntru", Json{{"h", coeffs_json(k.h.coeffs())}},
                        Json{{"k1", coeffs_json(k.k1)}, {"k2", coeffs_json(k.k2)}});
  d.payload["params"] = ntru_params_json(k.params);
  return d;
}

DhGroup dh_group_from(const Document& doc) { return dh_from_json(public_part(doc, "dh"), "payload.public"); }

RsaPublicKey rsa_public_from(const Document& doc) {
  const Json& p = public_part(doc, "rsa");
  RsaPublicKey k{json_integer(require_field(p, "n", "payload.public"), "payload.public.n"),
                 json_integer(require_field(p, "e", "payload.public"), "payload.public.e")};
  if (k.n < 6 || k.e < 2) invariant("RSA public key out of range");
  return k;
}

RsaPrivateKey rsa_private_from(const Document& doc) {
  const RsaPublicKey pub = rsa_public_from(doc);
  const Json& s = private_part(doc, "rsa");
  const std::string w = "payload.private";
  const Integer p = json_integer(require_field(s, "p", w), w + ".p");
  const Integer q = json_integer(require_field(s, "q", w), w + ".q");
  const Integer d = json_integer(require_field(s, "d", w), w + ".d");
  const RsaKeyPair k = rsa_from_primes(p, q, pub.e);
  if (k.pub.n != pub.n || k.priv.d != d) invariant("RSA key parts are inconsistent");
  return k.priv;
}

ElGamalPublicKey elgamal_public_from(const Document& doc) {
  const Json& p = public_part(doc, "elgamal");
  const DhGroup g = dh_from_json(p, "payload.public");
  const Integer a_pub = json_integer(require_field(p, "a_pub", "payload.public"), "payload.public.a_pub");
  if (a_pub <= 0 || a_pub >= g.p) invariant("ElGamal public value out of range");
  return ElGamalPublicKey{g, a_pub};
}

ElGamalPrivateKey elgamal_private_from(const Document& doc) {
  const ElGamalPublicKey pub = elgamal_public_from(doc);
  const Integer a = json_integer(require_field(private_part(doc, "elgamal"), "a", "payload.private"), "payload.private.a");
  const ElGamalKeyPair k = elgamal_from_secret(pub.group, a);
  if (k.pub.a_pub != pub.a_pub) invariant("ElGamal public value is not g^a");
  return k.priv;
}

EcPublicKey ec_public_from(const Document& doc) {
  const Json& p = public_part(doc, "ecc");
  const EcDomain d = domain_from_json(require_field(doc.payload, "domain", "payload"), "payload.domain");
  const EcPoint q = point_from_json(require_field(p, "q", "payload.public"), "payload.public.q");
  require_on_curve(d.curve, q);
  return EcPublicKey{d, q};
}

EcPrivateKey ec_private_from(const Document& doc) {
  const EcPublicKey pub = ec_public_from(doc);
  const Integer n = json_integer(require_field(private_part(doc, "ecc"), "n", "payload.private"), "payload.private.n");
  const EcKeyPair k = ec_elgamal_from_secret(pub.domain, n);
  if (!(k.pub.q == pub.q)) invariant("EC public point is not nP");
  return k.priv;
}

GghPublicKey ggh_public_from(const Document& doc) {
  const Json& p = public_part(doc, "ggh");
  const GghParams params = ggh_params_from(require_field(doc.payload, "params", "payload"));
  const RationalMatrix b = json_rat_matrix(require_field(p, "bad_basis", "payload.public"), "payload.public.bad_basis");
  integer_matrix(b, "payload.public.bad_basis");
  if (b.rows() != params.n) schema("payload.public.bad_basis", "dimension differs from params.n");
  return GghPublicKey{Basis(b), params.message_bound};
}

GghKeyPair ggh_keys_from(const Document& doc) {
  const GghPublicKey pub = ggh_public_from(doc);
  const GghParams params = ggh_params_from(doc.payload["params"]);
  const Json& s = private_part(doc, "ggh");
  const std::string w = "payload.private";
  const RationalMatrix good = json_rat_matrix(require_field(s, "good_basis", w), w + ".good_basis");
  integer_matrix(good, w + ".good_basis");
  const IntegerMatrix u = integer_matrix(json_rat_matrix(require_field(s, "transform", w), w + ".transform"), w + ".transform");
  const UnimodularMatrix transform(u);
  Basis good_basis(good);
  if (!(apply_unimodular(good_basis, transform) == pub.bad_basis)) invariant("GGH bad basis is not U A");
  const double gd = orthogonality_defect(good_basis);
  const double bd = orthogonality_defect(pub.bad_basis);
  if (!(gd < params.defect_threshold && bd > params.defect_threshold)) {
    invariant("GGH basis defects are not separated by the threshold");
  }
  Rational radius = rounding_correction_radius(good_basis);
  return GghKeyPair{params, std::move(good_basis), pub.bad_basis, transform, gd, bd, std::move(radius)};
}

AdPublicKey ad_public_from(const Document& doc) {
  const Json& p = public_part(doc, "ad");
  const Basis b(json_rat_matrix(require_field(p, "basis", "payload.public"), "payload.public.basis"));
  const Rational d = json_rational(require_field(p, "d", "payload.public"), "payload.public.d");
  if (d <= 0) invariant("Ajtai-Dwork d must be positive");
  return AdPublicKey{b, d.get_d()};
}

AdKeyPair ad_keys_from(const Document& doc) {
  const AdPublicKey pub = ad_public_from(doc);
  const Json& s = private_part(doc, "ad");
  const std::string w = "payload.private";
  const Basis a(json_rat_matrix(require_field(s, "basis", w), w + ".basis"));
  const std::size_t n = a.dim();
  const Rational m_bound = json_rational(require_field(s, "m_bound", w), w + ".m_bound");
  RatVector normal = json_rat_vector(require_field(s, "normal", w), w + ".normal");
  const Rational scale = json_rational(require_field(s, "scale", w), w + ".scale");
  if (normal.size() != n || pub.public_basis.dim() != n) schema(w, "dimension mismatch");
  if (m_bound <= 0 || scale <= 0) invariant("Ajtai-Dwork private values must be positive");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (dot(a.row(i), normal) != 0) invariant("normal is not orthogonal to the hyperplane");
  if (dot(a.row(n - 1), normal) != scale) invariant("scale does not match the last basis row");
  // Same lattice: public = U private with U unimodular.
  const RationalMatrix u = pub.public_basis.rows() * inverse(a.rows());
  (void)UnimodularMatrix(integer_matrix(u, "payload.public.basis"));
  const double dd = pub.d;
  const double mm = m_bound.get_d();
  if (dd < 8.0 * static_cast<double>(n * n * n) * mm) invariant("Ajtai-Dwork constraint d >= 8 n^3 M violated");
  const double w_norm = std::sqrt(dot(normal, normal).get_d());
  std::vector<double> u_vec(n);
  for (std::size_t j = 0; j < n; ++j) u_vec[j] = normal[j].get_d() / w_norm;
  const double d_star = scale.get_d() / w_norm;
  if (d_star < dd || d_star > 2 * dd) invariant("Ajtai-Dwork d* outside [d, 2d]");
  return AdKeyPair{n, mm, dd, a, pub.public_basis, std::move(normal), scale, std::move(u_vec), d_star};
}

NtruPublicKey ntru_public_from(const Document& doc) {
  const Json& p = public_part(doc, "ntru");
  const NtruParams params = ntru_params_from(require_field(doc.payload, "params", "payload"));
  const Coeffs h = json_coeffs(require_field(p, "h", "payload.public"), "payload.public.h");
  if (h.size() != static_cast<std::size_t>(params.n)) schema("payload.public.h", "expected N coefficients");
  for (std::int64_t c : h)
    if (c < 0 || c >= params.q) schema("payload.public.h", "coefficients must lie in [0, q)");
  return NtruPublicKey{params, RingPoly(params.q, h)};
}

NtruKeys ntru_keys_from(const Document& doc) {
  const NtruPublicKey pub = ntru_public_from(doc);
  const Json& s = private_part(doc, "ntru");
  const Coeffs k1 = json_coeffs(require_field(s, "k1", "payload.private"), "payload.private.k1");
  const Coeffs k2 = json_coeffs(require_field(s, "k2", "payload.private"), "payload.private.k2");
  NtruKeys keys = ntru_keys_from(pub.params, k1, k2);
  if (!(keys.h == pub.h)) invariant("NTRU public key is not g_q k2");
  return keys;
}

Document ciphertext_document(const std::string& scheme, Json data) {
  return Document{DocumentKind::kCiphertext, kDocumentVersion, Json{{"scheme", scheme}, {"data", std::move(data)}}};
}

const Json& ciphertext_data(const Document& doc, const std::string& scheme) {
  if (doc.kind != DocumentKind::kCiphertext) schema("kind", "expected a ciphertext document");
  if (scheme_of(doc) != scheme) schema("payload.scheme", "expected scheme \"" + scheme + "\"");
  return require_object(require_field(doc.payload, "data", "payload"), "payload.data");
}

}  // namespace pqf
