#pragma once

#include <json.hpp>

#include <string>
#include <string_view>

#include "pqf/core/lattice.hpp"
#include "pqf/crypto/ajtai_dwork.hpp"
#include "pqf/crypto/classic.hpp"
#include "pqf/crypto/elliptic.hpp"
#include "pqf/crypto/ggh.hpp"
#include "pqf/crypto/ntru.hpp"

namespace pqf {

using Json = nlohmann::json;

enum class DocumentKind { kLattice, kForm, kKey, kCiphertext, kReport };

std::string_view kind_name(DocumentKind k);

// Exact data travels as decimal strings ("p" or "p/q"); floats appear only in
// reports, under keys starting with "approx_".
struct Document {
  DocumentKind kind = DocumentKind::kReport;
  int version = 1;
  Json payload = Json::object();
};

inline constexpr int kDocumentVersion = 1;

// Malformed JSON throws kMalformedInput, a schema mismatch kSchemaViolation,
// and a broken domain invariant kInvariantViolation.
Document parse_document(std::string_view text);
// Two-space indent, sorted keys, trailing LF.
std::string serialize_document(const Document& doc);

Document report_document(Json payload);

Json to_json(const Integer& x);
Json to_json(const Rational& x);
Json to_json(const IntVector& v);
Json to_json(const RatVector& v);
Json to_json(const IntegerMatrix& m);
Json to_json(const RationalMatrix& m);

Document lattice_document(const Basis& b);
Document form_document(const QuadraticForm& f);
Basis basis_from(const Document& doc);
QuadraticForm form_from(const Document& doc);

// Key documents carry "scheme", "public" and optionally "private".
std::string scheme_of(const Document& doc);
bool has_private(const Document& doc);

Document key_document(const DhGroup& g);
Document key_document(const RsaKeyPair& k);
Document key_document(const RsaPublicKey& k);
Document key_document(const ElGamalKeyPair& k);
Document key_document(const EcKeyPair& k);
Document key_document(const GghKeyPair& k);
Document key_document(const AdKeyPair& k);
Document key_document(const NtruKeys& k);

DhGroup dh_group_from(const Document& doc);
RsaPublicKey rsa_public_from(const Document& doc);
RsaPrivateKey rsa_private_from(const Document& doc);
ElGamalPublicKey elgamal_public_from(const Document& doc);
ElGamalPrivateKey elgamal_private_from(const Document& doc);
EcPublicKey ec_public_from(const Document& doc);
EcPrivateKey ec_private_from(const Document& doc);
GghPublicKey ggh_public_from(const Document& doc);
GghKeyPair ggh_keys_from(const Document& doc);
AdPublicKey ad_public_from(const Document& doc);
AdKeyPair ad_keys_from(const Document& doc);
NtruPublicKey ntru_public_from(const Document& doc);
NtruKeys ntru_keys_from(const Document& doc);

Document ciphertext_document(const std::string& scheme, Json data);
// The "data" object after checking the scheme.
const Json& ciphertext_data(const Document& doc, const std::string& scheme);

Json point_to_json(const EcPoint& p);
EcPoint point_from_json(const Json& j, const std::string& where);

// Field accessors used by decoders; all throw kSchemaViolation.
const Json& require_field(const Json& obj, const std::string& key, const std::string& where);
Integer json_integer(const Json& j, const std::string& where);
Rational json_rational(const Json& j, const std::string& where);
IntVector json_int_vector(const Json& j, const std::string& where);
RatVector json_rat_vector(const Json& j, const std::string& where);
RationalMatrix json_rat_matrix(const Json& j, const std::string& where);

}  // namespace pqf
