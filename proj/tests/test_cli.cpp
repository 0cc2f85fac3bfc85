#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "pqf/cli/document.hpp"
#include "pqf/cli/run.hpp"

using namespace pqf;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  Outcome r;
  r.code = run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Json payload(const Outcome& r) { return Json::parse(r.out).at("payload"); }

// Runs a subcommand with one or two documents fed through stdin and a file path.
Outcome run_with_docs(std::vector<std::string> args, const std::vector<std::string>& docs) {
  // The first document goes through stdin; any second one is inlined via a temp file.
  args.push_back("-");
  std::string path;
  if (docs.size() > 1) {
    path = testing::TempDir() + "pqf_cli_doc_" + std::to_string(std::hash<std::string>{}(docs[1])) + ".json";
    std::ofstream(path) << docs[1];
    args.push_back(path);
  }
  Outcome r = run(args, docs.at(0));
  if (!path.empty()) std::remove(path.c_str());
  return r;
}

const std::string kIdentity = R"({"kind":"lattice","version":1,"payload":{"dim":2,"basis":[["1","0"],["0","1"]]}})";

}  // namespace

TEST(Document, ParsesIdentityLattice) {
  const Document d = parse_document(kIdentity);
  EXPECT_EQ(d.kind, DocumentKind::kLattice);
  EXPECT_EQ(basis_from(d).rows(), RationalMatrix::identity(2));
}

TEST(Document, RationalEntriesAreExact) {
  const Document d = parse_document(
      R"({"kind":"lattice","version":1,"payload":{"dim":2,"basis":[["1/3","0"],["0","2"]]}})");
  EXPECT_EQ(basis_from(d).rows()(0, 0), Rational(1, 3));
}

TEST(Document, ErrorClasses) {
  auto kind_of = [](const std::string& text) {
    try {
      basis_from(parse_document(text));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kUsage;
  };
  EXPECT_EQ(kind_of("{not json"), ErrorKind::kMalformedInput);
  EXPECT_EQ(kind_of(R"({"kind":"lattice","version":1})"), ErrorKind::kSchemaViolation);
  EXPECT_EQ(kind_of(R"({"kind":"lattice","version":1,"payload":{"dim":2,"basis":[[1,0],[0,1]]}})"),
            ErrorKind::kSchemaViolation);
  EXPECT_EQ(kind_of(R"({"kind":"lattice","version":1,"payload":{"dim":2,"basis":[["1","0"],["0","1"]],"x":1}})"),
            ErrorKind::kSchemaViolation);
  EXPECT_EQ(kind_of(R"({"kind":"lattice","version":1,"payload":{"dim":3,"basis":[["1","0"],["0","1"]]}})"),
            ErrorKind::kSchemaViolation);
  EXPECT_EQ(kind_of(R"({"kind":"lattice","version":1,"payload":{"dim":2,"basis":[["1","2"],["1","2"]]}})"),
            ErrorKind::kInvariantViolation);
  EXPECT_EQ(kind_of(R"({"kind":"lattice","version":1,"payload":{"dim":2,"basis":[["1","0"],["0","1/0"]]}})"),
            ErrorKind::kSchemaViolation);
}

TEST(Document, CanonicalRoundTrip) {
  const std::string messy = R"({ "version":1, "payload":{"basis":[["2/4","0"],["0","-3"]],"dim":2},"kind":"lattice"})";
  const std::string once = serialize_document(parse_document(messy));
  EXPECT_EQ(serialize_document(parse_document(once)), once);
  EXPECT_NE(once.find("\"1/2\""), std::string::npos);
  EXPECT_EQ(once.back(), '\n');
  EXPECT_EQ(once.find('\r'), std::string::npos);
  EXPECT_EQ(once.substr(0, 4), "{\n  ");
  // Keys appear sorted.
  EXPECT_LT(once.find("\"kind\""), once.find("\"payload\""));
  EXPECT_LT(once.find("\"payload\""), once.find("\"version\""));
}

TEST(Document, RoundTripsEveryKeyKind) {
  for (const std::vector<std::string>& keygen :
       std::vector<std::vector<std::string>>{{"crypto", "rsa", "keygen", "--bits", "64", "--seed", "1"},
                                             {"crypto", "elgamal", "keygen", "--bits", "48", "--seed", "1"},
                                             {"crypto", "ecc", "keygen", "--seed", "1"},
                                             {"crypto", "ggh", "keygen", "--seed", "1"},
                                             {"crypto", "ad", "keygen", "--params", "8,64", "--seed", "1"},
                                             {"crypto", "ntru", "keygen", "--params", "11,3,67,3", "--seed", "1"},
                                             {"crypto", "dh", "keygen", "--bits", "32", "--seed", "1"}}) {
    const Outcome r = run(keygen);
    ASSERT_EQ(r.code, 0) << keygen[1] << r.err;
    EXPECT_EQ(serialize_document(parse_document(r.out)), r.out) << keygen[1];
  }
}

TEST(Cli, SvpOnZ4Document) {
  const std::string z4 = serialize_document(lattice_document(Basis::identity(4)));
  const Outcome r = run({"lattice", "svp", "-"}, z4);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(payload(r).at("length_sq"), "1");
  EXPECT_EQ(payload(r).at("count_pairs"), 4);
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, FormDocumentsAndCatalog) {
  const std::string a2 = serialize_document(form_document(QuadraticForm(RationalMatrix{{2, -1}, {-1, 2}})));
  const Outcome f = run({"lattice", "svp", "-"}, a2);
  ASSERT_EQ(f.code, 0) << f.err;
  EXPECT_EQ(payload(f).at("count_pairs"), 3);
  const Outcome c = run({"lattice", "svp", "--catalog", "E8"});
  EXPECT_EQ(payload(c).at("count_pairs"), 120);
  EXPECT_EQ(payload(run({"form", "gamma", "--catalog", "E6"})).at("gamma"), "64/3");
  EXPECT_EQ(payload(run({"form", "perfect", "--catalog", "V(5)"})).at("perfect"), true);
  EXPECT_EQ(payload(run({"form", "perfect", "--catalog", "Z3"})).at("perfect"), false);
}

TEST(Cli, ReduceAndCvp) {
  const std::string skew = serialize_document(lattice_document(Basis(RationalMatrix{{1, 0}, {7, 1}})));
  const Outcome r = run({"lattice", "reduce", "--algo", "lll", "-"}, skew);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(payload(r).at("reduced_basis"), Json::parse(R"([["1","0"],["0","1"]])"));
  EXPECT_EQ(payload(r).at("certified"), Json::parse(R"({"classical-lovasz":true})"));
  const Outcome g = run({"lattice", "reduce", "--algo", "gauss", "--precision", "20", "-"}, skew);
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_TRUE(payload(g).contains("approx_cholesky_basis"));
  const Outcome c = run({"lattice", "cvp", "--catalog", "Z2", "--target", "2/5,7/10"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(payload(c).at("dist_sq"), "1/4");
  EXPECT_EQ(payload(c).at("witness"), Json::parse(R"(["0","1"])"));
  const Outcome b = run({"lattice", "cvp", "--catalog", "Z2", "--target", "2/5,7/10", "--algo", "babai"});
  EXPECT_EQ(payload(b).at("dist_sq"), "1/4");
}

TEST(Cli, AnalyzeNeedsSeedAndIsDeterministic) {
  EXPECT_EQ(run({"lattice", "analyze", "--catalog", "A2"}).code, kExitUsage);
  const Outcome a = run({"lattice", "analyze", "--catalog", "A2", "--seed", "5", "--budget", "2000"});
  const Outcome b = run({"lattice", "analyze", "--catalog", "A2", "--seed", "5", "--budget", "2000"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(payload(a).at("kissing_number"), 6);
}

TEST(Cli, NtruKeygenIsByteIdentical) {
  const std::vector<std::string> args{"crypto", "ntru", "keygen", "--params", "7,3,41,2", "--seed", "42"};
  const Outcome a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(run({"crypto", "ntru", "keygen", "--params", "7,3,41,2", "--seed", "43"}).out, a.out);
}

TEST(Cli, FactorFifteen) {
  const Outcome r = run({"quantum", "factor", "--n", "15", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string f = payload(r).at("factor");
  EXPECT_TRUE(f == "3" || f == "5") << f;
}

TEST(Cli, QuantumSubcommands) {
  const Outcome o = run({"quantum", "order-find", "--n", "15", "--x", "7", "--seed", "1"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(payload(o).at("r"), "4");
  const Outcome g = run({"quantum", "gate-demo"});
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_EQ(serialize_document(parse_document(g.out)), g.out);
  EXPECT_EQ(run({"quantum", "order-find", "--n", "15", "--x", "7"}).code, kExitUsage);
  EXPECT_EQ(run({"quantum", "factor", "--n", "15"}).code, kExitUsage);
}

TEST(Cli, ExitCodesPerErrorClass) {
  std::set<int> seen;
  auto expect = [&](int code, std::vector<std::string> args, const std::string& in = "") {
    const Outcome r = run(args, in);
    EXPECT_EQ(r.code, code) << args[0] << " " << args[1] << ": " << r.err;
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
    seen.insert(r.code);
  };
  expect(kExitUsage, {"lattice", "frobnicate"});
  expect(kExitUsage, {"crypto", "rsa", "keygen", "--bits", "64"});
  expect(kExitParse, {"lattice", "svp", "-"}, "{\"kind\":");
  expect(kExitParse, {"lattice", "svp", "-"}, R"({"kind":"lattice","version":1,"payload":{}})");
  expect(kExitInvariant, {"lattice", "svp", "-"},
         R"({"kind":"lattice","version":1,"payload":{"dim":2,"basis":[["1","1"],["1","1"]]}})");
  expect(kExitAlgorithm, {"lattice", "reduce", "--catalog", "A2", "--mode", "paper-sigma"});
  expect(kExitSizeCap, {"lattice", "svp", "--catalog", "Z13"});
  EXPECT_EQ(seen, (std::set<int>{2, 3, 4, 5, 6}));
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, CryptoRoundTrips) {
  struct Case {
    std::vector<std::string> keygen;
    std::string message;
  };
  const std::vector<Case> cases{
      {{"crypto", "rsa", "keygen", "--bits", "64", "--seed", "2"}, "12345"},
      {{"crypto", "elgamal", "keygen", "--bits", "48", "--seed", "2"}, "777"},
      {{"crypto", "ggh", "keygen", "--seed", "2"}, "5,-7,11,0"},
      {{"crypto", "ad", "keygen", "--params", "8,64", "--seed", "2"}, "0"},
      {{"crypto", "ntru", "keygen", "--params", "7,3,41,2", "--seed", "2"}, "1,0,-1,1,0,0,1"},
      {{"crypto", "ntru", "keygen", "--params", "11,3,67,3", "--seed", "2"}, "0,1,1,-1,0,0,0,1,-1,0,1"},
  };
  for (const Case& c : cases) {
    const std::string scheme = c.keygen[1];
    const Outcome key = run(c.keygen);
    ASSERT_EQ(key.code, 0) << scheme << key.err;
    const Outcome enc = run_with_docs({"crypto", scheme, "encrypt", "--message", c.message, "--seed", "9"}, {key.out});
    ASSERT_EQ(enc.code, 0) << scheme << enc.err;
    const Outcome dec = run_with_docs({"crypto", scheme, "decrypt"}, {key.out, enc.out});
    ASSERT_EQ(dec.code, 0) << scheme << dec.err;
    const Json m = payload(dec).contains("message") ? payload(dec).at("message") : payload(dec).at("bit");
    std::string got;
    if (m.is_array()) {
      for (const Json& v : m) got += (got.empty() ? "" : ",") + v.get<std::string>();
    } else {
      got = m.get<std::string>();
    }
    EXPECT_EQ(got, c.message) << scheme;
  }
}

TEST(Cli, EccRoundTripWithBasePoint) {
  const Outcome key = run({"crypto", "ecc", "keygen", "--seed", "4"});
  ASSERT_EQ(key.code, 0) << key.err;
  const Json base = Json::parse(key.out).at("payload").at("domain").at("base");
  const std::string msg = base[0].get<std::string>() + "," + base[1].get<std::string>();
  const Outcome enc = run_with_docs({"crypto", "ecc", "encrypt", "--message", msg, "--seed", "5"}, {key.out});
  ASSERT_EQ(enc.code, 0) << enc.err;
  const Outcome dec = run_with_docs({"crypto", "ecc", "decrypt"}, {key.out, enc.out});
  ASSERT_EQ(dec.code, 0) << dec.err;
  EXPECT_EQ(payload(dec).at("message"), base);
  EXPECT_EQ(run_with_docs({"crypto", "ecc", "encrypt", "--message", "1,1", "--seed", "5"}, {key.out}).code,
            kExitInvariant);
}

TEST(Cli, DhExchangeAgrees) {
  const Outcome key = run({"crypto", "dh", "keygen", "--bits", "32", "--seed", "6"});
  ASSERT_EQ(key.code, 0) << key.err;
  const Outcome ex = run_with_docs({"crypto", "dh", "exchange", "--seed", "7"}, {key.out});
  ASSERT_EQ(ex.code, 0) << ex.err;
  EXPECT_EQ(payload(ex).at("keys_agree"), true);
}

TEST(Cli, DecryptionFailureExitsFive) {
  // k = 3 leaves a correction radius far below a perturbation bound of 3.
  int failures = 0;
  for (int seed = 0; seed < 10; ++seed) {
    const Outcome key = run({"crypto", "ggh", "keygen", "--params", "4,3", "--seed", std::to_string(seed)});
    ASSERT_EQ(key.code, 0) << key.err;
    const Outcome enc = run_with_docs({"crypto", "ggh", "encrypt", "--message", "1,2,3,4", "--seed", "4"}, {key.out});
    ASSERT_EQ(enc.code, 0) << enc.err;
    const Outcome dec = run_with_docs({"crypto", "ggh", "decrypt"}, {key.out, enc.out});
    if (dec.code != 0) {
      EXPECT_EQ(dec.code, kExitAlgorithm) << dec.err;
      ++failures;
    }
  }
  EXPECT_GT(failures, 0);
}

TEST(Cli, WrongDocumentKindIsSchemaError) {
  const Outcome key = run({"crypto", "rsa", "keygen", "--bits", "64", "--seed", "2"});
  EXPECT_EQ(run({"lattice", "svp", "-"}, key.out).code, kExitParse);
  const Outcome ntru = run({"crypto", "ntru", "keygen", "--params", "7,3,41,2", "--seed", "2"});
  EXPECT_EQ(run_with_docs({"crypto", "rsa", "encrypt", "--message", "5", "--seed", "1"}, {ntru.out}).code, kExitParse);
}
