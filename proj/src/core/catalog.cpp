#include "pqf/core/catalog.hpp"

#include <charconv>
#include <utility>

namespace pqf {

namespace {

CatalogEntry from_basis(std::string name, RationalMatrix rows) {
  Basis b(std::move(rows));
  QuadraticForm f = gram_matrix(b);
  return CatalogEntry{std::move(name), std::move(f), std::move(b)};
}

CatalogEntry from_gram(std::string name, RationalMatrix gram) {
  return CatalogEntry{std::move(name), QuadraticForm(std::move(gram)), std::nullopt};
}

// Simple roots e_i - e_{i+1} (i < n) and e_{n-1} + e_n.
RationalMatrix d_roots(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    m(i, i) = 1;
    m(i, i + 1) = -1;
  }
  m(n - 1, n - 2) = 1;
  m(n - 1, n - 1) = 1;
  return m;
}

// Cartan matrix of E_n with Bourbaki labelling: chain 1-3-4-...-n, node 2
// attached to node 4.
RationalMatrix e_cartan(std::size_t n) {
  RationalMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) c(i, i) = 2;
  auto link = [&](std::size_t a, std::size_t b) {
    c(a - 1, b - 1) = -1;
    c(b - 1, a - 1) = -1;
  };
  link(1, 3);
  link(2, 4);
  for (std::size_t k = 3; k < n; ++k) link(k, k + 1);
  return c;
}

RationalMatrix e8_roots() {
  RationalMatrix m(8, 8);
  m(0, 0) = Rational(1, 2);
  for (std::size_t j = 1; j < 7; ++j) m(0, j) = Rational(-1, 2);
  m(0, 7) = Rational(1, 2);
  m(1, 0) = 1;
  m(1, 1) = 1;
  for (std::size_t i = 2; i < 8; ++i) {
    m(i, i - 2) = -1;
    m(i, i - 1) = 1;
  }
  return m;
}

RationalMatrix u_gram(std::size_t n) {
  RationalMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = i == j ? Rational(1) : Rational(1, 2);
  return c;
}

RationalMatrix w5_gram() {
  RationalMatrix c = RationalMatrix::identity(5);
  auto set = [&](std::size_t i, std::size_t j, Rational v) {
    c(i - 1, j - 1) = v;
    c(j - 1, i - 1) = v;
  };
  // F carries 2 c_ij x_i x_j for i != j.
  for (std::size_t i = 2; i <= 5; ++i) set(1, i, Rational(-1, 4));
  for (std::size_t i = 2; i <= 4; ++i)
    for (std::size_t j = i + 1; j <= 4; ++j) set(i, j, Rational(1, 4));
  for (std::size_t i = 2; i <= 4; ++i) set(i, 5, Rational(-1, 2));
  return c;
}

// Parses "X(n)" or "Xn" after the given prefix.
std::optional<std::size_t> parse_index(std::string_view name, std::string_view prefix) {
  if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
  std::string_view rest = name.substr(prefix.size());
  if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') {
    rest = rest.substr(1, rest.size() - 2);
  }
  if (rest.empty()) return std::nullopt;
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
  if (ec != std::errc() || ptr != rest.data() + rest.size()) return std::nullopt;
  return n;
}

}  // namespace

CatalogEntry catalog(std::string_view name) {
  if (name == "A2") {
    return from_gram("A2", RationalMatrix{{2, 1}, {1, 2}});
  }
  if (name == "D3" || name == "D4" || name == "D5") {
    return from_basis(std::string(name), d_roots(static_cast<std::size_t>(name[1] - '0')));
  }
  if (name == "E6" || name == "E7") {
    return from_gram(std::string(name), e_cartan(static_cast<std::size_t>(name[1] - '0')));
  }
  if (name == "E8") return from_basis("E8", e8_roots());
  if (name == "A3star") {
    // Body-centred cubic lattice.
    return from_basis("A3star", RationalMatrix{{2, 0, 0}, {0, 2, 0}, {1, 1, 1}});
  }
  if (name == "W5") return from_gram("W5", w5_gram());

  auto bad = [&](const std::string& why) -> CatalogEntry {
    fail(ErrorKind::kSchemaViolation, "catalog: " + why + ": \"" + std::string(name) + "\"");
  };
  if (auto n = parse_index(name, "Zn"); n || (n = parse_index(name, "Z"))) {
    if (*n < 1) return bad("dimension must be positive");
    return from_basis("Z" + std::to_string(*n), RationalMatrix::identity(*n));
  }
  if (auto n = parse_index(name, "U")) {
    if (*n < 2) return bad("U(n) needs n >= 2");
    return from_gram("U" + std::to_string(*n), u_gram(*n));
  }
  if (auto n = parse_index(name, "V")) {
    if (*n < 4) return bad("V(n) needs n >= 4");
    RationalMatrix c = u_gram(*n);
    c(0, 1) = 0;
    c(1, 0) = 0;
    return from_gram("V" + std::to_string(*n), std::move(c));
  }
  return bad("unknown catalog name");
}

std::vector<std::string> catalog_names() {
  return {"Zn(n)", "A2", "D3", "D4", "D5", "E6", "E7", "E8", "A3star", "U(n)", "V(n)", "W5"};
}

}  // namespace pqf
