#include "pqf/core/rational.hpp"

#include <cctype>

#include "pqf/core/error.hpp"

namespace pqf {

Integer floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer round_half_even(const Rational& x) {
  Integer lower = floor(x);
  Rational frac = x - Rational(lower);
  int c = cmp(frac, Rational(1, 2));
  if (c < 0) return lower;
  if (c > 0) return lower + 1;
  return mpz_even_p(lower.get_mpz_t()) ? lower : Integer(lower + 1);
}

Rational round_to_dyadic(const Rational& x, unsigned bits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
  Rational r(round_half_even(x * Rational(scale)), scale);
  r.canonicalize();
  return r;
}

Rational sqrt_upper(const Rational& x, unsigned bits) {
  if (sgn(x) < 0) fail(ErrorKind::kInvariantViolation, "sqrt of negative value");
  // s = ceil(sqrt(x * 4^bits)) / 2^bits, computed from the integer ceiling of
  // x * 4^bits so the bound stays one-sided.
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
  Integer t = ceil(x * Rational(scale * scale));
  Integer s;
  mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
  if (s * s < t) s += 1;
  Rational r(s, scale);
  r.canonicalize();
  return r;
}

std::size_t bit_length(const Integer& x) {
  if (sgn(x) == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

bool is_decimal(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && s[0] == '-') i = 1;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_decimal(text)) {
    fail(ErrorKind::kSchemaViolation,
         "not a decimal integer: \"" + std::string(text) + "\"");
  }
  return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  auto den_text = text.substr(slash + 1);
  if (den_text.empty() || den_text[0] == '-') {
    fail(ErrorKind::kSchemaViolation,
         "bad rational denominator: \"" + std::string(text) + "\"");
  }
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(den_text);
  if (den == 0) fail(ErrorKind::kSchemaViolation, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace pqf
