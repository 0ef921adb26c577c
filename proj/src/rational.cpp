#include "qgl1/rational.hpp"

#include <cctype>

#include "qgl1/errors.hpp"

namespace qgl1 {

Rational make_rational(long num, long den) {
  if (den == 0) {
    throw Error("ZeroDenominator", "rational denominator must be nonzero");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  std::string_view num = body;
  std::string_view den;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
    if (!all_digits(den)) {
      throw Error("BadRational", "malformed rational '" + std::string(text) + "'");
    }
  }
  if (!all_digits(num)) {
    throw Error("BadRational", "malformed rational '" + std::string(text) + "'");
  }
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), std::string(text).c_str(), 10) != 0) {
    throw Error("BadRational", "malformed rational '" + std::string(text) + "'");
  }
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0) {
    throw Error("ZeroDenominator", "zero denominator in '" + std::string(text) + "'");
  }
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

double to_double(const Rational& value) { return value.get_d(); }

bool is_canonical(const Rational& value) {
  if (mpz_sgn(mpq_denref(value.get_mpq_t())) <= 0) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), mpq_numref(value.get_mpq_t()), mpq_denref(value.get_mpq_t()));
  return g == 1;
}

}  // namespace qgl1
