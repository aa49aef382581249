#include "linkparity/rational.hpp"

#include <cctype>
#include <ostream>

#include "linkparity/errors.hpp"

namespace linkparity {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw ContractError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                               : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.value_ == 0) throw ContractError("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

Rational pow(const Rational& base, unsigned exponent) {
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), exponent);
  return Rational(num, den);
}

}  // namespace linkparity
