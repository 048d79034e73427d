#include "helbp/rational.hpp"

#include <cctype>

#include "helbp/error.hpp"

namespace helbp {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorCode::ParseError, "not a rational literal: '" + std::string(text) + "'");
  }
  mpz_class d = parse_integer(den);
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(parse_integer(num), d));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division of " + str() + " by zero");
  v_ /= o.v_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) return Rational(1) / pow(base, -exponent);
  Rational result(1);
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

Rational pochhammer(const Rational& a, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "pochhammer needs n >= 0");
  Rational p(1);
  for (int i = 0; i < n; ++i) p *= a + Rational(i);
  return p;
}

Rational factorial(int n) { return pochhammer(Rational(1), n); }

}  // namespace helbp
