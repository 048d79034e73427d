#include "helbp/poly.hpp"

#include <algorithm>
#include <sstream>

#include "helbp/error.hpp"

namespace helbp {

Poly::Poly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coefficients) : c_(coefficients) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::linear(const Rational& mu) { return Poly({-mu, Rational(1)}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<size_t>(i)];
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Poly::operator()(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

std::complex<double> Poly::operator()(std::complex<double> x) const { return horner(to_doubles(), x); }

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(out));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly Poly::shifted(int k) const {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative shift");
  if (is_zero()) return Poly();
  std::vector<Rational> v(static_cast<size_t>(k));
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(std::move(v));
}

Poly Poly::divided_by_z() const {
  if (is_zero()) return Poly();
  if (!c_[0].is_zero()) throw Error(ErrorCode::NotAnLbp, "polynomial " + str() + " is not divisible by z");
  return Poly(std::vector<Rational>(c_.begin() + 1, c_.end()));
}

Poly Poly::reversed(int n) const {
  if (n < degree()) throw Error(ErrorCode::InvalidArgument, "reversal degree below polynomial degree");
  std::vector<Rational> v(static_cast<size_t>(n) + 1);
  for (size_t i = 0; i < c_.size(); ++i) v[static_cast<size_t>(n) - i] = c_[i];
  return Poly(std::move(v));
}

bool Poly::is_palindromic() const {
  return std::equal(c_.begin(), c_.end(), c_.rbegin());
}

std::pair<Poly, Rational> Poly::divide_linear(const Rational& mu) const {
  if (c_.size() <= 1) return {Poly(), coeff(0)};
  std::vector<Rational> q(c_.size() - 1);
  Rational carry(0);
  for (size_t i = c_.size(); i-- > 1;) {
    carry = carry * mu + c_[i];
    q[i - 1] = carry;
  }
  Rational rem = carry * mu + c_[0];
  return {Poly(std::move(q)), rem};
}

std::vector<double> Poly::to_doubles() const {
  std::vector<double> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.to_double());
  return out;
}

std::string Poly::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = abs(c);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != Rational(1)) {
      os << mag;
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::complex<double> horner(const std::vector<double>& c, std::complex<double> z) {
  std::complex<double> acc(0.0, 0.0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace helbp
