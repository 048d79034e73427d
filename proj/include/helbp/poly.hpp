#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "helbp/rational.hpp"

namespace helbp {

/// Dense univariate polynomial with exact rational coefficients, ascending
/// degree. The zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coefficients);
  Poly(std::initializer_list<Rational> coefficients);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int degree);
  /// z - mu
  static Poly linear(const Rational& mu);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  /// Coefficient of z^i; zero outside the stored range.
  Rational coeff(int i) const;
  const Rational& leading() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == Rational(1); }

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;
  std::complex<double> operator()(std::complex<double> x) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  /// Multiplies by z^k (k >= 0).
  Poly shifted(int k = 1) const;
  /// Divides by z; throws Error(NotAnLbp) unless the constant term is zero.
  Poly divided_by_z() const;
  /// z^n p(1/z) for n >= degree().
  Poly reversed(int n) const;
  /// True when the coefficient list of a degree-n polynomial is symmetric.
  bool is_palindromic() const;

  /// Synthetic division by (z - mu): returns (quotient, remainder).
  std::pair<Poly, Rational> divide_linear(const Rational& mu) const;

  std::vector<double> to_doubles() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Human-readable form in the variable `var`, used in diagnostics.
  std::string str(char var = 'z') const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Evaluates a real-coefficient polynomial (ascending) at a complex point.
std::complex<double> horner(const std::vector<double>& c, std::complex<double> z);

}  // namespace helbp
