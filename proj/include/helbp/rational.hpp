#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace helbp {

/// Exact rational scalar, always in lowest terms with a positive denominator.
///
/// A thin value wrapper around GMP's mpq_class. The wrapper exists so that the
/// rest of the code base sees one coefficient type with the project's text
/// format ("num/den", denominator omitted when 1).
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p", "p/q" or "-p/q". Throws Error(ParseError) on malformed input
  /// and Error(DivisionByZero) on a zero denominator.
  static Rational parse(std::string_view text);

  std::string str() const;
  double to_double() const { return v_.get_d(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, int exponent);

/// a (a+1) ... (a+n-1); 1 when n = 0.
Rational pochhammer(const Rational& a, int n);

Rational factorial(int n);

}  // namespace helbp
