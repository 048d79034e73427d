#pragma once

#include <vector>

#include "helbp/poly.hpp"
#include "helbp/rational.hpp"

namespace helbp {

/// Power series truncated after z^order (inclusive). Results of binary
/// operations are valid through the smaller of the two operand orders.
class TruncatedSeries {
 public:
  /// Throws Error(InvalidOrder) when order < 0. Missing coefficients are zero,
  /// extra ones are dropped.
  TruncatedSeries(std::vector<Rational> coefficients, int order);
  static TruncatedSeries from_poly(const Poly& p, int order);

  int order() const { return order_; }
  const Rational& operator[](int i) const { return c_.at(static_cast<size_t>(i)); }
  const std::vector<Rational>& coefficients() const { return c_; }

  TruncatedSeries truncated(int order) const;
  /// Multiplies by z^k, dropping terms beyond the order.
  TruncatedSeries shifted(int k) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const Rational& s);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }

  /// Index of the first nonzero coefficient, or order()+1 if all vanish.
  int valuation() const;

 private:
  std::vector<Rational> c_;
  int order_;
};

/// num / den through min(order(num), order(den)). Throws
/// Error(DivisionByZeroConstantTerm) when den[0] == 0.
TruncatedSeries series_divide(const TruncatedSeries& num, const TruncatedSeries& den);

/// Coefficients (a)_m (b)_m / ((c)_m m!) for m = 0..order. Throws
/// Error(PoleInBottomParameter) if (c)_m vanishes within the order.
TruncatedSeries hyp2f1_series(const Rational& a, const Rational& b, const Rational& c, int order);

}  // namespace helbp
