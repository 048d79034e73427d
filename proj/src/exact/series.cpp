#include "helbp/series.hpp"

#include <algorithm>

#include "helbp/error.hpp"

namespace helbp {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients, int order)
    : c_(std::move(coefficients)), order_(order) {
  if (order < 0) throw Error(ErrorCode::InvalidOrder, "series order must be >= 0, got " + std::to_string(order));
  c_.resize(static_cast<size_t>(order) + 1);
}

TruncatedSeries TruncatedSeries::from_poly(const Poly& p, int order) {
  return TruncatedSeries(p.coefficients(), order);
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  return TruncatedSeries(c_, std::min(order, order_));
}

TruncatedSeries TruncatedSeries::shifted(int k) const {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative shift");
  std::vector<Rational> v(static_cast<size_t>(k));
  v.insert(v.end(), c_.begin(), c_.end());
  return TruncatedSeries(std::move(v), order_);
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order_, b.order_);
  std::vector<Rational> v(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) v[i] = a[i] + b[i];
  return TruncatedSeries(std::move(v), n);
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order_, b.order_);
  std::vector<Rational> v(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) v[i] = a[i] - b[i];
  return TruncatedSeries(std::move(v), n);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order_, b.order_);
  std::vector<Rational> v(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) v[i + j] += a[i] * b[j];
  }
  return TruncatedSeries(std::move(v), n);
}

TruncatedSeries operator*(const TruncatedSeries& a, const Rational& s) {
  std::vector<Rational> v = a.c_;
  for (auto& c : v) c *= s;
  return TruncatedSeries(std::move(v), a.order_);
}

int TruncatedSeries::valuation() const {
  for (int i = 0; i <= order_; ++i) {
    if (!c_[i].is_zero()) return i;
  }
  return order_ + 1;
}

TruncatedSeries series_divide(const TruncatedSeries& num, const TruncatedSeries& den) {
  if (den[0].is_zero()) throw Error(ErrorCode::DivisionByZeroConstantTerm, "denominator series has zero constant term");
  const int n = std::min(num.order(), den.order());
  const Rational inv = Rational(1) / den[0];
  std::vector<Rational> q(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    Rational acc = num[i];
    for (int j = 1; j <= i; ++j) acc -= den[j] * q[i - j];
    q[i] = acc * inv;
  }
  return TruncatedSeries(std::move(q), n);
}

TruncatedSeries hyp2f1_series(const Rational& a, const Rational& b, const Rational& c, int order) {
  if (order < 0) throw Error(ErrorCode::InvalidOrder, "series order must be >= 0, got " + std::to_string(order));
  std::vector<Rational> v(static_cast<size_t>(order) + 1);
  v[0] = Rational(1);
  for (int m = 0; m < order; ++m) {
    const Rational cm = c + Rational(m);
    if (cm.is_zero()) {
      throw Error(ErrorCode::PoleInBottomParameter,
                  "(c)_m vanishes at m = " + std::to_string(m + 1) + " for c = " + c.str());
    }
    v[m + 1] = v[m] * (a + Rational(m)) * (b + Rational(m)) / (cm * Rational(m + 1));
  }
  return TruncatedSeries(std::move(v), order);
}

}  // namespace helbp
