#include <string>

#include "helbp/error.hpp"
#include "helbp/verify.hpp"

namespace helbp::verify {

Rational tfraction_convergent(int n, const Rational& z) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "convergent index must be >= 1");
  Rational t(0);
  for (int m = n; m >= 1; --m) {
    const Rational den = Rational(2 * m) * (Rational(1) + z) - t;
    if (den.is_zero()) {
      throw Error(ErrorCode::ZeroDenominator, "partial denominator " + std::to_string(m) + " vanishes at z = " + z.str());
    }
    const Rational num = m == 1 ? z : Rational(static_cast<long>(2 * m - 1) * (2 * m - 1)) * z;
    t = num / den;
  }
  return t;
}

double tfraction_convergent(int n, double z) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "convergent index must be >= 1");
  double t = 0.0;
  for (int m = n; m >= 1; --m) {
    const double den = 2.0 * m * (1.0 + z) - t;
    if (den == 0.0) {
      throw Error(ErrorCode::ZeroDenominator, "partial denominator " + std::to_string(m) + " vanishes at z = " + std::to_string(z));
    }
    const double num = m == 1 ? z : (2.0 * m - 1.0) * (2.0 * m - 1.0) * z;
    t = num / den;
  }
  return t;
}

PadeResult pade_order_check(int j, int n) {
  if (j < 0 || n < 0) throw Error(ErrorCode::InvalidArgument, "pade_order_check needs j, n >= 0");
  const lbp::ABSequence ab = lbp::ab_sequence(n, j);
  const int order = n + 3;
  const TruncatedSeries F = lbp::elliptic_ratio_series(j, order);
  const TruncatedSeries R =
      F * TruncatedSeries::from_poly(ab.A.back(), order) - TruncatedSeries::from_poly(ab.B.back(), order);
  PadeResult r;
  r.j = j;
  r.n = n;
  r.residual = R.coefficients();
  r.first_nonzero = R.valuation();
  r.ok = r.first_nonzero >= n + 1;
  return r;
}

TwoPointPadeResult two_point_pade_check(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "two_point_pade_check needs n >= 1");
  const lbp::Family h = lbp::Family::hermite();
  const int order = 2 * n + 1;
  const lbp::MomentTable c = lbp::exact_moments(0, order + 1);
  const Poly P = lbp::monic_P(h, n).back();
  const Poly P1 = lbp::associated_P1(h, n - 1).back();
  const Rational inv_c1 = Rational(1) / c.at(1);

  std::vector<Rational> minus(static_cast<size_t>(order) + 1), plus(static_cast<size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) minus[k] = -c.at(-k) * inv_c1;
  for (int k = 1; k <= order; ++k) plus[k] = c.at(k) * inv_c1;

  const TruncatedSeries zero_side =
      TruncatedSeries::from_poly(P, order) * TruncatedSeries(minus, order) - TruncatedSeries::from_poly(P1, order);
  const TruncatedSeries inf_side = TruncatedSeries::from_poly(P1.reversed(n - 1).shifted(1), order) -
                                   TruncatedSeries::from_poly(P.reversed(n), order) * TruncatedSeries(plus, order);
  TwoPointPadeResult r;
  r.n = n;
  r.zero_side_order = zero_side.valuation();
  r.infinity_side_order = inf_side.valuation();
  r.ok = r.zero_side_order >= n && r.infinity_side_order >= n + 1;
  return r;
}

}  // namespace helbp::verify
