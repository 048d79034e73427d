#include <string>

#include "helbp/error.hpp"
#include "helbp/lbp.hpp"

namespace helbp::lbp {

MomentTable::MomentTable(int lo, std::vector<Rational> values) : lo_(lo), c_(std::move(values)) {}

const Rational& MomentTable::at(int s) const {
  if (s < lo() || s > hi()) {
    throw Error(ErrorCode::CoefficientOutOfRange,
                "moment c_" + std::to_string(s) + " outside [" + std::to_string(lo()) + ", " + std::to_string(hi()) + "]");
  }
  return c_[static_cast<size_t>(s - lo_)];
}

namespace {

TruncatedSeries normalized_ratio(int j, int order) {
  const Rational half(1, 2);
  const TruncatedSeries num = hyp2f1_series(half, Rational(j) + Rational(3, 2), Rational(j + 2), order);
  const TruncatedSeries den = hyp2f1_series(half, Rational(j) + half, Rational(j + 1), order);
  return series_divide(num, den);
}

}  // namespace

TruncatedSeries elliptic_ratio_series(int j, int order) {
  if (j < 0) throw Error(ErrorCode::InvalidArgument, "elliptic_ratio_series needs j >= 0");
  if (order < 0) throw Error(ErrorCode::InvalidOrder, "series order must be >= 0");
  if (order == 0) return TruncatedSeries({Rational(0)}, 0);
  const Rational lead = (Rational(j) + Rational(1, 2)) / Rational(j + 1);
  return (normalized_ratio(j, order) * lead).shifted(1);
}

MomentTable exact_moments(int j, int N) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "exact_moments needs N >= 1");
  if (j < 0) throw Error(ErrorCode::InvalidArgument, "exact_moments needs j >= 0");
  const TruncatedSeries H = normalized_ratio(j, N - 1);
  std::vector<Rational> c(2 * static_cast<size_t>(N));
  // index s + (N - 1)
  for (int m = 0; m <= N - 1; ++m) {
    c[static_cast<size_t>(N - 1 - m)] = H[m];
    c[static_cast<size_t>(N - 1 + m + 1)] = -H[m];
  }
  return MomentTable(-(N - 1), std::move(c));
}

MomentTable exact_moments(const Family& family, int N) {
  if (family.kind() != FamilyKind::Hermite && family.kind() != FamilyKind::Associated) {
    throw Error(ErrorCode::InvalidArgument, "exact moments are available for the Hermite and associated families only");
  }
  return exact_moments(family.j(), N);
}

Rational pair_with_moments(const Poly& p, const MomentTable& c, int i) {
  Rational acc(0);
  for (int m = 0; m <= p.degree(); ++m) acc += p.coeff(m) * c.at(m - i);
  return acc;
}

}  // namespace helbp::lbp
