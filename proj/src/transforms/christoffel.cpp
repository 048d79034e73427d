#include <string>

#include "helbp/error.hpp"
#include "helbp/transforms.hpp"

namespace helbp::transforms {

namespace {

Rational nonzero_denominator(const Rational& x, const std::string& what) {
  if (x.is_zero()) throw Error(ErrorCode::DegenerateTransformedFamily, what + " vanishes");
  return x;
}

}  // namespace

lbp::Family christoffel_zero(const lbp::Family& f, int N) {
  if (N < 0) throw Error(ErrorCode::InvalidArgument, "christoffel_zero needs N >= 0");
  std::vector<Rational> b(static_cast<size_t>(N) + 1), d(static_cast<size_t>(N) + 1);
  d[0] = f.d(0) - f.b(1);
  for (int n = 1; n <= N; ++n) {
    const Rational den = f.b(n) - f.d(n - 1);
    if (den.is_zero()) {
      throw Error(ErrorCode::DegenerateFamily, "b_n - d_{n-1} = 0 at n = " + std::to_string(n));
    }
    const Rational ratio = (f.b(n + 1) - f.d(n)) / den;
    b[n] = f.b(n) * ratio;
    d[n] = f.d(n - 1) * ratio;
  }
  return lbp::Family::table("christoffel0(" + f.name() + ")", std::move(b), std::move(d));
}

ChristoffelResult christoffel(const lbp::Family& f, const Rational& mu, int N) {
  if (N < 0) throw Error(ErrorCode::InvalidArgument, "christoffel needs N >= 0");
  const std::vector<Poly> P = lbp::monic_P(f, N + 2);
  std::vector<Rational> values;
  for (const Poly& p : P) values.push_back(p(mu));
  for (int n = 0; n <= N + 1; ++n) {
    if (values[n].is_zero()) {
      throw Error(ErrorCode::ZeroAtTransformPoint, "P_" + std::to_string(n) + "(" + mu.str() + ") = 0");
    }
  }
  std::vector<Rational> U;
  for (int n = 0; n <= N + 1; ++n) U.push_back(values[n + 1] / values[n]);

  std::vector<Poly> polys;
  for (int n = 0; n <= N; ++n) {
    const Poly num = P[n + 1] - P[n] * U[n];
    auto [q, r] = num.divide_linear(mu);
    if (!r.is_zero()) {
      throw Error(ErrorCode::DomainError, "Christoffel numerator not divisible by (z - mu) at n = " + std::to_string(n));
    }
    polys.push_back(std::move(q));
  }

  if (mu.is_zero()) {
    return {mu, std::move(U), christoffel_zero(f, N), std::move(polys)};
  }
  std::vector<Rational> b(static_cast<size_t>(N) + 1), d(static_cast<size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    d[n] = f.d(n) * (f.d(n + 1) + U[n + 1]) / nonzero_denominator(f.d(n) + U[n], "d_n + U_n");
    if (n >= 1) b[n] = f.b(n) * (f.b(n + 1) + U[n]) / nonzero_denominator(f.b(n) + U[n - 1], "b_n + U_{n-1}");
  }
  auto family = lbp::Family::table("christoffel(" + f.name() + ", " + mu.str() + ")", std::move(b), std::move(d));
  return {mu, std::move(U), std::move(family), std::move(polys)};
}

lbp::MomentTable christoffel_moments(const lbp::MomentTable& c, const Rational& mu) {
  const Rational den = c.at(1) - mu;
  if (den.is_zero()) throw Error(ErrorCode::MomentMapSingular, "c_1 = mu = " + mu.str());
  std::vector<Rational> out;
  for (int n = c.lo(); n < c.hi(); ++n) out.push_back((c.at(n + 1) - mu * c.at(n)) / den);
  return lbp::MomentTable(c.lo(), std::move(out));
}

}  // namespace helbp::transforms
