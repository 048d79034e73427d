#include "helbp/szego.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "helbp/elliptic.hpp"
#include "helbp/error.hpp"
#include "helbp/transforms.hpp"

namespace helbp::szego {

Rational U_ratio(int n, int j) {
  const Rational pre = (Rational(n + j) + Rational(3, 2)) / Rational(n + j + 1);
  return pre * lbp::G_value(n + 1, j) / lbp::G_value(n, j);
}

ReflectionSequence reflection_params(int j, int N) {
  if (j < 0 || N < 0) throw Error(ErrorCode::InvalidArgument, "reflection_params needs j, N >= 0");
  ReflectionSequence r;
  r.j = j;
  // G_0(j)..G_{N+2}(j), accumulated once.
  std::vector<Rational> G;
  Rational acc(0);
  for (int s = 0; s <= N + 2; ++s) {
    acc += Rational(1, 2 * s + 2 * j + 1);
    G.push_back(acc * Rational(2 * j + 1));
  }
  for (int n = 0; n <= N; ++n) {
    const int m = n + 1;
    const Rational U = (Rational(m + j) + Rational(3, 2)) / Rational(m + j + 1) * G[m + 1] / G[m];
    const Rational a = Rational(1) - U;
    r.ratio_form.push_back(a);
    if (!(a > Rational(-1) && a < Rational(0))) r.in_open_interval = false;
    if (j == 0) {
      const Rational c = -Rational(1, 2 * (n + 2)) - Rational(1) / (Rational(2 * (n + 2)) * G[n + 1]);
      r.closed_form.push_back(c);
      if (c != a) r.forms_agree = false;
    }
  }
  return r;
}

std::vector<Poly> szego_polys(int N) { return transforms::christoffel(lbp::Family::hermite(), Rational(1), N).polys; }

Poly szego_residual(const Poly& next, const Poly& cur, const Rational& a, int n) {
  return next - cur.shifted(1) + cur.reversed(n) * a;
}

Poly palindromic_to_x(const Poly& p) {
  if (!p.is_palindromic()) throw Error(ErrorCode::NotPalindromic, "polynomial " + p.str() + " is not palindromic");
  const int n = p.degree();
  if (n < 0) return Poly();
  // T_k(x) = w^k + w^{-k} with w = z^{1/2}: T_0 = 2, T_1 = x, T_{k+1} = x T_k - T_{k-1}.
  std::vector<Poly> T{Poly::constant(Rational(2)), Poly::monomial(Rational(1), 1)};
  while (static_cast<int>(T.size()) <= n) T.push_back(T.back().shifted(1) - T[T.size() - 2]);
  Poly out;
  for (int k = n; k > 0; k -= 2) out += T[static_cast<size_t>(k)] * p.coeff((n + k) / 2);
  if (n % 2 == 0) out += Poly::constant(p.coeff(n / 2));
  return out;
}

SymmetricOPSequence symmetric_S(const lbp::Family& family, int N) {
  SymmetricOPSequence s;
  for (const Poly& p : lbp::monic_P(family, N)) s.S.push_back(palindromic_to_x(p));
  s.u.push_back(Rational(0));
  for (int n = 1; n <= N; ++n) s.u.push_back(-family.b(n));
  return s;
}

std::vector<Poly> dg_map_S(int N) {
  const std::vector<Poly> P = szego_polys(N);
  const std::vector<Rational> a = reflection_params(0, N).ratio_form;
  std::vector<Poly> S;
  for (int n = 0; n <= N; ++n) {
    const Rational prev = n == 0 ? Rational(-1) : a[n - 1];
    S.push_back(palindromic_to_x(P[n] + P[n].reversed(n)) * (Rational(1) / (Rational(1) - prev)));
  }
  return S;
}

std::vector<Rational> dg_map_u(int N) {
  const std::vector<Rational> a = reflection_params(0, std::max(N, 1)).ratio_form;
  auto at = [&a](int n) { return n < 0 ? Rational(-1) : a[static_cast<size_t>(n)]; };
  std::vector<Rational> u{Rational(0)};
  for (int n = 1; n <= N; ++n) u.push_back((Rational(1) + at(n - 1)) * (Rational(1) - at(n - 2)));
  return u;
}

Rational associated_legendre_u(const Rational& nu, int n) {
  const Rational m = Rational(n) + nu;
  const Rational den = m * m - Rational(1, 4);
  if (den.is_zero()) {
    throw Error(ErrorCode::SingularDenominator, "(n + nu)^2 = 1/4 at n = " + std::to_string(n) + ", nu = " + nu.str());
  }
  return m * m / den;
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_circle(double theta) {
  if (!(theta > 0.0 && theta < kTwoPi)) {
    throw Error(ErrorCode::DomainError, "circle weights need 0 < theta < 2 pi, got " + std::to_string(theta));
  }
}

}  // namespace

std::complex<double> rho(double theta) {
  check_circle(theta);
  const double scale = 1.0 / (2.0 * elliptic::K_unit_modulus_abs2(theta));
  return std::complex<double>(0.0, scale) * std::polar(1.0, -theta / 2.0);
}

double rho_tilde(double theta) {
  check_circle(theta);
  return std::sin(theta / 2.0) / (2.0 * elliptic::K_unit_modulus_abs2(theta));
}

double interval_w_split(double s_plus, double s_minus) {
  if (!(s_plus > 0.0 && s_minus > 0.0)) throw Error(ErrorCode::DomainError, "interval weight needs -2 < x < 2");
  // K(sqrt(s_plus)) has complementary modulus sqrt(s_minus) and vice versa.
  const double kp = elliptic::K_from_complement(std::sqrt(s_minus));
  const double km = elliptic::K_from_complement(std::sqrt(s_plus));
  return 2.0 / (kp * kp + km * km);
}

double interval_w(double x) {
  if (!(x > -2.0 && x < 2.0)) throw Error(ErrorCode::DomainError, "interval weight needs -2 < x < 2, got " + std::to_string(x));
  return interval_w_split(0.5 + x / 4.0, 0.5 - x / 4.0);
}

double interval_w_theta(double theta) {
  check_circle(theta);
  return 1.0 / (2.0 * elliptic::K_unit_modulus_abs2(theta));
}

std::complex<double> weight(WeightKind kind, double point) {
  switch (kind) {
    case WeightKind::CircleRho: return rho(point);
    case WeightKind::CircleRhoTilde: return rho_tilde(point);
    case WeightKind::IntervalW: return interval_w(point);
    case WeightKind::IntervalLegendreW: return interval_w_theta(point);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown weight kind");
}

}  // namespace helbp::szego
