#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "helbp/elliptic.hpp"
#include "helbp/lbp.hpp"
#include "helbp/szego.hpp"
#include "helbp/transforms.hpp"
#include "support.hpp"

using helbp::ErrorCode;
using helbp::Poly;
using helbp::Rational;
using test::poly;
using test::q;
namespace lbp = helbp::lbp;
namespace sz = helbp::szego;

constexpr double kPi = std::numbers::pi;

TEST_CASE("reflection parameters") {
  const auto r = sz::reflection_params(0, 200);
  CHECK(r.ratio_form[0] == q("-7/16"));
  CHECK(r.ratio_form[1] == q("-19/69"));
  CHECK(r.closed_form[0] == q("-7/16"));
  CHECK(r.closed_form[1] == q("-19/69"));
  CHECK(r.forms_agree);
  CHECK(r.in_open_interval);
  for (int n = 0; n <= 200; ++n) CHECK(r.ratio_form[n] == Rational(1) - sz::U_ratio(n + 1));
  for (int j = 1; j <= 3; ++j) CHECK(sz::reflection_params(j, 60).in_open_interval);
}

TEST_CASE("reflection parameters are minus the constant terms") {
  for (int j = 0; j <= 2; ++j) {
    const auto r = sz::reflection_params(j, 15);
    const auto P = helbp::transforms::christoffel(lbp::Family::associated(j), Rational(1), 16).polys;
    for (int n = 0; n <= 15; ++n) CHECK(r.ratio_form[n] == -P[n + 1].coeff(0));
  }
}

TEST_CASE("Szego recurrence") {
  const auto P = sz::szego_polys(16);
  CHECK(P[0] == poly({"1"}));
  CHECK(P[1] == poly({"7/16", "1"}));
  const auto a = sz::reflection_params(0, 15).ratio_form;
  for (int n = 0; n <= 15; ++n) CHECK(sz::szego_residual(P[n + 1], P[n], a[n], n).is_zero());
  // a perturbed parameter breaks it
  CHECK_FALSE(sz::szego_residual(P[3], P[2], a[2] + q("1/1000"), 2).is_zero());
}

TEST_CASE("palindromic rewrite") {
  const auto seq = sz::symmetric_S(lbp::Family::hermite(), 20);
  CHECK(seq.S[1] == poly({"0", "1"}));
  CHECK(seq.S[2] == poly({"-9/8", "0", "1"}));
  for (int n = 1; n < 20; ++n) CHECK(seq.S[n + 1] == seq.S[n].shifted(1) - seq.S[n - 1] * seq.u[n]);
  // z^{-n/2} P_n(z) = S_n(x) checked numerically on the circle, x = 2 cos(theta/2)
  const auto P = lbp::monic_P(lbp::Family::hermite(), 20);
  for (int n = 0; n <= 20; ++n) {
    for (double th : {0.3, 1.7, 2.9}) {
      const auto z = std::polar(1.0, th);
      const auto lhs = P[n](z) * std::polar(1.0, -th * n / 2);
      const double x = 2 * std::cos(th / 2);
      double scale = 0;  // bound on the rounding in evaluating S_n
      for (int i = 0; i <= n; ++i) scale += std::abs(seq.S[n].coeff(i).to_double()) * std::pow(std::abs(x), i);
      CHECK(std::abs(lhs - seq.S[n](x)) < 1e-13 * scale);
    }
  }
  CHECK_ERROR_CODE(sz::palindromic_to_x(poly({"1", "2", "3"})), ErrorCode::NotPalindromic);
}

TEST_CASE("palindromic criterion rejects a perturbed family") {
  auto b = [](int n) { return -Rational(1) - Rational(1, n + 1); };
  CHECK_NOTHROW(sz::symmetric_S(lbp::Family::custom("ok", b, [](int) { return Rational(-1); }), 8));
  const auto bad = lbp::Family::custom("bad", b, [](int n) { return n == 3 ? q("-11/10") : Rational(-1); });
  CHECK_ERROR_CODE(sz::symmetric_S(bad, 8), ErrorCode::NotPalindromic);
}

TEST_CASE("u_n chain") {
  const auto u = sz::dg_map_u(50);
  CHECK(u[1] == q("9/8"));
  CHECK(u[2] == q("25/24"));
  const auto seq = sz::symmetric_S(lbp::Family::hermite(), 50);
  for (int n = 1; n <= 50; ++n) {
    const Rational m = Rational(n) + q("1/2");
    const Rational want = m * m / Rational(n * (n + 1));
    CHECK(u[n] == want);
    CHECK(seq.u[n] == want);
    CHECK(sz::associated_legendre_u(q("1/2"), n) == want);
  }
  CHECK(sz::dg_map_S(12) == sz::symmetric_S(lbp::Family::hermite(), 12).S);
}

TEST_CASE("associated Legendre recurrence coefficients") {
  CHECK(sz::associated_legendre_u(Rational(0), 1) == q("4/3"));
  for (int j = 1; j <= 3; ++j) {
    const auto f = lbp::Family::associated(j);
    for (int n = 1; n <= 15; ++n) CHECK(sz::associated_legendre_u(Rational(j) + q("1/2"), n) == -f.b(n));
  }
  CHECK_ERROR_CODE(sz::associated_legendre_u(q("-1/2"), 1), ErrorCode::SingularDenominator);
}

TEST_CASE("weights") {
  const double g = std::tgamma(0.25);
  const double K0 = helbp::elliptic::complete_triple(std::sqrt(0.5)).K;
  CHECK(sz::interval_w(0.0) == doctest::Approx(1 / (K0 * K0)).epsilon(1e-13));
  CHECK(sz::interval_w(0.0) == doctest::Approx(16 * kPi / (g * g * g * g)).epsilon(1e-13));
  CHECK(sz::rho_tilde(kPi / 2) * 2 * helbp::elliptic::K_unit_modulus_abs2(kPi / 2) ==
        doctest::Approx(std::sin(kPi / 4)).epsilon(1e-13));
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> xs(-1.999, 1.999), ths(1e-3, 2 * kPi - 1e-3);
  for (int i = 0; i < 50; ++i) {
    const double x = xs(rng);
    CHECK(sz::interval_w(x) == doctest::Approx(sz::interval_w(-x)).epsilon(1e-13));
    CHECK(sz::interval_w(x) > 0.0);
    CHECK(sz::interval_w(x) <= sz::interval_w(0.0) * (1 + 1e-14));
    const double th = ths(rng);
    CHECK(sz::interval_w(2 * std::cos(th / 2)) == doctest::Approx(sz::interval_w_theta(th)).epsilon(1e-12));
    CHECK(sz::rho_tilde(th) == doctest::Approx(sz::interval_w_theta(th) * std::sin(th / 2)).epsilon(1e-13));
    const auto r = sz::rho(th);
    CHECK(std::abs(r) == doctest::Approx(sz::interval_w_theta(th)).epsilon(1e-13));
  }
  CHECK(sz::weight(sz::WeightKind::IntervalW, 0.5).real() == sz::interval_w(0.5));
  CHECK_ERROR_CODE(sz::interval_w(2.0), ErrorCode::DomainError);
  CHECK_ERROR_CODE(sz::rho_tilde(0.0), ErrorCode::DomainError);
  CHECK_ERROR_CODE(sz::weight(sz::WeightKind::CircleRho, 7.0), ErrorCode::DomainError);
}
