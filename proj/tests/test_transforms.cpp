#include <doctest.h>

#include "helbp/lbp.hpp"
#include "helbp/transforms.hpp"
#include "support.hpp"

using helbp::ErrorCode;
using helbp::Poly;
using helbp::Rational;
using test::poly;
using test::q;
namespace lbp = helbp::lbp;
namespace tr = helbp::transforms;

TEST_CASE("Christoffel transform at mu = 1") {
  const auto ct = tr::christoffel(lbp::Family::hermite(), Rational(1), 12);
  CHECK(ct.U[1] == q("23/16"));
  CHECK(ct.polys[1](Rational(0)) == q("7/16"));
  CHECK(ct.polys[1] == poly({"7/16", "1"}));
  CHECK(lbp::monic_P(ct.family, 12) == ct.polys);
}

TEST_CASE("Christoffel coefficient formulas match exact division") {
  for (const auto& f : {lbp::Family::hermite(), lbp::Family::associated(1), lbp::Family::stieltjes_carlitz(Rational(4))}) {
    for (const Rational& mu : {Rational(1), Rational(2), q("-1/3"), q("5/7"), Rational(0)}) {
      const auto ct = tr::christoffel(f, mu, 15);
      CHECK(lbp::monic_P(ct.family, 15) == ct.polys);
      const auto P = lbp::monic_P(f, 16);
      for (int n = 0; n <= 15; ++n) CHECK(ct.polys[n] * Poly::linear(mu) == P[n + 1] - P[n] * ct.U[n]);
    }
  }
}

TEST_CASE("Christoffel errors") {
  // P_1(-1) = 0 for the Hermite family
  CHECK_ERROR_CODE(tr::christoffel(lbp::Family::hermite(), Rational(-1), 5), ErrorCode::ZeroAtTransformPoint);
  const auto c = lbp::exact_moments(0, 5);
  CHECK_ERROR_CODE(tr::christoffel_moments(c, Rational(-1)), ErrorCode::MomentMapSingular);
}

TEST_CASE("transformed moments are orthogonal to the transformed polynomials") {
  for (int j = 0; j <= 1; ++j) {
    for (const Rational& mu : {Rational(1), Rational(3), Rational(0)}) {
      const auto ct = tr::christoffel(lbp::Family::associated(j), mu, 10);
      const auto c = tr::christoffel_moments(lbp::exact_moments(j, 13), mu);
      CHECK(c[0] == Rational(1));
      for (int n = 1; n <= 10; ++n)
        for (int i = 0; i < n; ++i) CHECK(lbp::pair_with_moments(ct.polys[n], c, i).is_zero());
    }
  }
}

TEST_CASE("moments after the transform at mu = 1 are symmetric") {
  const auto c = tr::christoffel_moments(lbp::exact_moments(0, 15), Rational(1));
  for (int n = 1; n <= 13; ++n) CHECK(c[-n] == c[n]);
}

TEST_CASE("transform at mu = 0") {
  const auto f = tr::christoffel_zero(lbp::Family::hermite(), 30);
  CHECK(f.d(0) == q("1/8"));
  CHECK(f.d(1) == q("-1/3"));
  CHECK(f.b(1) == q("-3/8"));
  for (int n = 1; n <= 30; ++n) {
    const Rational m = Rational(n) + q("1/2");
    CHECK(f.d(n) == Rational(-n, n + 2));
    CHECK(f.b(n) == -(m * m) / Rational((n + 1) * (n + 2)));
  }
  CHECK(lbp::partner_polys(lbp::Family::hermite(), 15) == tr::christoffel(lbp::Family::hermite(), Rational(0), 15).polys);
}

TEST_CASE("Geronimus transform") {
  const auto g = tr::geronimus(lbp::Family::hermite(), Rational(1), Rational(1), 12);
  CHECK(g.phi[0] == Rational(1));
  CHECK(g.phi[1] == Rational(3));
  CHECK(g.V[0] == Rational(1));
  CHECK(g.V[1] == q("-1/2"));
  CHECK(g.family.d(0) == q("1/2"));
  CHECK(g.family.b(1) == q("-3/2"));
  CHECK(g.nu == q("-1/2"));
  CHECK(g.mass_text() == "(-1/2+1)/(2pi)");
  CHECK(lbp::monic_P(g.family, 12) == g.polys);
}

TEST_CASE("Geronimus coefficient formulas match the polynomial formula") {
  for (const Rational& chi : {Rational(1), Rational(2), q("1/3"), q("-5/2")}) {
    for (const Rational& mu : {Rational(1), Rational(2)}) {
      const auto g = tr::geronimus(lbp::Family::hermite(), mu, chi, 15);
      CHECK(lbp::monic_P(g.family, 15) == g.polys);
      CHECK(g.nu == mu * chi / (Rational(-1) - chi));
    }
  }
}

TEST_CASE("phi closed form for the Hermite family") {
  for (const Rational& chi : {Rational(1), Rational(2), q("3/7")}) {
    const auto g = tr::geronimus(lbp::Family::hermite(), Rational(1), chi, 20);
    for (int n = 0; n <= 20; ++n) CHECK(g.phi[n] == tr::phi_hermite(n, chi));
  }
}

TEST_CASE("mass identity") {
  for (const Rational& chi : {Rational(1), Rational(2), q("2/9")}) {
    const auto g = tr::geronimus(lbp::Family::hermite(), Rational(1), chi, 1);
    CHECK(g.nu + Rational(1) == Rational(1) / (Rational(1) + chi));
  }
}

TEST_CASE("Geronimus errors") {
  const auto h = lbp::Family::hermite();
  CHECK_ERROR_CODE(tr::geronimus(h, Rational(1), Rational(0), 5), ErrorCode::DegenerateTransformedFamily);
  CHECK_ERROR_CODE(tr::geronimus(h, Rational(1), Rational(-1), 5), ErrorCode::ChiEqualsD0);
  CHECK_ERROR_CODE(tr::ct_gt_roundtrip(h, Rational(1), Rational(0), 10), ErrorCode::DegenerateTransformedFamily);
}

TEST_CASE("Christoffel undoes Geronimus") {
  const auto h = lbp::Family::hermite();
  CHECK(tr::ct_gt_roundtrip(h, Rational(1), Rational(1), 10));
  CHECK(tr::ct_gt_roundtrip(h, Rational(1), Rational(2), 10));
  CHECK(tr::ct_gt_roundtrip(lbp::Family::associated(1), Rational(2), q("3/5"), 10));
  CHECK(tr::ct_gt_roundtrip(lbp::Family::stieltjes_carlitz(Rational(4)), Rational(1), Rational(1), 8));
}
