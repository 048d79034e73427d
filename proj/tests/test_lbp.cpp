#include <doctest.h>

#include "helbp/lbp.hpp"
#include "helbp/series.hpp"
#include "support.hpp"

using helbp::ErrorCode;
using helbp::Poly;
using helbp::Rational;
using test::poly;
using test::q;
namespace lbp = helbp::lbp;

TEST_CASE("Hermite coefficients") {
  const auto h = lbp::Family::hermite();
  CHECK(h.d(0) == Rational(-1));
  CHECK(h.b(1) == q("-9/8"));
  CHECK(h.b(2) == q("-25/24"));
  CHECK(h.b(3) == q("-49/48"));
  CHECK_ERROR_CODE(h.b(0), ErrorCode::CoefficientOutOfRange);
  CHECK_ERROR_CODE(h.d(-1), ErrorCode::CoefficientOutOfRange);
}

TEST_CASE("associated families shift into each other") {
  for (int j = 0; j <= 3; ++j) {
    const auto f = lbp::Family::associated(j).shifted(1);
    const auto g = lbp::Family::associated(j + 1);
    for (int n = 1; n <= 20; ++n) {
      CHECK(f.b(n) == g.b(n));
      CHECK(f.d(n) == Rational(-1));
    }
  }
  CHECK(lbp::Family::associated(0).kind() == lbp::FamilyKind::Hermite);
  CHECK_ERROR_CODE(lbp::Family::associated(-1), ErrorCode::InvalidArgument);
}

TEST_CASE("A_n, B_n") {
  auto [A0, B0] = lbp::hermite_AB(0);
  CHECK(A0 == poly({"1"}));
  CHECK(B0.is_zero());
  auto [A1, B1] = lbp::hermite_AB(1);
  CHECK(A1 == poly({"2/3", "2/3"}));
  CHECK(B1 == poly({"0", "1/3"}));
  auto [A2, B2] = lbp::hermite_AB(2);
  CHECK(A2 == poly({"8/15", "7/15", "8/15"}));
  CHECK(B2 == poly({"0", "4/15", "4/15"}));
}

TEST_CASE("Wronskian identity") {
  for (int n = 1; n <= 50; ++n) CHECK(lbp::wronskian_residual(n).is_zero());
}

TEST_CASE("monic polynomials") {
  const auto P = lbp::monic_P(lbp::Family::hermite(), 3);
  CHECK(P[0] == poly({"1"}));
  CHECK(P[1] == poly({"1", "1"}));
  CHECK(P[2] == poly({"1", "7/8", "1"}));
  CHECK(P[3] == poly({"1", "5/6", "5/6", "1"}));
}

TEST_CASE("monic polynomials satisfy their recurrence") {
  for (const auto& f : {lbp::Family::hermite(), lbp::Family::associated(2), lbp::Family::stieltjes_carlitz(q("9/4"))}) {
    const auto P = lbp::monic_P(f, 25);
    for (int n = 1; n < 25; ++n) {
      CHECK(P[n + 1] == (P[n] + P[n - 1] * f.b(n)).shifted(1) - P[n] * f.d(n));
      CHECK(P[n].degree() == n);
      CHECK(P[n].is_monic());
    }
  }
}

TEST_CASE("palindromy exactly when d = -1") {
  for (int j = 0; j <= 2; ++j)
    for (const Poly& p : lbp::monic_P(lbp::Family::associated(j), 25)) CHECK(p.is_palindromic());
  const auto sc = lbp::monic_P(lbp::Family::stieltjes_carlitz(Rational(1)), 5);
  for (int n = 1; n <= 5; ++n) CHECK_FALSE(sc[n].is_palindromic());
}

TEST_CASE("associated polynomials") {
  const auto P1 = lbp::associated_P1(lbp::Family::hermite(), 20);
  CHECK(P1[0] == poly({"1"}));
  CHECK(P1[1] == poly({"1", "1"}));
  const auto ab = lbp::ab_sequence(21);
  for (int n = 1; n <= 21; ++n) CHECK(P1[n - 1] == ab.B[n].divided_by_z() * (Rational(2) / lbp::xi(n)));
}

TEST_CASE("reciprocal family") {
  const auto h = lbp::Family::hermite();
  const auto hr = lbp::reciprocal_family(h);
  for (int n = 1; n <= 20; ++n) {
    CHECK(hr.b(n) == h.b(n));
    CHECK(hr.d(n) == h.d(n));
  }
  const auto sc = lbp::Family::stieltjes_carlitz(Rational(4));
  const auto r = lbp::reciprocal_family(sc);
  CHECK(r.d(0) == q("-1/2"));
  // b*_1 = b_1/(d_0 d_1); see the coefficient report for the shifted variant.
  CHECK(r.b(1) == q("-9/20"));
  CHECK(lbp::sc_coefficient_tables(Rational(4), 3).rows[1].b_star_index_shifted == q("-81/100"));
}

TEST_CASE("reciprocal family generates the reversed polynomials") {
  for (const Rational& p2 : {Rational(1), Rational(4), q("1/3")}) {
    const auto f = lbp::Family::stieltjes_carlitz(p2);
    const auto P = lbp::monic_P(f, 15);
    const auto R = lbp::monic_P(lbp::reciprocal_family(f), 15);
    for (int n = 0; n <= 15; ++n) CHECK(R[n] == P[n].reversed(n) * (Rational(1) / P[n].coeff(0)));
    const auto rr = lbp::reciprocal_family(lbp::reciprocal_family(f));
    for (int n = 1; n <= 15; ++n) {
      CHECK(rr.b(n) == f.b(n));
      CHECK(rr.d(n) == f.d(n));
    }
  }
}

TEST_CASE("partner polynomials") {
  const auto Ph = lbp::partner_polys(lbp::Family::hermite(), 3);
  CHECK(Ph[0] == poly({"1"}));
  CHECK(Ph[1] == poly({"-1/8", "1"}));
  const auto degenerate = lbp::Family::custom("z", [](int) { return Rational(-1); },
                                             [](int n) { return n == 2 ? Rational(0) : Rational(-1); });
  CHECK_ERROR_CODE(lbp::partner_polys(degenerate, 4), ErrorCode::DegenerateFamily);
}

TEST_CASE("coefficient extraction round trip") {
  const auto f = lbp::Family::stieltjes_carlitz(q("5/2"));
  const auto g = lbp::extract_family("x", lbp::monic_P(f, 12));
  for (int n = 0; n < 12; ++n) {
    CHECK(g.d(n) == f.d(n));
    if (n >= 1) CHECK(g.b(n) == f.b(n));
  }
  CHECK_ERROR_CODE(lbp::extract_family("bad", {poly({"1"}), poly({"1", "1"}), poly({"1", "0", "0", "1"})}),
                   ErrorCode::NotAnLbp);
}

TEST_CASE("moment table") {
  const auto c = lbp::exact_moments(lbp::Family::hermite(), 4);
  CHECK(c.lo() == -3);
  CHECK(c.hi() == 4);
  CHECK(c[0] == Rational(1));
  CHECK(c[1] == Rational(-1));
  CHECK(c[2] == q("-1/8"));
  CHECK(c[3] == q("-1/16"));
  CHECK(c[-1] == q("1/8"));
  CHECK_ERROR_CODE(c.at(5), ErrorCode::CoefficientOutOfRange);
  CHECK_ERROR_CODE(lbp::exact_moments(lbp::Family::stieltjes_carlitz(Rational(1)), 3), ErrorCode::InvalidArgument);
}

TEST_CASE("moment symmetry c_{-n} = -c_{n+1}") {
  for (int j = 0; j <= 2; ++j) {
    const auto c = lbp::exact_moments(j, 20);
    CHECK(c[0] == Rational(1));
    for (int n = 1; n < 20; ++n) CHECK(c[-n] == -c[n + 1]);
  }
}

TEST_CASE("biorthogonality against the moments") {
  for (int j = 0; j <= 2; ++j) {
    const auto c = lbp::exact_moments(j, 15);
    const auto P = lbp::monic_P(lbp::Family::associated(j), 14);
    for (int n = 1; n <= 14; ++n) {
      for (int i = 0; i < n; ++i) CHECK(lbp::pair_with_moments(P[n], c, i).is_zero());
      // and the pairing with z^{-n} is the nonzero normalization
      CHECK(lbp::pair_with_moments(P[n], c, n) == lbp::normalization_h(lbp::Family::associated(j), n));
    }
  }
}

TEST_CASE("normalization") {
  const auto h = lbp::Family::hermite();
  CHECK(lbp::normalization_h(h, 0) == Rational(1));
  CHECK(lbp::normalization_h(h, 1) == q("9/8"));
  CHECK(lbp::normalization_h(h, 2) == q("75/64"));
}

TEST_CASE("explicit constructions of A_n") {
  CHECK(lbp::beta_poly(1) == poly({"1/2", "1/2"}));
  CHECK(lbp::explicit_A_series(1) == poly({"2/3", "2/3"}));
  CHECK(lbp::legendre_Y(2) == poly({"-1/2", "0", "3/2"}));
  CHECK(lbp::explicit_A_legendre(1) == poly({"2/3", "2/3"}));
  const auto ab = lbp::ab_sequence(25);
  for (int n = 0; n <= 25; ++n) {
    CHECK(lbp::explicit_A_series(n) == ab.A[n]);
    CHECK(lbp::explicit_A_legendre(n) == ab.A[n]);
  }
  for (int j = 1; j <= 3; ++j) {
    const auto abj = lbp::ab_sequence(12, j);
    for (int n = 0; n <= 12; ++n) CHECK(lbp::explicit_A_legendre(n, j) == abj.A[n]);
  }
}

TEST_CASE("xi links A_n and P_n") {
  for (int j = 0; j <= 2; ++j) {
    const auto ab = lbp::ab_sequence(20, j);
    const auto P = lbp::monic_P(lbp::Family::associated(j), 20);
    for (int n = 0; n <= 20; ++n) CHECK(ab.A[n] == P[n] * lbp::xi(n, j));
  }
}

TEST_CASE("G values") {
  CHECK(lbp::G_value(1) == q("4/3"));
  CHECK(lbp::G_value(2) == q("23/15"));
  CHECK(lbp::G_value(1, 1) == q("8/5"));
  CHECK(lbp::harmonic(3) - lbp::harmonic(1) / Rational(2) == q("4/3"));
  const auto ab = lbp::ab_sequence(20);
  const auto P = lbp::monic_P(lbp::Family::hermite(), 20);
  for (int n = 0; n <= 20; ++n) {
    CHECK(lbp::G_value(n) == lbp::harmonic(2 * n + 1) - lbp::harmonic(n) / Rational(2));
    CHECK(ab.A[n](Rational(1)) == lbp::G_value(n));
    CHECK(ab.B[n](Rational(1)) == lbp::G_value(n) - Rational(1));
    CHECK(P[n](Rational(1)) == lbp::G_value(n) / lbp::xi(n));
  }
}

TEST_CASE("every combination of 1 and G_n solves the recurrence at z = 1") {
  std::mt19937 rng(8);
  for (int t = 0; t < 10; ++t) {
    const Rational alpha = test::random_rational(rng), beta = test::random_rational(rng);
    auto psi = [&](int n) { return alpha + beta * lbp::G_value(n); };
    for (int n = 2; n <= 25; ++n)
      CHECK(Rational(2 * n + 1) * psi(n) - Rational(4 * n) * psi(n - 1) + Rational(2 * n - 1) * psi(n - 2) == Rational(0));
  }
}

TEST_CASE("elliptic ratio series") {
  const auto F = lbp::elliptic_ratio_series(0, 3);
  CHECK(F.coefficients() == std::vector<Rational>{Rational(0), q("1/2"), q("1/16"), q("1/32")});
  CHECK_ERROR_CODE(lbp::elliptic_ratio_series(0, -1), ErrorCode::InvalidOrder);
}

TEST_CASE("Stieltjes-Carlitz report") {
  const auto r0 = lbp::sc_coefficient_tables(Rational(0), 30);
  for (const auto& row : r0.rows) {
    CHECK(row.d == Rational(-1));
    CHECK(row.d_star == Rational(-1));
    if (row.n >= 1) {
      CHECK(row.b_star == row.b);
      CHECK(row.b_hat_agrees);
      CHECK(row.d_hat_agrees);
      const Rational m = Rational(row.n) + q("1/2");
      CHECK(row.b_hat == -(m * m) / Rational((row.n + 1) * (row.n + 2)));
      CHECK(row.d_hat == Rational(-row.n, row.n + 2));
    } else {
      CHECK(row.d_hat == q("1/8"));
    }
    if (row.n >= 2) CHECK_FALSE(row.b_star_agrees);
    CHECK(row.d_star_agrees);
  }
  const auto r4 = lbp::sc_coefficient_tables(Rational(4), 6);
  CHECK(r4.rows[0].d_star == q("-1/2"));
  CHECK(r4.rows[0].d_star_printed == q("-1/2"));
  for (const auto& row : r4.rows) {
    if (row.n >= 1) {
      CHECK(row.b_hat_agrees);
      CHECK(row.d_hat_agrees);
      CHECK_FALSE(row.b_star_agrees);
    }
  }
}
