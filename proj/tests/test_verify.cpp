#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helbp/elliptic.hpp"
#include "helbp/lbp.hpp"
#include "helbp/verify.hpp"
#include "support.hpp"

using helbp::ErrorCode;
using helbp::Rational;
using test::q;
namespace lbp = helbp::lbp;
namespace vf = helbp::verify;

constexpr double kPi = std::numbers::pi;

TEST_CASE("continued fraction convergents") {
  CHECK(vf::tfraction_convergent(1, q("1/2")) == q("1/6"));
  const auto ab = lbp::ab_sequence(25);
  for (const Rational& z : {q("1/2"), Rational(3), q("-2/7"), q("11/13")}) {
    for (int n = 1; n <= 25; ++n) CHECK(vf::tfraction_convergent(n, z) == ab.B[n](z) / ab.A[n](z));
  }
  for (int n = 1; n <= 12; ++n)
    CHECK(vf::tfraction_convergent(n, 0.3) == doctest::Approx(vf::tfraction_convergent(n, q("3/10")).to_double()).epsilon(1e-14));
  // z = -1 makes the first partial denominator 2(1+z) vanish
  CHECK_ERROR_CODE(vf::tfraction_convergent(1, Rational(-1)), ErrorCode::ZeroDenominator);
}

TEST_CASE("convergent error equals the analytic remainder") {
  const double k = std::sqrt(0.5);
  const auto t = helbp::elliptic::complete_triple(k);
  const auto ab = lbp::ab_sequence(30);
  for (int n : {5, 10, 20, 30}) {
    const double err = t.J / t.K - vf::tfraction_convergent(n, 0.5);
    const double want = helbp::elliptic::complete_Jn(n + 1, k) / (t.K * ab.A[n](0.5));
    CHECK(err == doctest::Approx(want).epsilon(1e-5));
  }
}

TEST_CASE("Pade order") {
  const auto r = vf::pade_order_check(0, 1);
  CHECK(r.ok);
  CHECK(r.first_nonzero == 2);
  CHECK(r.residual[2] == q("3/8"));
  for (int j = 0; j <= 2; ++j)
    for (int n = 0; n <= 10; ++n) {
      const auto p = vf::pade_order_check(j, n);
      CHECK(p.ok);
      // the order is exact: the next coefficient does not vanish
      CHECK(p.first_nonzero == n + 1);
    }
}

TEST_CASE("two point Pade") {
  for (int n = 1; n <= 8; ++n) {
    const auto r = vf::two_point_pade_check(n);
    CHECK(r.ok);
    CHECK(r.zero_side_order >= n);
    CHECK(r.infinity_side_order >= n + 1);
  }
}

TEST_CASE("quadrature grids") {
  std::vector<double> x, w;
  vf::gauss_legendre(10, x, w);
  double s = 0, s4 = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    s += w[i];
    s4 += w[i] * std::pow(x[i], 18);
  }
  CHECK(s == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(s4 == doctest::Approx(2.0 / 19).epsilon(1e-14));

  const auto c = vf::circle_grid(256);
  double total = 0;
  for (size_t i = 0; i < c.nodes.size(); ++i) {
    CHECK(c.nodes[i] > 0.0);
    CHECK(c.nodes[i] < 2 * kPi);
    total += c.weights[i];
  }
  CHECK(total == doctest::Approx(2 * kPi).epsilon(1e-14));

  const auto g = vf::interval_grid(128);
  total = 0;
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    total += g.weights[i];
    CHECK(g.nodes[i] == doctest::Approx(-g.nodes[g.nodes.size() - 1 - i]).epsilon(1e-15));
    CHECK(g.s_plus[i] + g.s_minus[i] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(g.s_plus[i] > 0.0);
    CHECK(g.s_minus[i] > 0.0);
  }
  CHECK(total == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("Gram matrices") {
  const auto sz = vf::circle_gram(vf::CircleWeight::Szego, 6, 2048, 1e-8);
  CHECK(sz.pass);
  CHECK(sz.max_offdiag_rel < 1e-8);
  const auto rho = vf::circle_gram(vf::CircleWeight::HermiteRho, 5, 1024, 1e-8);
  CHECK(rho.pass);
  const auto ger = vf::circle_gram(vf::CircleWeight::Geronimus, 5, 1024, 1e-6, Rational(1));
  CHECK(ger.pass);
  CHECK(ger.regular_part_of_one == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(ger.mass_relative_to_regular == doctest::Approx(-3.0).epsilon(1e-9));
  // the mass as printed does not give biorthogonality
  CHECK(ger.printed_mass_offdiag_rel > 1e-2);
  const auto ger2 = vf::circle_gram(vf::CircleWeight::Geronimus, 5, 1024, 1e-6, Rational(2));
  CHECK(ger2.pass);
  CHECK(ger2.mass_relative_to_regular == doctest::Approx(-2.5).epsilon(1e-9));

  const auto iv = vf::interval_gram(8, 512, 1e-8);
  CHECK(iv.pass);
  for (int n = 0; n <= 8; ++n)
    for (int m = 0; m <= 8; ++m)
      if ((n + m) % 2 == 1) CHECK(iv.matrix[n][m] / std::sqrt(iv.matrix[n][n] * iv.matrix[m][m]) < 1e-14);
  CHECK(iv.matrix[2][2] / iv.matrix[1][1] == doctest::Approx(25.0 / 24).epsilon(1e-7));
}

TEST_CASE("coarse grids are rejected") {
  CHECK_FALSE(vf::circle_gram(vf::CircleWeight::Szego, 6, 16, 1e-8).pass);
  CHECK_ERROR_CODE(vf::circle_gram(vf::CircleWeight::Szego, 0, 64, 1e-8), ErrorCode::InvalidArgument);
}

TEST_CASE("moments from the weight") {
  const auto m = vf::moment_weight_check(6, 1024, 1e-9);
  CHECK(m.pass);
  CHECK(m.rho_tilde_mass == doctest::Approx(1.0).epsilon(1e-9));
  for (size_t i = 0; i < m.n.size(); ++i) {
    if (m.n[i] == 0) CHECK(std::abs(m.numeric[i] - 1.0) < 1e-9);
    if (m.n[i] == 2) CHECK(std::abs(m.numeric[i] + 0.125) < 1e-9);
    if (m.n[i] == -1) CHECK(std::abs(m.numeric[i] - 0.125) < 1e-9);
  }
}

TEST_CASE("kernel integral") { CHECK(vf::geronimus_kernel_integral() == doctest::Approx(2.0).epsilon(1e-9)); }

TEST_CASE("suites") {
  const auto names = vf::suite_names();
  CHECK(names.size() == 6);
  for (const auto& s : vf::run_suites("all", {})) {
    CHECK_MESSAGE(s.pass(), s.suite);
    for (const auto& c : s.checks) CHECK_MESSAGE(c.pass, std::string(s.suite + "/" + c.name + ": " + c.detail));
  }
  CHECK_ERROR_CODE(vf::run_suites("nope", {}), ErrorCode::InvalidArgument);
}
