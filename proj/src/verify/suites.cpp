#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "helbp/elliptic.hpp"
#include "helbp/error.hpp"
#include "helbp/lbp.hpp"
#include "helbp/series.hpp"
#include "helbp/szego.hpp"
#include "helbp/transforms.hpp"
#include "helbp/verify.hpp"

namespace helbp::verify {

namespace {

constexpr double kPi = std::numbers::pi;

using Body = std::function<std::pair<bool, std::string>()>;

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

void run(SuiteResult& suite, const std::string& name, const Body& body) {
  CheckResult c;
  c.name = name;
  try {
    auto [ok, detail] = body();
    c.pass = ok;
    c.detail = std::move(detail);
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = std::string("raised ") + e.what();
  }
  suite.checks.push_back(std::move(c));
}

std::pair<bool, std::string> exact(bool ok, const std::string& what) { return {ok, ok ? what : "mismatch: " + what}; }

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 40);
  return Rational(num(rng), den(rng));
}

// ---- exactnum ---------------------------------------------------------------

SuiteResult exactnum_suite() {
  SuiteResult s{"exactnum", {}};
  run(s, "pochhammer_examples", [] {
    return exact(pochhammer(Rational(3, 2), 0) == Rational(1) && pochhammer(Rational(3, 2), 2) == Rational(15, 4) &&
                     pochhammer(Rational(1, 2), 3) == Rational(15, 8),
                 "(3/2)_0 = 1, (3/2)_2 = 15/4, (1/2)_3 = 15/8");
  });
  run(s, "hyp2f1_coefficient_ratio", [] {
    const Rational params[][3] = {{Rational(1, 2), Rational(1, 2), Rational(1)},
                                  {Rational(3, 2), Rational(1, 2), Rational(2)},
                                  {Rational(-3), Rational(1, 2), Rational(-5, 2)},
                                  {Rational(2, 3), Rational(-7, 4), Rational(5, 3)}};
    for (const auto& p : params) {
      const TruncatedSeries f = hyp2f1_series(p[0], p[1], p[2], 12);
      for (int m = 0; m < 12; ++m) {
        if (f[m].is_zero()) continue;
        const Rational want = (p[0] + Rational(m)) * (p[1] + Rational(m)) / ((p[2] + Rational(m)) * Rational(m + 1));
        if (f[m + 1] / f[m] != want) return std::pair{false, "ratio fails at m = " + std::to_string(m)};
      }
    }
    return std::pair{true, std::string("4 parameter sets, 12 terms")};
  });
  run(s, "series_divide_roundtrip", [] {
    std::mt19937 rng(20240601);
    for (int trial = 0; trial < 40; ++trial) {
      const int order = 1 + trial % 9;
      std::vector<Rational> a, b;
      for (int i = 0; i <= order; ++i) {
        a.push_back(random_rational(rng));
        b.push_back(random_rational(rng));
      }
      if (b[0].is_zero()) b[0] = Rational(1);
      const TruncatedSeries num(a, order), den(b, order);
      if (series_divide(num, den) * den != num) return std::pair{false, "trial " + std::to_string(trial)};
    }
    return std::pair{true, std::string("40 random quotients")};
  });
  run(s, "rational_field_laws", [] {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
      if ((a + b) + c != a + (b + c) || a * b != b * a || a * (b + c) != a * b + a * c || (a * b) * c != a * (b * c)) {
        return std::pair{false, "trial " + std::to_string(trial)};
      }
    }
    return std::pair{true, std::string("200 random triples")};
  });
  run(s, "poly_eval_example", [] {
    return exact(Poly({Rational(1), Rational(7, 8), Rational(1)})(Rational(1)) == Rational(23, 8), "P_2(1) = 23/8");
  });
  return s;
}

// ---- elliptic ---------------------------------------------------------------

SuiteResult elliptic_suite() {
  SuiteResult s{"elliptic", {}};
  run(s, "legendre_relation_random_moduli", [] {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> dist(0.01, 0.99);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) worst = std::max(worst, elliptic::legendre_relation_residual(dist(rng)));
    return std::pair{worst < 1e-11, "max residual " + sci(worst)};
  });
  run(s, "Jn_contiguous_relation", [] {
    double worst = 0.0;
    for (double k : {0.3, 0.6, 0.9}) {
      const double m = k * k;
      for (int n = 2; n <= 10; ++n) {
        const double a = (2 * n - 1) * elliptic::complete_Jn(n, k);
        const double b = (2 * n - 2) * (1 + m) * elliptic::complete_Jn(n - 1, k);
        const double c = m * (2 * n - 3) * elliptic::complete_Jn(n - 2, k);
        worst = std::max(worst, std::abs(a - b + c) / std::max({std::abs(a), std::abs(b), std::abs(c)}));
      }
    }
    return std::pair{worst < 1e-10, "max relative residual " + sci(worst)};
  });
  run(s, "incomplete_Jn_monotone", [] {
    for (int n : {0, 1, 3}) {
      for (double k : {0.2, 0.7, 0.95}) {
        double prev = -1.0;
        for (int i = 0; i <= 50; ++i) {
          const double v = elliptic::incomplete_Jn(n, i / 50.0, k);
          if (v < prev) return std::pair{false, "decrease at n = " + std::to_string(n)};
          prev = v;
        }
      }
    }
    return std::pair{true, std::string("n in {0,1,3}, k in {0.2,0.7,0.95}, 51 points")};
  });
  run(s, "K_unit_modulus_conjugate_symmetry", [] {
    double worst = 0.0;
    for (int i = 1; i < 40; ++i) {
      const double th = 2 * kPi * i / 40.0;
      const auto a = elliptic::K_unit_modulus(th);
      const auto b = elliptic::K_unit_modulus(2 * kPi - th);
      worst = std::max(worst, std::abs(a - std::conj(b)) / std::abs(a));
    }
    return std::pair{worst < 1e-12, "max relative deviation " + sci(worst)};
  });
  run(s, "complete_vs_incomplete_Jn", [] {
    const double a = elliptic::complete_Jn(2, 0.7), b = elliptic::incomplete_Jn(2, 1.0, 0.7);
    return std::pair{std::abs(a - b) < 1e-9, "difference " + sci(std::abs(a - b))};
  });
  run(s, "K_lemniscatic_value", [] {
    const double want = std::tgamma(0.25) * std::tgamma(0.25) / (4 * std::sqrt(kPi));
    const double got = elliptic::complete_triple(std::sqrt(0.5)).K;
    return std::pair{std::abs(got - want) < 1e-12, "difference " + sci(std::abs(got - want))};
  });
  run(s, "J_hypergeometric_form", [] {
    const double k = 0.3;
    double sum = 0.0;
    const TruncatedSeries f = hyp2f1_series(Rational(3, 2), Rational(1, 2), Rational(2), 60);
    for (int m = 60; m >= 0; --m) sum = sum * k * k + f[m].to_double();
    const double want = kPi * k * k / 4 * sum;
    const double got = elliptic::complete_triple(k).J;
    return std::pair{std::abs(got - want) < 1e-12, "difference " + sci(std::abs(got - want))};
  });
  return s;
}

// ---- lbp --------------------------------------------------------------------

std::vector<lbp::Family> sample_families() {
  return {lbp::Family::hermite(), lbp::Family::associated(1), lbp::Family::associated(2),
          lbp::Family::stieltjes_carlitz(Rational(1)), lbp::Family::stieltjes_carlitz(Rational(4))};
}

SuiteResult lbp_suite() {
  SuiteResult s{"lbp", {}};
  run(s, "monic_degree", [] {
    for (const auto& f : sample_families()) {
      const auto P = lbp::monic_P(f, 30);
      for (int n = 0; n <= 30; ++n)
        if (P[n].degree() != n || !P[n].is_monic()) return std::pair{false, f.name() + " n = " + std::to_string(n)};
    }
    return std::pair{true, std::string("5 families, n <= 30")};
  });
  run(s, "palindromic_when_d_is_minus_one", [] {
    for (int j : {0, 1, 2}) {
      const auto P = lbp::monic_P(lbp::Family::associated(j), 30);
      for (int n = 0; n <= 30; ++n)
        if (!P[n].is_palindromic()) return std::pair{false, "j = " + std::to_string(j) + ", n = " + std::to_string(n)};
    }
    return std::pair{true, std::string("j in {0,1,2}, n <= 30")};
  });
  run(s, "exact_orthogonality", [] {
    for (int j : {0, 1, 2}) {
      const auto c = lbp::exact_moments(j, 12);
      const auto P = lbp::monic_P(lbp::Family::associated(j), 12);
      for (int n = 1; n <= 12; ++n)
        for (int i = 0; i < n; ++i)
          if (!lbp::pair_with_moments(P[n], c, i).is_zero())
            return std::pair{false, "j = " + std::to_string(j) + ", n = " + std::to_string(n) + ", i = " + std::to_string(i)};
    }
    return std::pair{true, std::string("j in {0,1,2}, 0 <= i < n <= 12")};
  });
  run(s, "hermite_moment_values", [] {
    const auto c = lbp::exact_moments(0, 12);
    bool ok = c[0] == Rational(1) && c[1] == Rational(-1) && c[2] == Rational(-1, 8) && c[3] == Rational(-1, 16) &&
              c[-1] == Rational(1, 8);
    for (int n = 1; n <= 11; ++n) ok = ok && c[-n] == -c[n + 1];
    return exact(ok, "c_0..c_3 = 1, -1, -1/8, -1/16 and c_{-n} = -c_{n+1}");
  });
  run(s, "xi_bridge", [] {
    const auto ab = lbp::ab_sequence(25, 0);
    const auto P = lbp::monic_P(lbp::Family::hermite(), 25);
    for (int n = 0; n <= 25; ++n)
      if (P[n] * lbp::xi(n) != ab.A[n]) return std::pair{false, "n = " + std::to_string(n)};
    return std::pair{true, std::string("xi_n P_n = A_n, n <= 25")};
  });
  run(s, "P_at_one_equals_G_over_xi", [] {
    const auto P = lbp::monic_P(lbp::Family::hermite(), 25);
    for (int n = 0; n <= 25; ++n)
      if (P[n](Rational(1)) != lbp::G_value(n) / lbp::xi(n)) return std::pair{false, "n = " + std::to_string(n)};
    return std::pair{true, std::string("n <= 25")};
  });
  run(s, "reciprocal_involution", [] {
    for (const auto& f : {lbp::Family::hermite(), lbp::Family::stieltjes_carlitz(Rational(1)),
                          lbp::Family::stieltjes_carlitz(Rational(4))}) {
      const auto rr = lbp::reciprocal_family(lbp::reciprocal_family(f));
      for (int n = 0; n <= 20; ++n) {
        if (rr.d(n) != f.d(n) || (n >= 1 && rr.b(n) != f.b(n))) return std::pair{false, f.name()};
      }
    }
    return std::pair{true, std::string("hermite, SC(1), SC(4), n <= 20")};
  });
  run(s, "reciprocal_matches_constructed", [] {
    for (const auto& f : sample_families()) {
      const auto P = lbp::monic_P(f, 16);
      std::vector<Poly> star;
      for (int n = 0; n <= 16; ++n) star.push_back(P[n].reversed(n) * (Rational(1) / P[n].coeff(0)));
      const auto built = lbp::extract_family("star", star);
      const auto rec = lbp::reciprocal_family(f);
      for (int n = 0; n < 16; ++n)
        if (built.d(n) != rec.d(n) || (n >= 1 && built.b(n) != rec.b(n))) return std::pair{false, f.name()};
    }
    return std::pair{true, std::string("5 families, n < 16")};
  });
  run(s, "general_solution_at_one", [] {
    const std::pair<int, int> ab[] = {{1, 0}, {0, 1}, {2, -3}};
    for (auto [alpha, beta] : ab) {
      auto psi = [&](int n) { return Rational(alpha) + Rational(beta) * lbp::G_value(n); };
      for (int n = 2; n <= 20; ++n) {
        const Rational r = Rational(2 * n + 1) * psi(n) - Rational(4 * n) * psi(n - 1) + Rational(2 * n - 1) * psi(n - 2);
        if (!r.is_zero()) return std::pair{false, "n = " + std::to_string(n)};
      }
    }
    return std::pair{true, std::string("(1,0), (0,1), (2,-3), n <= 20")};
  });
  run(s, "wronskian", [] {
    for (int n = 1; n <= 50; ++n)
      if (!lbp::wronskian_residual(n).is_zero()) return std::pair{false, "n = " + std::to_string(n)};
    return std::pair{true, std::string("n <= 50")};
  });
  run(s, "A_three_constructions", [] {
    const auto ab = lbp::ab_sequence(25, 0);
    for (int n = 0; n <= 25; ++n)
      if (ab.A[n] != lbp::explicit_A_series(n) || ab.A[n] != lbp::explicit_A_legendre(n, 0))
        return std::pair{false, "n = " + std::to_string(n)};
    for (int j : {1, 2}) {
      const auto abj = lbp::ab_sequence(12, j);
      for (int n = 0; n <= 12; ++n)
        if (abj.A[n] != lbp::explicit_A_legendre(n, j)) return std::pair{false, "j = " + std::to_string(j)};
    }
    return std::pair{true, std::string("recurrence = series = Legendre sum, n <= 25; j = 1, 2 through n = 12")};
  });
  run(s, "associated_P1_hermite_bridge", [] {
    const auto ab = lbp::ab_sequence(16, 0);
    const auto P1 = lbp::associated_P1(lbp::Family::hermite(), 15);
    for (int n = 1; n <= 16; ++n) {
      const Poly want = ab.B[n].divided_by_z() * (Rational(2) / lbp::xi(n));
      if (P1[n - 1] != want) return std::pair{false, "n = " + std::to_string(n)};
    }
    return std::pair{true, std::string("P^(1)_{n-1} = 2 B_n/(z xi_n), n <= 16")};
  });
  run(s, "G_identities", [] {
    const auto ab = lbp::ab_sequence(20, 0);
    for (int n = 0; n <= 20; ++n) {
      const Rational G = lbp::G_value(n);
      if (G != lbp::harmonic(2 * n + 1) - lbp::harmonic(n) / Rational(2)) return std::pair{false, "GH at n = " + std::to_string(n)};
      if (ab.A[n](Rational(1)) != G || ab.B[n](Rational(1)) != G - Rational(1)) return std::pair{false, "A/B at 1, n = " + std::to_string(n)};
    }
    return std::pair{true, std::string("G_n = H_{2n+1} - H_n/2, A_n(1) = G_n, B_n(1) = G_n - 1, n <= 20")};
  });
  run(s, "stieltjes_carlitz_report", [] {
    const auto r0 = lbp::sc_coefficient_tables(Rational(0), 12);
    const auto c0 = transforms::christoffel_zero(lbp::Family::hermite(), 12);
    for (const auto& row : r0.rows) {
      if (row.d_star != Rational(-1) || (row.n >= 1 && row.b_star != row.b)) return std::pair{false, std::string("p2 = 0 reciprocal")};
      if (row.d_hat != c0.d(row.n) || (row.n >= 1 && row.b_hat != c0.b(row.n))) return std::pair{false, std::string("p2 = 0 partner")};
      if (row.n >= 1 && !(row.b_hat_agrees && row.d_hat_agrees)) return std::pair{false, std::string("printed partner at p2 = 0")};
      if (row.n >= 2 && row.b_star_agrees) return std::pair{false, std::string("printed reciprocal b not flagged")};
    }
    return std::pair{true, std::string("p2 = 0 reduces to Hermite/Hermite/mu=0 values; printed reciprocal b flagged for n >= 2")};
  });
  return s;
}

// ---- transforms -------------------------------------------------------------

SuiteResult transforms_suite() {
  SuiteResult s{"transforms", {}};
  const lbp::Family h = lbp::Family::hermite();
  run(s, "christoffel_exact_division_and_agreement", [h] {
    for (const Rational& mu : {Rational(1), Rational(2), Rational(-1, 3), Rational(0)}) {
      const auto ct = transforms::christoffel(h, mu, 20);
      if (lbp::monic_P(ct.family, 20) != ct.polys) return std::pair{false, "mu = " + mu.str()};
    }
    return std::pair{true, std::string("mu in {1, 2, -1/3, 0}, n <= 20")};
  });
  run(s, "geronimus_agreement", [h] {
    for (const Rational& chi : {Rational(1), Rational(2)}) {
      const auto g = transforms::geronimus(h, Rational(1), chi, 20);
      if (lbp::monic_P(g.family, 20) != g.polys) return std::pair{false, "chi = " + chi.str()};
    }
    return std::pair{true, std::string("mu = 1, chi in {1, 2}, n <= 20")};
  });
  run(s, "christoffel_moment_symmetry", [] {
    const auto c = transforms::christoffel_moments(lbp::exact_moments(0, 12), Rational(1));
    for (int n = 1; n <= 10; ++n)
      if (c[-n] != c[n]) return std::pair{false, "n = " + std::to_string(n)};
    return exact(c[0] == Rational(1) && c[1] == Rational(-7, 16), "ctilde_{-n} = ctilde_n, n <= 10");
  });
  run(s, "christoffel_moment_orthogonality", [h] {
    for (const Rational& mu : {Rational(1), Rational(2), Rational(0)}) {
      const auto ct = transforms::christoffel(h, mu, 10);
      const auto c = transforms::christoffel_moments(lbp::exact_moments(0, 13), mu);
      for (int n = 1; n <= 10; ++n)
        for (int i = 0; i < n; ++i)
          if (!lbp::pair_with_moments(ct.polys[n], c, i).is_zero()) return std::pair{false, "mu = " + mu.str()};
    }
    return std::pair{true, std::string("transformed polys orthogonal to transformed moments, mu in {1, 2, 0}")};
  });
  run(s, "partner_equals_christoffel_zero", [h] {
    return exact(lbp::partner_polys(h, 15) == transforms::christoffel(h, Rational(0), 15).polys, "n <= 15");
  });
  run(s, "christoffel_zero_closed_forms", [h] {
    const auto f = transforms::christoffel_zero(h, 30);
    if (f.d(0) != Rational(1, 8)) return std::pair{false, std::string("d_0")};
    for (int n = 1; n <= 30; ++n) {
      const Rational m = Rational(n) + Rational(1, 2);
      if (f.d(n) != Rational(-n, n + 2) || f.b(n) != -(m * m) / Rational(static_cast<long>(n + 1) * (n + 2)))
        return std::pair{false, "n = " + std::to_string(n)};
    }
    const auto part = lbp::extract_family("partner", lbp::partner_polys(h, 31));
    for (int n = 0; n <= 30; ++n)
      if (part.d(n) != f.d(n) || (n >= 1 && part.b(n) != f.b(n))) return std::pair{false, "partner n = " + std::to_string(n)};
    return std::pair{true, std::string("n <= 30, partner family identical")};
  });
  run(s, "geronimus_phi_closed_form", [h] {
    for (const Rational& chi : {Rational(1), Rational(2)}) {
      const auto g = transforms::geronimus(h, Rational(1), chi, 20);
      for (int n = 0; n <= 20; ++n)
        if (g.phi[n] != transforms::phi_hermite(n, chi)) return std::pair{false, "n = " + std::to_string(n)};
    }
    return std::pair{true, std::string("chi in {1, 2}, n <= 20")};
  });
  run(s, "ct_gt_roundtrip", [h] {
    return exact(transforms::ct_gt_roundtrip(h, Rational(1), Rational(1), 10) &&
                     transforms::ct_gt_roundtrip(h, Rational(1), Rational(2), 10),
                 "chi in {1, 2}, N = 10");
  });
  run(s, "geronimus_mass_identity", [h] {
    for (const Rational& chi : {Rational(1), Rational(2), Rational(1, 3)}) {
      const auto g = transforms::geronimus(h, Rational(1), chi, 2);
      if (g.nu + Rational(1) != Rational(1) / (Rational(1) + chi)) return std::pair{false, "chi = " + chi.str()};
      if (g.family.d(0) - Rational(1) != g.nu) return std::pair{false, std::string("nu != dtilde_0 - mu")};
    }
    return std::pair{true, std::string("(nu+1)/(2pi) = 1/(2pi(1+chi))")};
  });
  return s;
}

// ---- szego ------------------------------------------------------------------

SuiteResult szego_suite() {
  SuiteResult s{"szego", {}};
  run(s, "reflection_closed_vs_ratio", [] {
    const auto r = szego::reflection_params(0, 200);
    return exact(r.forms_agree && r.in_open_interval && r.ratio_form[0] == Rational(-7, 16) &&
                     r.ratio_form[1] == Rational(-19, 69),
                 "n <= 200, -1 < a_n < 0");
  });
  run(s, "reflection_matches_polynomials", [] {
    const auto P = szego::szego_polys(20);
    const auto r = szego::reflection_params(0, 19);
    for (int n = 0; n < 20; ++n)
      if (r.ratio_form[n] != -P[n + 1].coeff(0)) return std::pair{false, "n = " + std::to_string(n)};
    for (int j : {1, 2}) {
      const auto rj = szego::reflection_params(j, 12);
      const auto Pj = transforms::christoffel(lbp::Family::associated(j), Rational(1), 13).polys;
      for (int n = 0; n <= 12; ++n)
        if (rj.ratio_form[n] != -Pj[n + 1].coeff(0)) return std::pair{false, "j = " + std::to_string(j)};
    }
    return std::pair{true, std::string("a_n = -Ptilde_{n+1}(0), j in {0,1,2}")};
  });
  run(s, "szego_recurrence", [] {
    const auto P = szego::szego_polys(16);
    const auto a = szego::reflection_params(0, 15).ratio_form;
    for (int n = 0; n <= 15; ++n)
      if (!szego::szego_residual(P[n + 1], P[n], a[n], n).is_zero()) return std::pair{false, "n = " + std::to_string(n)};
    return std::pair{true, std::string("n <= 15")};
  });
  run(s, "symmetric_S_equals_dg_map", [] {
    return exact(szego::symmetric_S(lbp::Family::hermite(), 12).S == szego::dg_map_S(12), "n <= 12");
  });
  run(s, "u_chain", [] {
    const auto u1 = szego::dg_map_u(50);
    const auto u2 = szego::symmetric_S(lbp::Family::hermite(), 50).u;
    for (int n = 1; n <= 50; ++n) {
      const Rational m = Rational(n) + Rational(1, 2);
      const Rational want = m * m / Rational(static_cast<long>(n) * (n + 1));
      if (u1[n] != want || u2[n] != want || szego::associated_legendre_u(Rational(1, 2), n) != want)
        return std::pair{false, "n = " + std::to_string(n)};
    }
    return std::pair{true, std::string("n <= 50")};
  });
  run(s, "symmetric_recurrence", [] {
    const auto seq = szego::symmetric_S(lbp::Family::hermite(), 20);
    for (int n = 1; n < 20; ++n) {
      if (seq.S[n + 1] != seq.S[n].shifted(1) - seq.S[n - 1] * seq.u[n]) return std::pair{false, "n = " + std::to_string(n)};
      for (int i = 0; i <= n; ++i)
        if ((n - i) % 2 == 1 && !seq.S[n].coeff(i).is_zero()) return std::pair{false, "parity at n = " + std::to_string(n)};
    }
    return std::pair{true, std::string("S_{n+1} = x S_n - u_n S_{n-1}, parity, n < 20")};
  });
  run(s, "associated_legendre_shifted", [] {
    const auto f = lbp::Family::associated(2);
    for (int n = 1; n <= 10; ++n)
      if (szego::associated_legendre_u(Rational(5, 2), n) != -f.b(n)) return std::pair{false, "n = " + std::to_string(n)};
    return std::pair{true, std::string("nu = 5/2 against j = 2, n <= 10")};
  });
  run(s, "weight_consistency", [] {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> dist(0.05, 2 * kPi - 0.05);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const double th = dist(rng);
      const double lhs = szego::interval_w(2 * std::cos(th / 2)) * std::sin(th / 2);
      worst = std::max(worst, std::abs(lhs - szego::rho_tilde(th)) / szego::rho_tilde(th));
    }
    return std::pair{worst < 1e-12, "max relative deviation " + sci(worst)};
  });
  run(s, "weight_even_and_peak", [] {
    double worst = 0.0;
    for (double x : {0.5, 1.0, 1.7}) worst = std::max(worst, std::abs(szego::interval_w(x) - szego::interval_w(-x)));
    const double g = std::tgamma(0.25);
    const double peak = std::abs(szego::interval_w(0.0) - 16 * kPi / (g * g * g * g));
    return std::pair{worst < 1e-13 && peak < 1e-12, "evenness " + sci(worst) + ", w(0) error " + sci(peak)};
  });
  run(s, "palindrome_criterion", [] {
    auto b = [](int n) { return Rational(-1) - Rational(1, n + 3); };
    auto f = lbp::Family::custom("custom", b, [](int) { return Rational(-1); });
    szego::symmetric_S(f, 10);
    auto g = lbp::Family::custom("perturbed", b, [](int n) { return n == 4 ? Rational(-9, 10) : Rational(-1); });
    try {
      szego::symmetric_S(g, 10);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NotPalindromic) return std::pair{true, std::string("d = -1 passes, perturbed d_4 rejected")};
    }
    return std::pair{false, std::string("perturbed family accepted")};
  });
  return s;
}

// ---- verify -----------------------------------------------------------------

SuiteResult verify_suite(const SuiteOptions& o) {
  SuiteResult s{"verify", {}};
  run(s, "tfraction_equals_B_over_A", [] {
    const auto ab = lbp::ab_sequence(25, 0);
    for (const Rational& z : {Rational(1, 2), Rational(2), Rational(-1, 3), Rational(7, 5)})
      for (int n = 1; n <= 25; ++n)
        if (tfraction_convergent(n, z) != ab.B[n](z) / ab.A[n](z)) return std::pair{false, "z = " + z.str()};
    return std::pair{true, std::string("z in {1/2, 2, -1/3, 7/5}, n <= 25")};
  });
  run(s, "tfraction_remainder_identity", [] {
    // J/K - B_n/A_n = J_{n+1}/(K A_n) at k^2 = 1/2, n = 30.
    const double k = std::sqrt(0.5);
    const auto t = elliptic::complete_triple(k);
    const int n = 30;
    const double err = t.J / t.K - tfraction_convergent(n, 0.5);
    const double want = elliptic::complete_Jn(n + 1, k) / (t.K * lbp::ab_sequence(n, 0).A[n](0.5));
    const double rel = std::abs(err - want) / want;
    return std::pair{rel < 1e-5, "convergent error " + sci(err) + ", predicted " + sci(want) + ", relative gap " + sci(rel)};
  });
  run(s, "pade_order", [] {
    for (int j : {0, 1, 2})
      for (int n = 0; n <= 10; ++n)
        if (!pade_order_check(j, n).ok) return std::pair{false, "j = " + std::to_string(j) + ", n = " + std::to_string(n)};
    return std::pair{true, std::string("j in {0,1,2}, n <= 10")};
  });
  run(s, "two_point_pade_hermite", [] {
    for (int n = 1; n <= 8; ++n)
      if (!two_point_pade_check(n).ok) return std::pair{false, "n = " + std::to_string(n)};
    return std::pair{true, std::string("both sides, n <= 8")};
  });
  auto gram_check = [&s](const std::string& name, const std::function<GramReport()>& make) {
    run(s, name, [&make] {
      const GramReport r = make();
      double worst = 0.0;
      for (double e : r.diag_ratio_errors) worst = std::max(worst, e);
      return std::pair{r.pass, "offdiag " + sci(r.max_offdiag_rel) + " (tol " + sci(r.tol) + "), diag ratio " + sci(worst) +
                                   ", nodes " + std::to_string(r.nodes)};
    });
  };
  gram_check("szego_gram", [&o] { return circle_gram(CircleWeight::Szego, 6, o.quad_nodes, o.tol); });
  gram_check("hermite_rho_gram", [&o] { return circle_gram(CircleWeight::HermiteRho, 5, o.quad_nodes, std::max(o.tol, 1e-8)); });
  gram_check("geronimus_gram", [&o] { return circle_gram(CircleWeight::Geronimus, 5, o.quad_nodes, o.tol, Rational(1)); });
  gram_check("interval_gram", [&o] { return interval_gram(8, std::max(o.quad_nodes / 2, 64), o.tol); });
  run(s, "moment_weight", [&o] {
    const MomentCheck m = moment_weight_check(6, o.quad_nodes, 1e-9);
    return std::pair{m.pass, "max error " + sci(m.max_abs_error) + ", integral of rho~ " + std::to_string(m.rho_tilde_mass)};
  });
  run(s, "quadrature_convergence", [] {
    const GramReport a = circle_gram(CircleWeight::Szego, 6, 1024, 1.0);
    const double ratio_ok = a.doubled_offdiag_rel <= std::max(a.max_offdiag_rel / 10.0, 1e-10);
    return std::pair{ratio_ok, "1024 nodes " + sci(a.max_offdiag_rel) + ", 2048 nodes " + sci(a.doubled_offdiag_rel)};
  });
  return s;
}

}  // namespace

bool SuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"exactnum", "elliptic", "lbp", "transforms", "szego", "verify"};
  return names;
}

std::vector<SuiteResult> run_suites(const std::string& name, const SuiteOptions& options) {
  std::vector<SuiteResult> out;
  auto want = [&name](const char* s) { return name == "all" || name == s; };
  if (name != "all" && std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
    throw Error(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
  }
  if (want("exactnum")) out.push_back(exactnum_suite());
  if (want("elliptic")) out.push_back(elliptic_suite());
  if (want("lbp")) out.push_back(lbp_suite());
  if (want("transforms")) out.push_back(transforms_suite());
  if (want("szego")) out.push_back(szego_suite());
  if (want("verify")) out.push_back(verify_suite(options));
  return out;
}

}  // namespace helbp::verify
