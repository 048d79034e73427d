#pragma once

#include <string>
#include <vector>

#include "helbp/lbp.hpp"
#include "helbp/poly.hpp"
#include "helbp/rational.hpp"

namespace helbp::transforms {

/// Christoffel transform at mu:
///   Ptilde_n = (P_{n+1} - U_n P_n) / (z - mu),  U_n = P_{n+1}(mu) / P_n(mu).
struct ChristoffelResult {
  Rational mu;
  std::vector<Rational> U;    // U_0..U_{N+1}
  lbp::Family family;         // b_1..b_N, d_0..d_N from the coefficient formulas
  std::vector<Poly> polys;    // Ptilde_0..Ptilde_N from exact division
};

/// Throws Error(ZeroAtTransformPoint) when some P_n(mu) vanishes. At mu = 0
/// the coefficient formulas degenerate and the mu = 0 formulas are used.
ChristoffelResult christoffel(const lbp::Family& family, const Rational& mu, int N);

/// Coefficients of the mu = 0 transform, b_1..b_N and d_0..d_N:
///   btilde_n = b_n (b_{n+1} - d_n) / (b_n - d_{n-1}),  dtilde_0 = d_0 - b_1,
///   dtilde_n = d_{n-1} (b_{n+1} - d_n) / (b_n - d_{n-1}).
lbp::Family christoffel_zero(const lbp::Family& family, int N);

/// Moments of the transformed functional, c_n -> (c_{n+1} - mu c_n)/(c_1 - mu),
/// for n = lo..hi-1. Throws Error(MomentMapSingular) when c_1 = mu.
lbp::MomentTable christoffel_moments(const lbp::MomentTable& c, const Rational& mu);

/// Geronimus transform at (mu, chi):
///   phi_n = P_n(mu) + chi P^{(1)}_{n-1}(mu),  V_0 = 1,  V_n = mu / (mu - phi_n/phi_{n-1}),
///   Ptilde_n = V_n P_n + z (1 - V_n) P_{n-1}.
struct GeronimusResult {
  Rational mu;
  Rational chi;
  std::vector<Rational> phi;  // phi_0..phi_{N+1}
  std::vector<Rational> V;    // V_0..V_{N+1}
  Rational nu;                // mu chi / (d_0 - chi)
  lbp::Family family;         // b_1..b_N, d_0..d_N from the coefficient formulas
  std::vector<Poly> polys;    // Ptilde_0..Ptilde_N from the polynomial formula

  /// The mass term as printed, "(nu+1)/(2pi)" with nu substituted.
  std::string mass_text() const;
};

/// Throws Error(DegenerateTransformedFamily) for chi = 0 or when some V_n is 0
/// or 1, Error(ChiEqualsD0) for chi = d_0 and Error(DegeneratePhiRatio) when
/// mu - phi_n/phi_{n-1} vanishes (or phi_{n-1} = 0).
GeronimusResult geronimus(const lbp::Family& family, const Rational& mu, const Rational& chi, int N);

/// (3/2)_n / n! (G_n + 2 chi (G_n - 1)): phi_n of the Hermite family at mu = 1.
Rational phi_hermite(int n, const Rational& chi);

/// Applies geronimus then christoffel at the same mu and compares the
/// recovered coefficients with the original ones for n <= N.
bool ct_gt_roundtrip(const lbp::Family& family, const Rational& mu, const Rational& chi, int N);

}  // namespace helbp::transforms
