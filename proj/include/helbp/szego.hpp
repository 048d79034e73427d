#pragma once

#include <complex>
#include <vector>

#include "helbp/lbp.hpp"
#include "helbp/poly.hpp"
#include "helbp/rational.hpp"

namespace helbp::szego {

/// U_n = ((n + 3/2 + j)/(n + j + 1)) G_{n+1}(j) / G_n(j) = P_{n+1}(1)/P_n(1).
Rational U_ratio(int n, int j = 0);

/// Reflection parameters a_0..a_N. `ratio_form` is 1 - U_{n+1} for any j;
/// `closed_form` is -1/(2(n+2)) - 1/(2(n+2) G_{n+1}) and is filled for j = 0 only.
struct ReflectionSequence {
  int j = 0;
  std::vector<Rational> ratio_form;
  std::vector<Rational> closed_form;
  bool forms_agree = true;
  bool in_open_interval = true;  // -1 < a_n < 0 for every n
};
ReflectionSequence reflection_params(int j, int N);

/// Ptilde_0..Ptilde_N: the Christoffel transform of the Hermite family at mu = 1.
std::vector<Poly> szego_polys(int N);

/// Ptilde_{n+1}(z) - z Ptilde_n(z) + a_n z^n Ptilde_n(1/z).
Poly szego_residual(const Poly& next, const Poly& cur, const Rational& a, int n);

/// Rewrites z^{-n/2} P(z) for a palindromic P of degree n as a polynomial in
/// x = z^{1/2} + z^{-1/2}. Throws Error(NotPalindromic).
Poly palindromic_to_x(const Poly& p);

struct SymmetricOPSequence {
  std::vector<Poly> S;     // S_0..S_N in x
  std::vector<Rational> u; // u_1..u_N, u[0] unused
};

/// S_n = z^{-n/2} P_n(z) with u_n = -b_n. Throws Error(NotPalindromic) when some
/// P_n is not palindromic.
SymmetricOPSequence symmetric_S(const lbp::Family& family, int N);

/// S_n = z^{-n/2}(Ptilde_n + Ptilde*_n)/(1 - a_{n-1}) from the unit-circle side, n = 0..N.
std::vector<Poly> dg_map_S(int N);

/// u_n = (1 + a_{n-1})(1 - a_{n-2}) with a_{-1} = -1, for n = 1..N (u[0] unused).
std::vector<Rational> dg_map_u(int N);

/// (n + nu)^2 / ((n + nu)^2 - 1/4). Throws Error(SingularDenominator).
Rational associated_legendre_u(const Rational& nu, int n);

enum class WeightKind { CircleRho, CircleRhoTilde, IntervalW, IntervalLegendreW };

/// rho(theta) = i e^{-i theta/2} / (2 |K(e^{i theta/2})|^2), 0 < theta < 2 pi.
std::complex<double> rho(double theta);
/// rho~(theta) = sin(theta/2) / (2 |K(e^{i theta/2})|^2), 0 < theta < 2 pi.
double rho_tilde(double theta);
/// w(x) = 2 / (K^2(sqrt(1/2 + x/4)) + K^2(sqrt(1/2 - x/4))), -2 < x < 2.
double interval_w(double x);
/// w in the circle variable: 2 / (K^2(cos(theta/4)) + K^2(sin(theta/4))).
double interval_w_theta(double theta);
/// w(x) given s_plus = 1/2 + x/4 and s_minus = 1/2 - x/4 separately, so that
/// points close to the endpoints keep full accuracy.
double interval_w_split(double s_plus, double s_minus);

/// Weight of the given kind at theta (circle kinds) or x (interval_w). Only
/// CircleRho has a nonzero imaginary part. Throws Error(DomainError) on or
/// outside the domain boundary.
std::complex<double> weight(WeightKind kind, double point);

}  // namespace helbp::szego
