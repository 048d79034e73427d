#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "helbp/lbp.hpp"
#include "helbp/poly.hpp"
#include "helbp/rational.hpp"

namespace helbp::verify {

// ---- continued fraction and Pade ------------------------------------------

/// n-th convergent of z/(2(1+z) - 9z/(4(1+z) - 25z/(6(1+z) - ...))) evaluated
/// bottom-up. Throws Error(ZeroDenominator) if a partial denominator vanishes.
Rational tfraction_convergent(int n, const Rational& z);
double tfraction_convergent(int n, double z);

struct PadeResult {
  int j = 0;
  int n = 0;
  int first_nonzero = 0;           // index of the first nonzero residual coefficient
  std::vector<Rational> residual;  // F(z; j) A_n - B_n through z^{n+3}
  bool ok = false;                 // first_nonzero >= n + 1
};

/// Forms F(z; j) A_n^{(j)} - B_n^{(j)} with F = J_{j+1}/J_j and checks that
/// its first n+1 coefficients vanish.
PadeResult pade_order_check(int j, int n);

struct TwoPointPadeResult {
  int n = 0;
  int zero_side_order = 0;      // valuation of P_n (-F_-/c_1) - P^{(1)}_{n-1} at z = 0
  int infinity_side_order = 0;  // valuation in w = 1/z of w rev P^{(1)}_{n-1} - rev P_n F_+(1/w)/c_1
  bool ok = false;              // orders >= n and >= n + 1 respectively
};

/// Both sides of the two-point Pade property of the Hermite LBP, n >= 1.
TwoPointPadeResult two_point_pade_check(int n);

// ---- quadrature -------------------------------------------------------------

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

struct QuadratureGrid {
  enum class Kind { Circle, Interval } kind;
  std::vector<double> nodes;    // theta in (0, 2 pi) or x in (-2, 2)
  std::vector<double> weights;
  // Interval grids only: 1/2 + x/4 and 1/2 - x/4 computed without cancellation.
  std::vector<double> s_plus;
  std::vector<double> s_minus;
};

/// Midpoint rule in t on (0, 2 pi) mapped by theta = t - sin t. theta = 0 is
/// never sampled and the map flattens the weight's endpoint behaviour.
QuadratureGrid circle_grid(int n);

/// Gauss-Legendre in t on (-1, 1) mapped by x = 2 Phi(t),
/// Phi(t) = (15 t - 10 t^3 + 3 t^5)/8. Symmetric about 0.
QuadratureGrid interval_grid(int n);

enum class CircleWeight { Szego, HermiteRho, Geronimus };

struct GramReport {
  std::string kind;
  int n_max = 0;
  int nodes = 0;
  double max_offdiag_rel = 0.0;
  std::vector<double> diag_ratio_errors;  // n = 1..n_max
  double tol = 0.0;
  bool pass = false;
  /// Off-diagonal measure with twice the nodes; used for the coarse-grid test.
  double doubled_offdiag_rel = 0.0;
  /// Geronimus only: off-diagonal measure with the mass as printed.
  double printed_mass_offdiag_rel = 0.0;
  /// Geronimus only: the regular-part integral of 1 and the mass used.
  double regular_part_of_one = 0.0;
  double mass_relative_to_regular = 0.0;
  std::vector<std::vector<double>> matrix;  // |G_nm|, real part for real cases
};

/// Gram matrix of a family against its partner on the unit circle.
///  Szego: Ptilde_n (Christoffel at mu = 1) with itself under rho~.
///  HermiteRho: Hermite P_n against partner Phat_m under rho.
///  Geronimus: Geronimus(mu = 1, chi) polys against their partners under the
///             functional nu Reg(g) + (1 - nu Reg(1)) g(1).
/// Throws Error(GridTooCoarse) when doubling the nodes makes the off-diagonal
/// measure worse (beyond a 1e-12 floor).
GramReport circle_gram(CircleWeight weight, int n_max, int nodes, double tol, const Rational& chi = Rational(1));

/// Gram matrix of S_n (Hermite, symmetric form) under w(x) on [-2, 2].
GramReport interval_gram(int n_max, int nodes, double tol);

struct MomentCheck {
  int n_range = 0;
  int nodes = 0;
  std::vector<int> n;
  std::vector<double> exact;
  std::vector<std::complex<double>> numeric;
  double max_abs_error = 0.0;
  double rho_tilde_mass = 0.0;  // integral of rho~ over the circle
  double tol = 0.0;
  bool pass = false;
};

/// Integral of e^{i n theta} rho(theta) against the exact moments c_n, |n| <= n_range.
MomentCheck moment_weight_check(int n_range, int nodes, double tol);

/// Integral over (0, 2 pi) of 1/(4 |K(e^{i theta/2})|^2 sin(theta/2)).
double geronimus_kernel_integral();

// ---- suites -----------------------------------------------------------------

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass() const;
};

struct SuiteOptions {
  int quad_nodes = 1024;
  double tol = 1e-8;
};

/// Names accepted by run_suites besides "all".
const std::vector<std::string>& suite_names();

/// Runs one named suite or "all". Throws Error(InvalidArgument) for unknown names.
std::vector<SuiteResult> run_suites(const std::string& name, const SuiteOptions& options);

}  // namespace helbp::verify
