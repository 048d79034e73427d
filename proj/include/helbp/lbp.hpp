#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "helbp/poly.hpp"
#include "helbp/rational.hpp"
#include "helbp/series.hpp"

namespace helbp::lbp {

enum class FamilyKind { Hermite, Associated, StieltjesCarlitz, Custom };

/// Recurrence coefficients of a Laurent biorthogonal family,
///   P_{n+1} + d_n P_n = z (P_n + b_n P_{n-1}),  P_0 = 1, P_{-1} = 0,
/// with b_n defined for n >= 1 and d_n for n >= 0.
///
/// Families are immutable and cheap to copy. Accessors throw
/// Error(DegenerateFamily) when the requested coefficient vanishes and
/// Error(CoefficientOutOfRange) past the end of a finite table.
class Family {
 public:
  using Coefficient = std::function<Rational(int)>;

  static Family hermite();
  static Family associated(int j);
  static Family stieltjes_carlitz(const Rational& p2);
  static Family custom(std::string name, Coefficient b, Coefficient d);
  /// b[n] for n = 1..b.size()-1 (b[0] is ignored) and d[n] for n = 0..d.size()-1.
  static Family table(std::string name, std::vector<Rational> b, std::vector<Rational> d);

  Rational b(int n) const;
  Rational d(int n) const;

  FamilyKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  /// Shift parameter of an associated family (0 for Hermite).
  int j() const { return j_; }
  const Rational& p2() const { return p2_; }
  /// True when d_n = -1 is known to hold for every n.
  bool palindromic_by_construction() const { return kind_ == FamilyKind::Hermite || kind_ == FamilyKind::Associated; }

  /// The family with coefficients b_{n+k}, d_{n+k}.
  Family shifted(int k) const;

 private:
  Family(FamilyKind kind, std::string name, Coefficient b, Coefficient d)
      : kind_(kind), name_(std::move(name)), b_(std::move(b)), d_(std::move(d)) {}

  FamilyKind kind_;
  std::string name_;
  Coefficient b_;
  Coefficient d_;
  int j_ = 0;
  Rational p2_;
};

/// A_n and B_n of the associated family j for n = 0..N (j = 0 is the Hermite
/// pair). A_{-1} = 0, B_{-1} = -1, A_0 = 1, B_0 = 0 and
///   (n + 3/2 + j) A_{n+1} = (n + j + 1)(z + 1) A_n - z (n + j + 1/2) A_{n-1}.
struct ABSequence {
  std::vector<Poly> A;
  std::vector<Poly> B;
};
ABSequence ab_sequence(int N, int j = 0);

std::pair<Poly, Poly> hermite_AB(int n);

/// B_n A_{n-1} - A_n B_{n-1} - z^n/(2n+1); the zero polynomial for every n >= 1.
Poly wronskian_residual(int n);

/// P_0..P_N from the recurrence.
std::vector<Poly> monic_P(const Family& family, int N);

/// P^{(1)}_0..P^{(1)}_N, the polynomials of the shifted family b_{n+1}, d_{n+1}.
std::vector<Poly> associated_P1(const Family& family, int N);

/// Family of P*_n(z) = z^n P_n(1/z) / P_n(0): b*_n = b_n/(d_{n-1} d_n), d*_n = 1/d_n.
Family reciprocal_family(const Family& family);

/// Partner polynomials Phat_0..Phat_N,
///   Phat_n = (z^n P_{n+1}(1/z) - z^{n-1} P_n(1/z)) / P_{n+1}(0).
/// Throws Error(ZeroAtOrigin) when some P_{n+1}(0) = 0.
std::vector<Poly> partner_polys(const Family& family, int N);

/// Recovers d_0..d_{M-1} and b_1..b_{M-1} from monic polys P_0..P_M and checks
/// the full recurrence. Throws Error(NotAnLbp) if the polynomials are not monic
/// of the right degree or do not satisfy a three-term LBP recurrence, and
/// Error(ZeroAtOrigin) if some P_n(0) vanishes.
Family extract_family(std::string name, const std::vector<Poly>& polys);

/// Two-sided exact moment table c_lo..c_hi.
class MomentTable {
 public:
  MomentTable(int lo, std::vector<Rational> values);
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  /// Throws Error(CoefficientOutOfRange) outside [lo, hi].
  const Rational& at(int s) const;
  const Rational& operator[](int s) const { return at(s); }

 private:
  int lo_;
  std::vector<Rational> c_;
};

/// Moments of Hermite (j = 0) or Associated(j): c_0 = 1, c_{-m} = [z^m] H for
/// 0 <= m <= N-1 with H = 2F1(1/2, 3/2+j; 2+j; z) / 2F1(1/2, 1/2+j; 1+j; z),
/// and c_{m+1} = -c_{-m}. Covers s = -(N-1)..N.
MomentTable exact_moments(int j, int N);
MomentTable exact_moments(const Family& family, int N);

/// Series of J_{j+1}/J_j in z = k^2 through the given order.
TruncatedSeries elliptic_ratio_series(int j, int order);

/// sum_m [P]_m c_{m-i}: the pairing of P with z^{-i}.
Rational pair_with_moments(const Poly& p, const MomentTable& c, int i);

/// h_n = prod_{k=1}^n b_k/d_k.
Rational normalization_h(const Family& family, int n);

/// xi_n = (j+1)_n / (j+3/2)_n; A_n = xi_n P_n.
Rational xi(int n, int j = 0);

/// beta_n(z) = (1/2)_n/n! 2F1(-n, 1/2; 1/2 - n; z).
Poly beta_poly(int n);
/// A_n = sum_s beta_s beta_{n-s} / (2s+1).
Poly explicit_A_series(int n);

/// Legendre polynomial Y_n(t).
Poly legendre_Y(int n);
/// (2j+1) k^n sum_s Y_s(q) Y_{n-s}(q) / (2s+2j+1), q = (k + 1/k)/2, as a
/// polynomial in z = k^2.
Poly explicit_A_legendre(int n, int j = 0);

/// H_n = 1 + 1/2 + ... + 1/n.
Rational harmonic(int n);
/// G_n(j) = (2j+1) sum_{s=0}^n 1/(2s+2j+1).
Rational G_value(int n, int j = 0);

/// One row of the Stieltjes-Carlitz comparison report. Printed values that
/// are not defined at a given n are left empty.
struct ScRow {
  int n = 0;
  Rational b, d;                          // b is empty (0) at n = 0
  Rational b_star, d_star;                // from the constructed reciprocal polynomials
  Rational b_star_index_shifted;          // b_n/(d_n d_{n+1})
  Rational b_star_printed, d_star_printed;
  Rational b_hat, d_hat;                  // from the constructed partner polynomials
  std::optional<Rational> b_hat_printed;  // undefined at n = 0
  Rational d_hat_printed;
  bool b_star_agrees = false;
  bool d_star_agrees = false;
  bool b_hat_agrees = false;
  bool d_hat_agrees = false;
};

struct ScReport {
  Rational p2;
  int N = 0;
  std::vector<ScRow> rows;  // n = 0..N
};

/// Coefficients of the Stieltjes-Carlitz family, its reciprocal and partner
/// families (each extracted from constructed polynomials), and the printed
/// closed forms alongside with per-entry agreement flags.
ScReport sc_coefficient_tables(const Rational& p2, int N);

}  // namespace helbp::lbp
