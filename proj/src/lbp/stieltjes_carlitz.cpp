#include "helbp/error.hpp"
#include "helbp/lbp.hpp"

namespace helbp::lbp {

namespace {

Rational sq(const Rational& x) { return x * x; }

// Closed forms as printed for the reciprocal and partner families.
Rational printed_d_star(const Rational& p2, int n) {
  return Rational(-1) / (Rational(1) + p2 / Rational(4L * (n + 1) * (n + 1)));
}

Rational printed_b_star(const Rational& p2, int n) {
  const Rational q = p2 / Rational(4);
  const Rational h = Rational(n) + Rational(1, 2);
  return -(Rational(n + 1) * Rational(static_cast<long>(n + 2) * (n + 2)) * sq(h)) /
         ((Rational(static_cast<long>(n + 2) * (n + 2)) + q) * (Rational(static_cast<long>(n + 1) * (n + 1)) + q));
}

Rational printed_d_hat(const Rational& p2, int n) {
  const Rational q = p2 / Rational(4);
  const Rational t = p2 * Rational(n + 1) - Rational(n + 2);
  const Rational den = (Rational(n) * (p2 - Rational(1)) - Rational(1)) * (Rational(static_cast<long>(n + 2) * (n + 2)) + q);
  return -(Rational(static_cast<long>(n) * (n + 1)) * t) / den;
}

Rational printed_b_hat(const Rational& p2, int n) {
  const Rational q = p2 / Rational(4);
  const Rational t = p2 * Rational(n + 1) - Rational(n + 2);
  const Rational h = Rational(n) + Rational(1, 2);
  const Rational den = (Rational(n) * (p2 - Rational(1)) - Rational(1)) *
                       (Rational(static_cast<long>(n + 1) * (n + 1)) + q) *
                       (Rational(static_cast<long>(n + 2) * (n + 2)) + q);
  return -(sq(h) * Rational(static_cast<long>(n + 1) * (n + 1)) * t) / den;
}

}  // namespace

ScReport sc_coefficient_tables(const Rational& p2, int N) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "sc_coefficient_tables needs N >= 1");
  const Family f = Family::stieltjes_carlitz(p2);
  const std::vector<Poly> P = monic_P(f, N + 2);

  std::vector<Poly> star;
  for (int n = 0; n <= N + 1; ++n) {
    const Poly& p = P[static_cast<size_t>(n)];
    if (p.coeff(0).is_zero()) throw Error(ErrorCode::DegenerateFamily, "P_" + std::to_string(n) + "(0) = 0");
    star.push_back(p.reversed(n) * (Rational(1) / p.coeff(0)));
  }
  const Family rec = extract_family("reciprocal", star);
  const Family part = extract_family("partner", partner_polys(f, N + 1));

  ScReport report;
  report.p2 = p2;
  report.N = N;
  for (int n = 0; n <= N; ++n) {
    ScRow r;
    r.n = n;
    r.d = f.d(n);
    r.d_star = rec.d(n);
    r.d_star_printed = printed_d_star(p2, n);
    r.d_star_agrees = r.d_star == r.d_star_printed;
    r.d_hat = part.d(n);
    r.d_hat_printed = printed_d_hat(p2, n);
    r.d_hat_agrees = r.d_hat == r.d_hat_printed;
    if (n >= 1) {
      r.b = f.b(n);
      r.b_star = rec.b(n);
      r.b_star_index_shifted = f.b(n) / (f.d(n) * f.d(n + 1));
      r.b_star_printed = printed_b_star(p2, n);
      r.b_star_agrees = r.b_star == r.b_star_printed;
      r.b_hat = part.b(n);
      r.b_hat_printed = printed_b_hat(p2, n);
      r.b_hat_agrees = r.b_hat == *r.b_hat_printed;
    } else {
      r.b_star_agrees = true;
      r.b_hat_agrees = true;
    }
    report.rows.push_back(std::move(r));
  }
  return report;
}

}  // namespace helbp::lbp
