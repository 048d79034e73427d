#include <string>

#include "helbp/error.hpp"
#include "helbp/transforms.hpp"

namespace helbp::transforms {

std::string GeronimusResult::mass_text() const { return "(" + nu.str() + "+1)/(2pi)"; }

GeronimusResult geronimus(const lbp::Family& f, const Rational& mu, const Rational& chi, int N) {
  if (N < 0) throw Error(ErrorCode::InvalidArgument, "geronimus needs N >= 0");
  if (chi.is_zero()) throw Error(ErrorCode::DegenerateTransformedFamily, "chi = 0 gives btilde_1 = 0");
  if (chi == f.d(0)) throw Error(ErrorCode::ChiEqualsD0, "chi = d_0 = " + chi.str());

  const std::vector<Poly> P = lbp::monic_P(f, N + 1);
  const std::vector<Poly> P1 = lbp::associated_P1(f, N);

  std::vector<Rational> phi{Rational(1)};
  std::vector<Rational> V{Rational(1)};
  for (int n = 1; n <= N + 1; ++n) {
    phi.push_back(P[n](mu) + chi * P1[n - 1](mu));
    if (phi[n - 1].is_zero()) {
      throw Error(ErrorCode::DegeneratePhiRatio, "phi_" + std::to_string(n - 1) + " = 0");
    }
    const Rational den = mu - phi[n] / phi[n - 1];
    if (den.is_zero()) {
      throw Error(ErrorCode::DegeneratePhiRatio, "mu - phi_n/phi_{n-1} = 0 at n = " + std::to_string(n));
    }
    V.push_back(mu / den);
    if (V[n].is_zero() || V[n] == Rational(1)) {
      throw Error(ErrorCode::DegenerateTransformedFamily, "V_" + std::to_string(n) + " = " + V[n].str());
    }
  }

  std::vector<Rational> b(static_cast<size_t>(N) + 1), d(static_cast<size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    d[n] = f.d(n) * V[n + 1] / V[n];
    if (n == 1) b[1] = chi * (V[1] - Rational(1));
    if (n >= 2) b[n] = f.b(n - 1) * (Rational(1) - V[n]) / (Rational(1) - V[n - 1]);
  }

  std::vector<Poly> polys{P[0]};
  for (int n = 1; n <= N; ++n) polys.push_back(P[n] * V[n] + P[n - 1].shifted(1) * (Rational(1) - V[n]));

  GeronimusResult r{mu,
                    chi,
                    std::move(phi),
                    std::move(V),
                    mu * chi / (f.d(0) - chi),
                    lbp::Family::table("geronimus(" + f.name() + ", " + mu.str() + ", " + chi.str() + ")", std::move(b),
                                       std::move(d)),
                    std::move(polys)};
  return r;
}

Rational phi_hermite(int n, const Rational& chi) {
  const Rational G = lbp::G_value(n, 0);
  return pochhammer(Rational(3, 2), n) / factorial(n) * (G + Rational(2) * chi * (G - Rational(1)));
}

bool ct_gt_roundtrip(const lbp::Family& f, const Rational& mu, const Rational& chi, int N) {
  const GeronimusResult g = geronimus(f, mu, chi, N + 2);
  const ChristoffelResult c = christoffel(g.family, mu, N);
  for (int n = 0; n <= N; ++n) {
    if (c.family.d(n) != f.d(n)) return false;
    if (n >= 1 && c.family.b(n) != f.b(n)) return false;
  }
  return true;
}

}  // namespace helbp::transforms
