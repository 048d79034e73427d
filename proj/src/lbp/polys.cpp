#include <string>

#include "helbp/error.hpp"
#include "helbp/lbp.hpp"

namespace helbp::lbp {

namespace {

const Poly kZ = Poly::monomial(Rational(1), 1);
const Poly kOnePlusZ = Poly({Rational(1), Rational(1)});

}  // namespace

ABSequence ab_sequence(int N, int j) {
  if (N < 0 || j < 0) throw Error(ErrorCode::InvalidArgument, "ab_sequence needs N >= 0 and j >= 0");
  ABSequence s;
  s.A.reserve(static_cast<size_t>(N) + 1);
  s.B.reserve(static_cast<size_t>(N) + 1);
  Poly a_prev, b_prev = Poly::constant(Rational(-1));
  Poly a = Poly::constant(Rational(1)), b;
  s.A.push_back(a);
  s.B.push_back(b);
  const Rational half(1, 2);
  for (int n = 0; n < N; ++n) {
    const Rational lead = Rational(n + j) + Rational(3, 2);
    const Rational c1 = Rational(n + j + 1) / lead;
    const Rational c2 = (Rational(n + j) + half) / lead;
    Poly a_next = kOnePlusZ * a * c1 - a_prev.shifted(1) * c2;
    Poly b_next = kOnePlusZ * b * c1 - b_prev.shifted(1) * c2;
    a_prev = std::move(a);
    b_prev = std::move(b);
    a = std::move(a_next);
    b = std::move(b_next);
    s.A.push_back(a);
    s.B.push_back(b);
  }
  return s;
}

std::pair<Poly, Poly> hermite_AB(int n) {
  ABSequence s = ab_sequence(n, 0);
  return {s.A.back(), s.B.back()};
}

Poly wronskian_residual(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "Wronskian needs n >= 1");
  const ABSequence s = ab_sequence(n, 0);
  const auto k = static_cast<size_t>(n);
  return s.B[k] * s.A[k - 1] - s.A[k] * s.B[k - 1] - Poly::monomial(Rational(1, 2 * n + 1), n);
}

std::vector<Poly> monic_P(const Family& family, int N) {
  if (N < 0) throw Error(ErrorCode::InvalidArgument, "monic_P needs N >= 0");
  std::vector<Poly> P;
  P.reserve(static_cast<size_t>(N) + 1);
  P.push_back(Poly::constant(Rational(1)));
  Poly prev;
  for (int n = 0; n < N; ++n) {
    const Poly& cur = P.back();
    Poly inner = cur;
    if (n >= 1) inner += prev * family.b(n);
    Poly next = inner.shifted(1) - cur * family.d(n);
    prev = cur;
    P.push_back(std::move(next));
  }
  return P;
}

std::vector<Poly> associated_P1(const Family& family, int N) { return monic_P(family.shifted(1), N); }

std::vector<Poly> partner_polys(const Family& family, int N) {
  if (N < 0) throw Error(ErrorCode::InvalidArgument, "partner_polys needs N >= 0");
  const std::vector<Poly> P = monic_P(family, N + 1);
  std::vector<Poly> out;
  out.reserve(static_cast<size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    const Poly& next = P[static_cast<size_t>(n) + 1];
    const Rational at0 = next.coeff(0);
    if (at0.is_zero()) {
      throw Error(ErrorCode::ZeroAtOrigin, "P_" + std::to_string(n + 1) + "(0) = 0 in " + family.name());
    }
    // z^n P_{n+1}(1/z) - z^{n-1} P_n(1/z) = (rev_{n+1} P_{n+1} - rev_n P_n) / z
    Poly num = next.reversed(n + 1) - P[static_cast<size_t>(n)].reversed(n);
    out.push_back(num.divided_by_z() * (Rational(1) / at0));
  }
  return out;
}

Family extract_family(std::string name, const std::vector<Poly>& polys) {
  if (polys.size() < 2) throw Error(ErrorCode::NotAnLbp, "need at least P_0 and P_1");
  for (size_t n = 0; n < polys.size(); ++n) {
    if (polys[n].degree() != static_cast<int>(n) || !polys[n].is_monic()) {
      throw Error(ErrorCode::NotAnLbp, name + ": polynomial " + std::to_string(n) + " is not monic of degree n");
    }
  }
  const int M = static_cast<int>(polys.size()) - 1;
  std::vector<Rational> b(static_cast<size_t>(M)), d(static_cast<size_t>(M));
  for (int n = 0; n < M; ++n) {
    const Poly& cur = polys[static_cast<size_t>(n)];
    const Poly& next = polys[static_cast<size_t>(n) + 1];
    if (cur.coeff(0).is_zero()) {
      throw Error(ErrorCode::ZeroAtOrigin, name + ": P_" + std::to_string(n) + "(0) = 0");
    }
    d[n] = -next.coeff(0) / cur.coeff(0);
    Poly rebuilt = cur.shifted(1) - cur * d[n];
    if (n >= 1) {
      const Poly& prev = polys[static_cast<size_t>(n) - 1];
      b[n] = (next.coeff(1) + d[n] * cur.coeff(1) - cur.coeff(0)) / prev.coeff(0);
      rebuilt += prev.shifted(1) * b[n];
    }
    if (rebuilt != next) {
      throw Error(ErrorCode::NotAnLbp, name + ": three-term recurrence fails at n = " + std::to_string(n));
    }
  }
  return Family::table(std::move(name), std::move(b), std::move(d));
}

Rational xi(int n, int j) { return pochhammer(Rational(j + 1), n) / pochhammer(Rational(j) + Rational(3, 2), n); }

Poly beta_poly(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "beta_n needs n >= 0");
  const Rational half(1, 2);
  const Rational pre = pochhammer(half, n) / factorial(n);
  std::vector<Rational> c(static_cast<size_t>(n) + 1);
  Rational term(1);
  for (int m = 0; m <= n; ++m) {
    c[m] = pre * term;
    term *= Rational(m - n) * (half + Rational(m)) / ((half - Rational(n) + Rational(m)) * Rational(m + 1));
  }
  return Poly(std::move(c));
}

Poly explicit_A_series(int n) {
  std::vector<Poly> beta;
  for (int s = 0; s <= n; ++s) beta.push_back(beta_poly(s));
  Poly A;
  for (int s = 0; s <= n; ++s) A += beta[s] * beta[n - s] * Rational(1, 2 * s + 1);
  return A;
}

Poly legendre_Y(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "Y_n needs n >= 0");
  Poly prev, cur = Poly::constant(Rational(1));
  for (int m = 0; m < n; ++m) {
    Poly next = (cur.shifted(1) * Rational(2 * m + 1) - prev * Rational(m)) * Rational(1, m + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace {

// k^s Y_s(q) with q = (k + 1/k)/2, written in z = k^2:
// sum_i y_i z^{(s-i)/2} ((z+1)/2)^i, where only i = s mod 2 contribute.
Poly legendre_in_z(int s) {
  const Poly Y = legendre_Y(s);
  const Poly half_one_plus_z = kOnePlusZ * Rational(1, 2);
  Poly out;
  Poly power = Poly::constant(Rational(1));
  for (int i = 0; i <= s; ++i) {
    const Rational y = Y.coeff(i);
    if (!y.is_zero()) {
      if ((s - i) % 2 != 0) throw Error(ErrorCode::DomainError, "Legendre polynomial parity violated");
      out += (power * y).shifted((s - i) / 2);
    }
    power = power * half_one_plus_z;
  }
  return out;
}

}  // namespace

Poly explicit_A_legendre(int n, int j) {
  if (n < 0 || j < 0) throw Error(ErrorCode::InvalidArgument, "explicit_A_legendre needs n, j >= 0");
  std::vector<Poly> L;
  for (int s = 0; s <= n; ++s) L.push_back(legendre_in_z(s));
  Poly A;
  for (int s = 0; s <= n; ++s) A += L[s] * L[n - s] * Rational(2 * j + 1, 2 * s + 2 * j + 1);
  return A;
}

Rational harmonic(int n) {
  Rational h(0);
  for (int k = 1; k <= n; ++k) h += Rational(1, k);
  return h;
}

Rational G_value(int n, int j) {
  if (n < 0 || j < 0) throw Error(ErrorCode::InvalidArgument, "G_n(j) needs n, j >= 0");
  Rational g(0);
  for (int s = 0; s <= n; ++s) g += Rational(1, 2 * s + 2 * j + 1);
  return g * Rational(2 * j + 1);
}

}  // namespace helbp::lbp
