#include "helbp/elliptic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "helbp/error.hpp"

namespace helbp::elliptic {

namespace {

constexpr double kPi = std::numbers::pi;

void check_modulus(double k) {
  if (!(k > 0.0 && k < 1.0)) {
    throw Error(ErrorCode::ModulusOutOfRange, "modulus must lie in (0, 1), got " + std::to_string(k));
  }
}

// AGM(1, kp) together with S = sum_{n>=0} 2^{n-1} c_n^2, c_0 = k.
struct Agm {
  double mean;
  double sum;
};

Agm agm(double k, double kp) {
  double a = 1.0;
  double b = kp;
  double c = k;
  double weight = 0.5;
  double sum = weight * c * c;
  for (int i = 0; i < 64; ++i) {
    const double an = 0.5 * (a + b);
    const double bn = std::sqrt(a * b);
    c = c * c / (4.0 * an);
    weight *= 2.0;
    sum += weight * c * c;
    a = an;
    b = bn;
    if (std::abs(a - b) <= 1e-16 * a) break;
  }
  return {0.5 * (a + b), sum};
}

EllipticTriple triple_with_complement(double k, double kp) {
  const Agm r = agm(k, kp);
  const double K = kPi / (2.0 * r.mean);
  const double J = K * r.sum;
  return {K, K - J, J};
}

}  // namespace

EllipticTriple complete_triple(double k) {
  check_modulus(k);
  return triple_with_complement(k, std::sqrt((1.0 - k) * (1.0 + k)));
}

double K_from_complement(double kp) {
  if (!(kp > 0.0 && kp <= 1.0)) {
    throw Error(ErrorCode::ModulusOutOfRange, "complementary modulus must lie in (0, 1], got " + std::to_string(kp));
  }
  return kPi / (2.0 * agm(std::sqrt((1.0 - kp) * (1.0 + kp)), kp).mean);
}

double complete_Jn(int n, double k) {
  check_modulus(k);
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "J_n needs n >= 0");
  const double m = k * k;
  // prefactor k^{2n} pi (1/2)_n / (2 n!)
  double pre = kPi / 2.0;
  for (int i = 0; i < n; ++i) pre *= m * (0.5 + i) / (1.0 + i);
  double term = 1.0;
  double sum = 1.0;
  for (int i = 0; i < 1000000; ++i) {
    term *= (0.5 + i) * (0.5 + n + i) / ((1.0 + n + i) * (1.0 + i)) * m;
    sum += term;
    if (term <= 1e-17 * sum) break;
  }
  return pre * sum;
}

double incomplete_Jn(int n, double x, double k) {
  check_modulus(k);
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "J_n needs n >= 0");
  if (!(x >= 0.0 && x <= 1.0)) {
    throw Error(ErrorCode::ArgumentOutOfRange, "x must lie in [0, 1], got " + std::to_string(x));
  }
  if (x == 0.0) return 0.0;
  const double m = k * k;
  auto f = [n, m](double phi) {
    const double s2 = std::sin(phi) * std::sin(phi);
    return std::pow(m * s2, n) / std::sqrt(1.0 - m * s2);
  };
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 15>::integrate(f, 0.0, std::asin(x), 20, 1e-13);
}

std::complex<double> K_unit_modulus(double theta) {
  if (!(theta > 0.0 && theta < 2.0 * kPi)) {
    throw Error(ErrorCode::AngleOutOfRange, "theta must lie in (0, 2 pi), got " + std::to_string(theta));
  }
  const double q = theta / 4.0;
  const double c = std::cos(q);
  const double s = std::sin(q);
  if (std::max(c, s) >= 1.0 - 1e-12) {
    throw Error(ErrorCode::DivergentModulus, "K diverges at modulus 1 (theta = " + std::to_string(theta) + ")");
  }
  // K(cos q) has complement sin q, K(sin q) has complement cos q.
  const double kc = K_from_complement(s);
  const double ks = K_from_complement(c);
  return 0.5 * std::polar(1.0, -q) * std::complex<double>(kc, ks);
}

double K_unit_modulus_abs2(double theta) {
  const double q = theta / 4.0;
  const double kc = K_from_complement(std::sin(q));
  const double ks = K_from_complement(std::cos(q));
  return 0.25 * (kc * kc + ks * ks);
}

double legendre_relation_residual(double k) {
  check_modulus(k);
  const double kp = std::sqrt((1.0 - k) * (1.0 + k));
  const EllipticTriple t = triple_with_complement(k, kp);
  const EllipticTriple c = triple_with_complement(kp, k);
  return std::abs((-t.K * c.K + t.E * c.K + t.K * c.E) - kPi / 2.0);
}

}  // namespace helbp::elliptic
