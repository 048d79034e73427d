#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "helbp/elliptic.hpp"
#include "support.hpp"

using helbp::ErrorCode;
namespace el = helbp::elliptic;

namespace {

constexpr double kPi = std::numbers::pi;

// Raw integrals over t in (0, 1), independent of the AGM.
double K_oracle(double k) {
  boost::math::quadrature::tanh_sinh<double> q;
  return q.integrate([k](double t, double tc) {
    const double one_minus_t2 = t > 0.5 ? tc * (2.0 - tc) : (1.0 - t) * (1.0 + t);
    return 1.0 / std::sqrt(one_minus_t2 * (1.0 - k * k * t * t));
  }, 0.0, 1.0);
}

double Jn_oracle(int n, double k) {
  boost::math::quadrature::tanh_sinh<double> q;
  return q.integrate([n, k](double t, double tc) {
    const double one_minus_t2 = t > 0.5 ? tc * (2.0 - tc) : (1.0 - t) * (1.0 + t);
    return std::pow(k * k * t * t, n) / std::sqrt(one_minus_t2 * (1.0 - k * k * t * t));
  }, 0.0, 1.0);
}

}  // namespace

TEST_CASE("complete integrals against direct quadrature") {
  for (double k : {0.05, 0.3, 0.6, std::sqrt(0.5), 0.9, 0.99}) {
    const auto t = el::complete_triple(k);
    CHECK(t.K == doctest::Approx(K_oracle(k)).epsilon(1e-13));
    CHECK(t.J == doctest::Approx(Jn_oracle(1, k)).epsilon(1e-12));
    CHECK(t.E == doctest::Approx(t.K - t.J).epsilon(1e-15));
  }
}

TEST_CASE("complete integral checkpoints") {
  CHECK(el::complete_triple(1e-8).K == doctest::Approx(kPi / 2).epsilon(1e-12));
  const double g = std::tgamma(0.25);
  CHECK(el::complete_triple(std::sqrt(0.5)).K == doctest::Approx(g * g / (4 * std::sqrt(kPi))).epsilon(1e-14));
  CHECK(el::K_from_complement(std::sqrt(0.5)) == doctest::Approx(el::complete_triple(std::sqrt(0.5)).K).epsilon(1e-15));
  CHECK(el::K_from_complement(1.0) == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK_ERROR_CODE(el::complete_triple(1.0), ErrorCode::ModulusOutOfRange);
  CHECK_ERROR_CODE(el::complete_triple(0.0), ErrorCode::ModulusOutOfRange);
  CHECK_ERROR_CODE(el::complete_triple(-0.5), ErrorCode::ModulusOutOfRange);
}

TEST_CASE("complete J_n") {
  const auto t = el::complete_triple(0.6);
  CHECK(el::complete_Jn(0, 0.6) == doctest::Approx(t.K).epsilon(1e-12));
  CHECK(el::complete_Jn(1, 0.6) == doctest::Approx(t.J).epsilon(1e-12));
  for (int n : {2, 3, 5, 8}) {
    for (double k : {0.3, 0.5, 0.9}) CHECK(el::complete_Jn(n, k) == doctest::Approx(Jn_oracle(n, k)).epsilon(1e-12));
  }
  CHECK(el::complete_Jn(3, 0.5) == doctest::Approx(el::incomplete_Jn(3, 1.0, 0.5)).epsilon(1e-10));
  CHECK_ERROR_CODE(el::complete_Jn(-1, 0.5), ErrorCode::InvalidArgument);
}

TEST_CASE("J_n contiguous relation") {
  for (double k : {0.2, 0.55, 0.95}) {
    const double m = k * k;
    for (int n = 2; n <= 12; ++n) {
      const double lhs = (2 * n - 1) * el::complete_Jn(n, k);
      const double rhs = (2 * n - 2) * (1 + m) * el::complete_Jn(n - 1, k) - (2 * n - 3) * m * el::complete_Jn(n - 2, k);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("incomplete J_n") {
  CHECK(el::incomplete_Jn(0, 0.5, 1e-9) == doctest::Approx(std::asin(0.5)).epsilon(1e-10));
  CHECK(el::incomplete_Jn(2, 0.0, 0.4) == 0.0);
  CHECK(el::incomplete_Jn(2, 1.0, 0.7) == doctest::Approx(el::complete_Jn(2, 0.7)).epsilon(1e-9));
  CHECK_ERROR_CODE(el::incomplete_Jn(1, 1.5, 0.5), ErrorCode::ArgumentOutOfRange);
  CHECK_ERROR_CODE(el::incomplete_Jn(1, -0.1, 0.5), ErrorCode::ArgumentOutOfRange);
  CHECK_ERROR_CODE(el::incomplete_Jn(1, 0.5, 1.0), ErrorCode::ModulusOutOfRange);
}

TEST_CASE("incomplete J_n is nondecreasing in x") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> kd(0.05, 0.98);
  for (int t = 0; t < 10; ++t) {
    const double k = kd(rng);
    for (int n : {0, 1, 4}) {
      double prev = 0.0;
      for (int i = 1; i <= 40; ++i) {
        const double v = el::incomplete_Jn(n, i / 40.0, k);
        CHECK(v >= prev);
        prev = v;
      }
    }
  }
}

TEST_CASE("K on the unit circle") {
  const double K0 = el::complete_triple(std::sqrt(0.5)).K;
  const auto mid = el::K_unit_modulus(kPi);
  CHECK(mid.real() == doctest::Approx(K0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(std::abs(mid.imag()) < 1e-14);
  CHECK(el::K_unit_modulus_abs2(kPi) == doctest::Approx(K0 * K0 / 2).epsilon(1e-14));
  for (int i = 1; i < 30; ++i) {
    const double th = 2 * kPi * i / 30;
    const auto a = el::K_unit_modulus(th), b = el::K_unit_modulus(2 * kPi - th);
    CHECK(std::abs(a - std::conj(b)) < 1e-13 * std::abs(a));
    CHECK(std::norm(a) == doctest::Approx(el::K_unit_modulus_abs2(th)).epsilon(1e-13));
  }
  CHECK_ERROR_CODE(el::K_unit_modulus(0.0), ErrorCode::AngleOutOfRange);
  CHECK_ERROR_CODE(el::K_unit_modulus(2 * kPi), ErrorCode::AngleOutOfRange);
  CHECK_ERROR_CODE(el::K_unit_modulus(2 * kPi - 1e-7), ErrorCode::DivergentModulus);
  CHECK_ERROR_CODE(el::K_unit_modulus(1e-7), ErrorCode::DivergentModulus);
}

TEST_CASE("Legendre relation") {
  CHECK(el::legendre_relation_residual(std::sqrt(0.5)) < 1e-12);
  CHECK(el::legendre_relation_residual(0.1) < 1e-12);
  CHECK(el::legendre_relation_residual(0.99) < 1e-10);
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> kd(1e-3, 1 - 1e-3);
  for (int i = 0; i < 100; ++i) CHECK(el::legendre_relation_residual(kd(rng)) < 1e-11);
}
