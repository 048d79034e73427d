#include <cmath>
#include <numbers>

#include "helbp/elliptic.hpp"
#include "helbp/error.hpp"
#include "helbp/szego.hpp"
#include "helbp/verify.hpp"

namespace helbp::verify {

namespace {

constexpr double kPi = std::numbers::pi;

// t - sin t without cancellation for small t.
double t_minus_sin(double t) {
  if (t < 1e-2) {
    const double t2 = t * t;
    return t * t2 / 6.0 * (1.0 - t2 / 20.0 * (1.0 - t2 / 42.0));
  }
  return t - std::sin(t);
}

}  // namespace

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "Gauss-Legendre needs n >= 1");
  nodes.assign(static_cast<size_t>(n), 0.0);
  weights.assign(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n == 1 ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[static_cast<size_t>(i)] = -x;
    nodes[static_cast<size_t>(n - 1 - i)] = x;
    weights[static_cast<size_t>(i)] = w;
    weights[static_cast<size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) nodes[static_cast<size_t>(n / 2)] = 0.0;
}

QuadratureGrid circle_grid(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "circle grid needs at least 2 nodes");
  QuadratureGrid g{QuadratureGrid::Kind::Circle, {}, {}, {}, {}};
  const double h = 2.0 * kPi / n;
  for (int m = 0; m < n; ++m) {
    const double t = (m + 0.5) * h;
    const double s = std::sin(0.5 * t);
    g.nodes.push_back(t <= kPi ? t_minus_sin(t) : 2.0 * kPi - t_minus_sin(2.0 * kPi - t));
    g.weights.push_back(2.0 * s * s * h);
  }
  return g;
}

QuadratureGrid interval_grid(int n) {
  QuadratureGrid g{QuadratureGrid::Kind::Interval, {}, {}, {}, {}};
  std::vector<double> t, w;
  gauss_legendre(n, t, w);
  for (size_t i = 0; i < t.size(); ++i) {
    const double x = t[i];
    const double phi = (15.0 * x - 10.0 * x * x * x + 3.0 * x * x * x * x * x) / 8.0;
    const double om = 1.0 - x * x;
    g.nodes.push_back(2.0 * phi);
    g.weights.push_back(w[i] * 2.0 * (15.0 / 8.0) * om * om);
    const double a = 1.0 - x, b = 1.0 + x;
    g.s_minus.push_back(a * a * a * (8.0 + 9.0 * x + 3.0 * x * x) / 16.0);
    g.s_plus.push_back(b * b * b * (8.0 - 9.0 * x + 3.0 * x * x) / 16.0);
  }
  return g;
}

double geronimus_kernel_integral() {
  // On (0, pi] substitute theta = 16 e^{-s}; the integrand R0(theta) theta
  // tends to 2/(s^2 + pi^2/4), whose tail beyond S is integrated exactly.
  // The half (pi, 2 pi) is the mirror image.
  constexpr double S = 60.0;
  const double s0 = std::log(16.0 / kPi);
  std::vector<double> x, w;
  gauss_legendre(20, x, w);
  constexpr int panels = 64;
  const double width = (S - s0) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = s0 + (p + 0.5) * width;
    for (size_t i = 0; i < x.size(); ++i) {
      const double s = mid + 0.5 * width * x[i];
      const double theta = 16.0 * std::exp(-s);
      const double r0 = 1.0 / (4.0 * elliptic::K_unit_modulus_abs2(theta) * std::sin(0.5 * theta));
      sum += 0.5 * width * w[i] * r0 * theta;
    }
  }
  const double tail = (4.0 / kPi) * (0.5 * kPi - std::atan(2.0 * S / kPi));
  return 2.0 * (sum + tail);
}

}  // namespace helbp::verify
