#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "helbp/elliptic.hpp"
#include "helbp/error.hpp"
#include "helbp/szego.hpp"
#include "helbp/transforms.hpp"
#include "helbp/verify.hpp"

namespace helbp::verify {

namespace {

using cplx = std::complex<double>;
using Matrix = std::vector<std::vector<cplx>>;

constexpr double kDiagTol = 1e-7;
constexpr double kCoarseFloor = 1e-12;

double max_offdiag_rel(const Matrix& G) {
  double worst = 0.0;
  for (size_t n = 0; n < G.size(); ++n) {
    for (size_t m = 0; m < G.size(); ++m) {
      if (n == m) continue;
      const double scale = std::sqrt(std::abs(G[n][n]) * std::abs(G[m][m]));
      worst = std::max(worst, std::abs(G[n][m]) / scale);
    }
  }
  return worst;
}

std::vector<double> diag_ratio_errors(const Matrix& G, const std::vector<Rational>& expected) {
  std::vector<double> out;
  for (size_t n = 1; n < G.size(); ++n) out.push_back(std::abs(G[n][n] / G[n - 1][n - 1] - expected[n].to_double()));
  return out;
}

std::vector<std::vector<double>> magnitudes(const Matrix& G) {
  std::vector<std::vector<double>> out;
  for (const auto& row : G) {
    std::vector<double> r;
    for (const cplx& v : row) r.push_back(std::abs(v.imag()) < 1e-300 ? v.real() : std::abs(v));
    out.push_back(std::move(r));
  }
  return out;
}

struct CircleSetup {
  std::vector<std::vector<double>> polys;    // P_n coefficients
  std::vector<std::vector<double>> partner;  // partner_m coefficients
  std::vector<Rational> expected_ratio;      // b_n/d_n, index 0 unused
  // Geronimus only
  double nu = 0.0;
  double printed_mass = 0.0;
};

CircleSetup make_setup(CircleWeight weight, int n_max, const Rational& chi) {
  CircleSetup s;
  s.expected_ratio.push_back(Rational(0));
  auto to_d = [](const std::vector<Poly>& v, int n_max) {
    std::vector<std::vector<double>> out;
    for (int n = 0; n <= n_max; ++n) out.push_back(v[static_cast<size_t>(n)].to_doubles());
    return out;
  };
  switch (weight) {
    case CircleWeight::Szego: {
      const auto ct = transforms::christoffel(lbp::Family::hermite(), Rational(1), n_max);
      s.polys = to_d(ct.polys, n_max);
      s.partner = s.polys;
      for (int n = 1; n <= n_max; ++n) s.expected_ratio.push_back(ct.family.b(n) / ct.family.d(n));
      break;
    }
    case CircleWeight::HermiteRho: {
      const lbp::Family h = lbp::Family::hermite();
      s.polys = to_d(lbp::monic_P(h, n_max), n_max);
      s.partner = to_d(lbp::partner_polys(h, n_max), n_max);
      for (int n = 1; n <= n_max; ++n) s.expected_ratio.push_back(h.b(n) / h.d(n));
      break;
    }
    case CircleWeight::Geronimus: {
      const auto g = transforms::geronimus(lbp::Family::hermite(), Rational(1), chi, n_max + 2);
      s.polys = to_d(g.polys, n_max);
      s.partner = to_d(lbp::partner_polys(g.family, n_max), n_max);
      for (int n = 1; n <= n_max; ++n) s.expected_ratio.push_back(g.family.b(n) / g.family.d(n));
      s.nu = g.nu.to_double();
      s.printed_mass = (s.nu + 1.0) / (2.0 * std::numbers::pi);
      break;
    }
  }
  return s;
}

struct CircleResult {
  Matrix G;
  Matrix printed;  // Geronimus with the printed mass
  double reg_one = 0.0;
  double mass_rel = 0.0;
};

CircleResult circle_matrix(CircleWeight weight, const CircleSetup& s, int nodes) {
  const size_t N = s.polys.size();
  const QuadratureGrid grid = circle_grid(nodes);
  CircleResult r;
  r.G.assign(N, std::vector<cplx>(N));

  if (weight != CircleWeight::Geronimus) {
    for (size_t q = 0; q < grid.nodes.size(); ++q) {
      const double th = grid.nodes[q];
      const cplx z = std::polar(1.0, th);
      const cplx wt = grid.weights[q] * (weight == CircleWeight::Szego ? cplx(szego::rho_tilde(th)) : szego::rho(th));
      std::vector<cplx> a(N), b(N);
      for (size_t n = 0; n < N; ++n) {
        a[n] = horner(s.polys[n], z);
        b[n] = horner(s.partner[n], std::conj(z));
      }
      for (size_t n = 0; n < N; ++n)
        for (size_t m = 0; m < N; ++m) r.G[n][m] += a[n] * b[m] * wt;
    }
    return r;
  }

  // Regular part Reg(g) = int (g(e^{it}) e^{-it} - g(1)) R0 + g(1) I0,
  // R0 = 1/(4 |K|^2 sin(t/2)); the Gram entries use g = P_n(z) Phat_m(1/z).
  const double I0 = geronimus_kernel_integral();
  Matrix reg(N, std::vector<cplx>(N));
  std::vector<cplx> a1(N), b1(N);
  for (size_t n = 0; n < N; ++n) {
    a1[n] = horner(s.polys[n], cplx(1.0));
    b1[n] = horner(s.partner[n], cplx(1.0));
  }
  cplx reg_one_sum = 0.0;
  for (size_t q = 0; q < grid.nodes.size(); ++q) {
    const double th = grid.nodes[q];
    const cplx z = std::polar(1.0, th);
    const double r0 = 1.0 / (4.0 * elliptic::K_unit_modulus_abs2(th) * std::sin(0.5 * th));
    const double wq = grid.weights[q] * r0;
    const cplx zinv = std::conj(z);
    std::vector<cplx> a(N), b(N);
    for (size_t n = 0; n < N; ++n) {
      a[n] = horner(s.polys[n], z);
      b[n] = horner(s.partner[n], zinv);
    }
    for (size_t n = 0; n < N; ++n)
      for (size_t m = 0; m < N; ++m) reg[n][m] += (a[n] * b[m] * zinv - a1[n] * b1[m]) * wq;
    reg_one_sum += (zinv - 1.0) * wq;
  }
  const cplx reg_one = reg_one_sum + I0;
  const cplx mass = 1.0 - s.nu * reg_one;
  r.printed.assign(N, std::vector<cplx>(N));
  for (size_t n = 0; n < N; ++n) {
    for (size_t m = 0; m < N; ++m) {
      const cplx g1 = a1[n] * b1[m];
      const cplx rg = reg[n][m] + g1 * I0;
      r.G[n][m] = s.nu * rg + mass * g1;
      r.printed[n][m] = rg + s.printed_mass * g1;
    }
  }
  r.reg_one = reg_one.real();
  r.mass_rel = (mass / s.nu).real();
  return r;
}

std::string circle_kind(CircleWeight w) {
  switch (w) {
    case CircleWeight::Szego: return "circle_szego_rho_tilde";
    case CircleWeight::HermiteRho: return "circle_hermite_rho";
    case CircleWeight::Geronimus: return "circle_geronimus";
  }
  return "circle";
}

void check_not_coarse(const GramReport& r) {
  if (r.doubled_offdiag_rel > 2.0 * std::max(r.max_offdiag_rel, kCoarseFloor)) {
    throw Error(ErrorCode::GridTooCoarse, r.kind + ": off-diagonal measure grows from " +
                                              std::to_string(r.max_offdiag_rel) + " to " +
                                              std::to_string(r.doubled_offdiag_rel) + " when the nodes double");
  }
}

}  // namespace

GramReport circle_gram(CircleWeight weight, int n_max, int nodes, double tol, const Rational& chi) {
  if (n_max < 1 || nodes < 2) throw Error(ErrorCode::InvalidArgument, "circle_gram needs n_max >= 1 and nodes >= 2");
  const CircleSetup s = make_setup(weight, n_max, chi);
  const CircleResult base = circle_matrix(weight, s, nodes);
  const CircleResult doubled = circle_matrix(weight, s, 2 * nodes);

  GramReport r;
  r.kind = circle_kind(weight);
  r.n_max = n_max;
  r.nodes = nodes;
  r.tol = tol;
  r.max_offdiag_rel = max_offdiag_rel(base.G);
  r.doubled_offdiag_rel = max_offdiag_rel(doubled.G);
  r.diag_ratio_errors = diag_ratio_errors(base.G, s.expected_ratio);
  r.matrix = magnitudes(base.G);
  if (weight == CircleWeight::Geronimus) {
    r.printed_mass_offdiag_rel = max_offdiag_rel(base.printed);
    r.regular_part_of_one = base.reg_one;
    r.mass_relative_to_regular = base.mass_rel;
  }
  check_not_coarse(r);
  const double worst_diag = r.diag_ratio_errors.empty()
                                ? 0.0
                                : *std::max_element(r.diag_ratio_errors.begin(), r.diag_ratio_errors.end());
  r.pass = r.max_offdiag_rel < tol && worst_diag < kDiagTol;
  return r;
}

namespace {

Matrix interval_matrix(const std::vector<std::vector<double>>& S, int nodes) {
  const QuadratureGrid grid = interval_grid(nodes);
  const size_t N = S.size();
  Matrix G(N, std::vector<cplx>(N));
  for (size_t q = 0; q < grid.nodes.size(); ++q) {
    const double x = grid.nodes[q];
    const double wt = grid.weights[q] * szego::interval_w_split(grid.s_plus[q], grid.s_minus[q]);
    std::vector<double> v(N);
    for (size_t n = 0; n < N; ++n) v[n] = horner(S[n], cplx(x)).real();
    for (size_t n = 0; n < N; ++n)
      for (size_t m = 0; m < N; ++m) G[n][m] += v[n] * v[m] * wt;
  }
  return G;
}

}  // namespace

GramReport interval_gram(int n_max, int nodes, double tol) {
  if (n_max < 1 || nodes < 2) throw Error(ErrorCode::InvalidArgument, "interval_gram needs n_max >= 1 and nodes >= 2");
  const szego::SymmetricOPSequence seq = szego::symmetric_S(lbp::Family::hermite(), n_max);
  std::vector<std::vector<double>> S;
  for (const Poly& p : seq.S) S.push_back(p.to_doubles());
  const Matrix G = interval_matrix(S, nodes);
  const Matrix G2 = interval_matrix(S, 2 * nodes);

  GramReport r;
  r.kind = "interval_w";
  r.n_max = n_max;
  r.nodes = nodes;
  r.tol = tol;
  r.max_offdiag_rel = max_offdiag_rel(G);
  r.doubled_offdiag_rel = max_offdiag_rel(G2);
  r.diag_ratio_errors = diag_ratio_errors(G, seq.u);
  r.matrix = magnitudes(G);
  check_not_coarse(r);
  const double worst_diag = *std::max_element(r.diag_ratio_errors.begin(), r.diag_ratio_errors.end());
  r.pass = r.max_offdiag_rel < tol && worst_diag < kDiagTol;
  return r;
}

namespace {

std::vector<cplx> numeric_moments(int n_range, int nodes) {
  const QuadratureGrid grid = circle_grid(nodes);
  std::vector<cplx> c(2 * static_cast<size_t>(n_range) + 1);
  for (size_t q = 0; q < grid.nodes.size(); ++q) {
    const double th = grid.nodes[q];
    const cplx wt = grid.weights[q] * szego::rho(th);
    for (int n = -n_range; n <= n_range; ++n) c[static_cast<size_t>(n + n_range)] += std::polar(1.0, n * th) * wt;
  }
  return c;
}

}  // namespace

MomentCheck moment_weight_check(int n_range, int nodes, double tol) {
  if (n_range < 0 || nodes < 2) throw Error(ErrorCode::InvalidArgument, "moment_weight_check needs n_range >= 0");
  const lbp::MomentTable exact = lbp::exact_moments(0, n_range + 1);
  const std::vector<cplx> c = numeric_moments(n_range, nodes);
  const std::vector<cplx> c2 = numeric_moments(n_range, 2 * nodes);

  MomentCheck r;
  r.n_range = n_range;
  r.nodes = nodes;
  r.tol = tol;
  double doubled_err = 0.0;
  for (int n = -n_range; n <= n_range; ++n) {
    const double e = exact.at(n).to_double();
    const size_t i = static_cast<size_t>(n + n_range);
    r.n.push_back(n);
    r.exact.push_back(e);
    r.numeric.push_back(c[i]);
    r.max_abs_error = std::max(r.max_abs_error, std::abs(c[i] - e));
    doubled_err = std::max(doubled_err, std::abs(c2[i] - e));
  }
  if (doubled_err > 2.0 * std::max(r.max_abs_error, kCoarseFloor)) {
    throw Error(ErrorCode::GridTooCoarse, "moment error grows when the nodes double");
  }
  const QuadratureGrid grid = circle_grid(nodes);
  for (size_t q = 0; q < grid.nodes.size(); ++q) r.rho_tilde_mass += grid.weights[q] * szego::rho_tilde(grid.nodes[q]);
  r.pass = r.max_abs_error < tol;
  return r;
}

}  // namespace helbp::verify
