#pragma once

#include <complex>

namespace helbp::elliptic {

struct EllipticTriple {
  double K;
  double E;
  double J;  // K - E
};

/// K, E and J = K - E for modulus 0 < k < 1 by the AGM.
/// Throws Error(ModulusOutOfRange) outside (0, 1).
EllipticTriple complete_triple(double k);

/// K(k) given the complementary modulus k' = sqrt(1 - k^2) directly, so that
/// moduli close to 1 keep full relative accuracy. Requires 0 < k' <= 1.
double K_from_complement(double kp);

/// J_n(1; k) = k^{2n} pi (1/2)_n / (2 n!) 2F1(1/2, 1/2 + n; 1 + n; k^2).
double complete_Jn(int n, double k);

/// Integral of k^{2n} t^{2n} / sqrt((1 - t^2)(1 - k^2 t^2)) over [0, x],
/// evaluated in the variable t = sin(phi) by adaptive Gauss-Kronrod.
double incomplete_Jn(int n, double x, double k);

/// K(e^{i theta/2}) = 1/2 e^{-i theta/4} (K(cos(theta/4)) + i K(sin(theta/4))),
/// 0 < theta < 2 pi. Throws Error(AngleOutOfRange) outside the open interval
/// and Error(DivergentModulus) when either modulus is within 1e-12 of 1.
std::complex<double> K_unit_modulus(double theta);

/// |K(e^{i theta/2})|^2 = (K^2(cos(theta/4)) + K^2(sin(theta/4))) / 4, with no
/// divergence guard. Both moduli are fed to the AGM through their complements.
double K_unit_modulus_abs2(double theta);

/// |(-K K' + E K' + K E') - pi/2| for modulus k.
double legendre_relation_residual(double k);

}  // namespace helbp::elliptic
