#pragma once

// Closed-form transform identities and their quadrature left-hand sides.
//
// Jacobi transform:
//   int_0^1 Jc_a(x t) P_n^{(a,b)}(1-2t^2) t^{a+1/2} (1-t^2)^b dt
//     = 2^b Gamma(b+n+1)/n! Jc_{a+b+2n+1}(x) / x^{b+1}
//
// Disk polynomials (F = F_{nu,1}, y = (rho cos t, rho sin t)):
//   F[D_{m,n}](y) = C (2/rho)^{nu+1} J_{nu+n+m+1}(rho) e^{i(m-n)t}
//
// Two-variable Gegenbauer polynomials, y = (rho cos p, rho sin p):
//   F[P^{nu+1/2}_{n,k}](y) = Z rho^{-(nu+1)} J_{nu+n+1}(rho) C_{n-k}^{nu+k+1}(cos p) sin^k p
// The alternative shape rho^{k-n} J_{nu+n+1}(rho) C_{n-k}^{nu+k+1}(cos p) is
// kept selectable for comparison; it does not match the quadrature.
//
// Constants are either the tabulated ones (ConstantSource::paper) or fixed by
// one quadrature evaluation at a reference point (ConstantSource::derived, the
// default). Derived constants are cached per key; the cache is write-once and
// safe for concurrent readers.

#include <complex>
#include <optional>
#include <vector>

#include "diskslep/linalg.hpp"

namespace diskslep {

enum class ConstantSource { paper, derived };

enum class GegenbauerShape { corrected, printed };

struct ClosedFormResult {
  std::complex<double> value;
  ConstantSource constant_source = ConstantSource::derived;
  std::complex<double> constant;
  /// paper constant / derived constant, recorded when constant_source == derived.
  std::optional<std::complex<double>> discrepancy_log;
};

/// Right side of the Jacobi transform identity, x > 0.
double lemma1_rhs(double alpha, double beta, int n, double x);

/// Left side by a radial Gauss rule for (1-t^2)^beta with rule_size points.
double lemma1_lhs(double alpha, double beta, int n, double x, int rule_size = 80);

/// Tabulated constant (-1)^m (nu+1) i^{n-m} Gamma(s+1)/Gamma(nu+s+1), s = min(n,m).
std::complex<double> disk_transform_paper_constant(double nu, int n, int m);

/// Constant fitted from quadrature at the first usable reference point.
std::complex<double> disk_transform_derived_constant(double nu, int n, int m);

/// (2/rho)^{nu+1} J_{nu+n+m+1}(rho) e^{i(m-n) t}.
std::complex<double> disk_transform_shape(double nu, int n, int m, double rho, double theta);

/// Closed form of F_{nu,1}[D_{m,n}] at (rho, theta).
ClosedFormResult disk_transform_closed(double nu, int n, int m, double rho, double theta,
                                       ConstantSource source = ConstantSource::derived);

/// F_{nu,1}[D_{m,n}] at (rho, theta) by polar quadrature.
std::complex<double> disk_transform_quadrature(double nu, int n, int m, double rho, double theta, int n_r = 60,
                                               int n_theta = 96);

/// Tabulated constant 2^{nu+1} Gamma(nu+1) pi (-1)^n (2nu+1)_n / (i^k (2n)!).
std::complex<double> gegenbauer2d_transform_paper_constant(double nu, int n, int k);

std::complex<double> gegenbauer2d_transform_derived_constant(double nu, int n, int k,
                                                             GegenbauerShape shape = GegenbauerShape::corrected);

std::complex<double> gegenbauer2d_transform_shape(double nu, int n, int k, double rho, double phi,
                                                  GegenbauerShape shape = GegenbauerShape::corrected);

/// Closed form of F_{nu,1}[P^{nu+1/2}_{n,k}] at y = (rho cos phi, rho sin phi).
/// Requires nu > -1/2 and 0 <= k <= n.
ClosedFormResult gegenbauer2d_transform_closed(double nu, int n, int k, double rho, double phi,
                                               ConstantSource source = ConstantSource::derived,
                                               GegenbauerShape shape = GegenbauerShape::corrected);

/// F_{nu,1}[P^{nu+1/2}_{n,k}] at (rho, phi) by polar quadrature.
std::complex<double> gegenbauer2d_transform_quadrature(double nu, int n, int k, double rho, double phi, int n_r = 60,
                                                       int n_theta = 96);

/// Gram matrix of {P^{nu+1/2}_{n,k} : n <= max_degree} under w_{weight_nu},
/// indexed in the order (0,0), (1,0), (1,1), (2,0), ...
Matrix gegenbauer2d_gram(double nu, int max_degree, double weight_nu, int n_r = 40, int n_theta = 64);

/// int_0^pi e^{i x cos t} C_n^nu(cos t) sin^{2nu} t dt by Gauss-Jacobi quadrature; nu > -1/2, nu != 0.
std::complex<double> poisson_integral_quadrature(double nu, int n, double x, int rule_size = 80);

/// Closed form of the same integral, Gamma(nu+1/2) Gamma(1/2) (2nu)_n / ((-i)^n n! (x/2)^nu) J_{nu+n+shift}(x).
/// shift = 0 is the correct Bessel order; shift = 1 reproduces the tabulated variant.
std::complex<double> poisson_integral_closed(double nu, int n, double x, int shift = 0);

/// int_0^pi J_{nu-1/2}(z)/z^{nu-1/2} e^{i r cos t cos s} C_n^nu(cos t) sin^{2nu} t dt,
/// z = r sin t sin s, by Gauss-Jacobi quadrature.
std::complex<double> finite_integral_quadrature(double nu, int n, double r, double s, int rule_size = 80);

/// sqrt(2 pi) i^n J_{nu+n}(r) / r^nu C_n^nu(cos s).
std::complex<double> finite_integral_closed(double nu, int n, double r, double s);

}  // namespace diskslep
