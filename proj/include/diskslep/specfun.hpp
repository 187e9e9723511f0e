#pragma once

// Scalar special functions: Gamma, Bessel J of real order, and the two
// normalized Bessel variants
//
//   j_nu(x)   = Gamma(nu+1) (2/x)^nu J_nu(x)    (j_nu(0) = 1)
//   Jc_nu(x)  = sqrt(x) J_nu(x)
//
// All functions are pure and thread-safe.

namespace diskslep {

/// Gamma function. Throws std::domain_error at the poles 0, -1, -2, ... and
/// std::overflow_error when the result is not representable.
double gamma_fn(double x);

/// J_order(x) for order > -1 and x >= 0. The accuracy contract (absolute
/// 1e-12) covers 0 <= order <= 40, x <= 60; orders in (-1, 0) are accepted
/// because j_small is defined for nu > -1.
double bessel_j(double order, double x);

/// J_n(x) for any integer n and real x, using J_{-n} = (-1)^n J_n.
double bessel_jn(int n, double x);

/// j_nu(x) = Gamma(nu+1) (2/x)^nu J_nu(x) for nu > -1, x >= 0.
double j_small(double nu, double x);

/// sqrt(x) J_nu(x) for x >= 0 (limit value at x = 0).
double j_script(double nu, double x);

}  // namespace diskslep
