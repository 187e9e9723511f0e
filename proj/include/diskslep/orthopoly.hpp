#pragma once

// Orthogonal polynomial families used by the disk Slepian solver: Jacobi,
// Gegenbauer, disk (Zernike-type) polynomials, two-variable Gegenbauer
// polynomials, and the radial basis
//
//   T_{N,n}(x) = x^{N+1/2} R_{N,n}(x),   R_{N,n}(x) = N! n! / (n+N)! P_n^{(N,nu)}(1 - 2x^2),
//
// which is orthogonal on (0,1) under (1 - x^2)^nu.

#include <complex>

namespace diskslep {

struct JacobiIndex {
  int n = 0;
  double alpha = 0.0;
  double beta = 0.0;

  void validate() const;
};

struct TBasisIndex {
  int N = 0;  ///< angular order
  int n = 0;  ///< radial degree
  double nu = 0.0;

  void validate() const;
};

/// Coefficients of x^2 T_{N,n} = a T_{N,n+1} + b T_{N,n} + c T_{N,n-1}.
struct X2Recurrence {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// P_n^{(alpha,beta)}(x) by the three-term recurrence.
double jacobi_p(const JacobiIndex& idx, double x);

/// C_n^nu(x); nu must satisfy nu > -1/2 and nu != 0.
double gegenbauer_c(int n, double nu, double x);

/// Disk polynomial D^nu_{n,m}(r cos t, r sin t)
///   = (-1)^s s!/(nu+1)_s r^{|n-m|} e^{i(n-m)t} P_s^{(|n-m|,nu)}(1 - 2r^2),  s = min(n,m).
std::complex<double> disk_poly(int n, int m, double nu, double r, double theta);

/// Squared norm of D^nu_{n,m} under the normalized disk weight w_nu.
double disk_poly_norm(int n, int m, double nu);

/// P^nu_{n,k}(x,y) = C_{n-k}^{nu+k+1/2}(x) (1-x^2)^{k/2} C_k^nu(y / sqrt(1-x^2)), |x| < 1.
double gegenbauer2d(int n, int k, double nu, double x, double y);

/// T_{N,n}(x) for 0 <= x <= 1.
double t_basis(const TBasisIndex& idx, double x);

/// h_{N,n} = int_0^1 T_{N,n}(x)^2 (1-x^2)^nu dx.
double t_norm_sq(const TBasisIndex& idx);

/// kappa_n / sqrt(h_n): the factor turning kappa_n^{-1} T_{N,n} into the
/// orthonormal basis function, i.e. That_{N,n}(x) = x^{N+1/2} t_orthonormal_factor * P_n(1-2x^2).
double t_orthonormal_factor(const TBasisIndex& idx);

/// Multiplication-by-x^2 recurrence, derived from the Jacobi three-term
/// recurrence under u = 1 - 2x^2. The c coefficient is 0 for n = 0.
X2Recurrence x2_recurrence_coeffs(const TBasisIndex& idx);

}  // namespace diskslep
