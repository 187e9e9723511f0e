#pragma once

// Spectral solver for the radial problem of order N.
//
// The working operator is Lambda = -L_{c,N,nu}. In the orthonormal basis
// That_k = T_{N,k} / sqrt(h_{N,k}) it is the symmetric tridiagonal matrix
//
//   d_k = chi0(N,k,nu) + c^2 b_k,   e_k = c^2 a_k sqrt(h_{k+1} / h_k),
//
// with (a, b) from the x^2 recurrence. An eigenvector A gives the radial
// eigenfunction phi(x) = sum_k A_k That_k(x), which satisfies
// (H phi)(x) = sqrt(c) mu phi(x), and lambda = 2 (nu+1) i^N mu.
//
// mu is read off the behaviour at x -> 0: both phi and H phi are
// proportional to x^{N+1/2} there, and only That_0 contributes to the leading
// term of H phi. This gives
//
//   mu = A_0 (c/2)^N / (2 sqrt(h_0) prod_{j=1..N+1} (nu+j) S),   S = sum_k A_k / sqrt(h_k),
//
// which keeps full relative accuracy even when mu is many orders of magnitude
// below the leading eigenvalue.

#include <complex>
#include <stdexcept>
#include <vector>

#include "diskslep/linalg.hpp"
#include "diskslep/quadrature.hpp"

namespace diskslep {

class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kMaxTruncation = 4096;

struct SlepianParams {
  double nu = 0.0;
  double c = 0.0;
  int N = 0;
  int truncation = 0;  ///< 0 selects the size automatically
  double tolerance = 1e-12;

  void validate() const;
};

struct RadialMode {
  int n = 0;
  double chi = 0.0;
  double mu = 0.0;
  std::complex<double> lambda;
  std::vector<double> coeffs;
  int truncation = 0;
};

/// (N + 2n + 1/2)(N + 2 nu + 2n + 3/2): the eigenvalues of Lambda at c = 0.
double chi0(int N, int n, double nu);

SymTridiagonal build_spectral_matrix(const SlepianParams& params, int K);

/// The first num_modes modes by ascending chi. The truncation starts at
/// max(2 num_modes + 30, ceil(c) + 30) and doubles until the last coefficient
/// of every mode is below tolerance times its largest one; beyond
/// kMaxTruncation a TruncationError is thrown.
std::vector<RadialMode> solve_modes(const SlepianParams& params, int num_modes);

/// mu from the coefficient vector (see the header comment).
double mu_from_coeffs(const std::vector<double>& coeffs, const SlepianParams& params);

/// phi(x) = sum_k A_k That_k(x), 0 <= x <= 1.
double eval_phi(const RadialMode& mode, const SlepianParams& params, double x);

/// R(r) = phi(r) / sqrt(r), evaluated without the division (finite at r = 0).
double eval_R(const RadialMode& mode, const SlepianParams& params, double r);

/// psi(r, theta) = R(r) e^{i N theta} / sqrt(2(nu+1)), scaled to unit norm
/// under w_nu on the disk.
std::complex<double> eval_psi(const RadialMode& mode, const SlepianParams& params, double r, double theta);

/// <H phi, phi> / (sqrt(c) <phi, phi>) on the given radial rule; c > 0.
double rayleigh_mu(const RadialMode& mode, const SlepianParams& params, const QuadratureRule& rule);

}  // namespace diskslep
