#pragma once

// Quadrature-backed reference operators.
//
//   finite Hankel   (H f)(x) = int_0^1 Jc_N(c x t) f(t) (1-t^2)^nu dt,  Jc_N(z) = sqrt(z) J_N(z)
//   differential    (L f)(x) = (1-x^2) f'' - 2(nu+1) x f' + ((1/4 - N^2)/x^2 - c^2 x^2) f
//   weighted Fourier (F g)(y) = int_D exp(i c <x,y>) g(x) w_nu(x) dx
//
// Sign convention: L T_{N,n} = -chi0(N,n,nu) T_{N,n} at c = 0, so the solver
// works with Lambda = -L, whose spectrum is positive and increasing. apply_L
// returns L itself.

#include <complex>
#include <functional>
#include <vector>

#include "diskslep/quadrature.hpp"

namespace diskslep {

using RadialFunction = std::function<double(double)>;
using DiskFunction = std::function<std::complex<double>(double, double)>;

struct PolarPoint;

struct DiskPoint {
  double x = 0.0;
  double y = 0.0;

  double norm() const;
  PolarPoint to_polar() const;
};

struct PolarPoint {
  double r = 0.0;
  double theta = 0.0;

  DiskPoint to_cartesian() const;
};

/// Value and first two derivatives of a radial function at one point.
struct RadialJet {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

/// (H f)(x) by the given rule, which must be a radial rule for the same nu.
double apply_finite_hankel(double nu, double c, int N, const RadialFunction& f, double x, const QuadratureRule& rule);

/// The nu = 0 operator int_0^1 J_N(c x t) sqrt(c x t) f(t) dt, written with
/// J_N directly. Requires a radial rule with nu = 0.
double apply_classical_hankel(double c, int N, const RadialFunction& f, double x, const QuadratureRule& rule);

/// Finite-difference step used by apply_L.
constexpr double kDifferenceStep = 1e-4;

/// (L f)(x) with 5-point central differences (step 1e-4) and one Richardson
/// extrapolation. The stencil reaches x +- 4h; throws std::domain_error when
/// that leaves (0,1).
double apply_L(double nu, double c, int N, const RadialFunction& f, double x);

/// The classical nu = 0 operator (1-t^2) y'' - 2 t y' + ((1/4 - N^2)/t^2 - c^2 t^2) y
/// with the same difference scheme as apply_L.
double apply_L_classical(double c, int N, const RadialFunction& f, double x);

/// (L f)(x) from known derivatives.
double apply_L_jet(double nu, double c, int N, const RadialJet& f, double x);

/// One Nystrom eigenpair: the eigenvalue of the symmetrized matrix and the
/// eigenfunction at the rule nodes, normalized in L^2((0,1), (1-t^2)^nu).
struct NystromMode {
  double value = 0.0;
  std::vector<double> nodes;
  std::vector<double> phi;
};

/// Eigenpairs of M_ij = sqrt(w_i w_j) Jc_N(c x_i x_j) on a radial rule of
/// rule_size points, by descending |value|. The values approximate
/// sqrt(c) mu_{N,n}. Requires rule_size >= 4 count.
std::vector<NystromMode> nystrom_hankel_eigs(double nu, double c, int N, int rule_size, int count);

/// j_{nu+1}(c |y - z|).
double kernel_K(double nu, double c, const DiskPoint& y, const DiskPoint& z);

/// (F f)(y) on a disk rule built for the same nu.
std::complex<double> apply_weighted_fourier(double nu, double c, const DiskFunction& f, const DiskPoint& y,
                                            const DiskRule& rule);

/// (F* f)(y): the same integral with exp(-i c <x,y>).
std::complex<double> apply_adjoint_fourier(double nu, double c, const DiskFunction& f, const DiskPoint& y,
                                           const DiskRule& rule);

/// <f, g>_nu = int_D f conj(g) w_nu.
std::complex<double> disk_inner(const DiskFunction& f, const DiskFunction& g, const DiskRule& rule);

/// int_0^1 f g (1-t^2)^nu dt on a radial rule.
double radial_inner(const RadialFunction& f, const RadialFunction& g, const QuadratureRule& rule);

}  // namespace diskslep
