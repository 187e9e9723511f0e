#pragma once

// Gaussian rules built with Golub-Welsch on the tridiagonal QL core, radial
// rules on (0,1) for the weight (1-t^2)^nu, periodic trapezoid rules, and
// tensor polar rules for the normalized disk weight
//
//   w_nu(x, y) = (nu+1)/pi (1 - x^2 - y^2)^nu.

#include <complex>
#include <string>
#include <vector>

namespace diskslep {

enum class WeightKind {
  legendre,  ///< 1 on (-1,1)
  jacobi,    ///< (1-u)^alpha (1+u)^beta on (-1,1)
  radial,    ///< (1-t^2)^alpha on (0,1)
  periodic,  ///< 1 on [0, 2 pi)
};

template <class Real>
struct BasicQuadratureRule {
  std::vector<Real> nodes;    ///< strictly increasing
  std::vector<Real> weights;  ///< positive
  Real lower = Real(-1);
  Real upper = Real(1);
  WeightKind kind = WeightKind::legendre;
  Real alpha = Real(0);
  Real beta = Real(0);

  int size() const { return static_cast<int>(nodes.size()); }

  template <class F>
  auto integrate(F&& f) const -> decltype(f(nodes[0]) * weights[0]) {
    using Result = decltype(f(nodes[0]) * weights[0]);
    Result s{};
    for (std::size_t i = 0; i < nodes.size(); ++i) s += f(nodes[i]) * weights[i];
    return s;
  }
};

using QuadratureRule = BasicQuadratureRule<double>;

/// Short human-readable description, e.g. "radial(nu=1) n=40".
std::string describe(const QuadratureRule& rule);

/// n-point Gauss-Legendre rule on (-1,1).
QuadratureRule gauss_legendre(int n);

/// n-point Gauss-Jacobi rule on (-1,1) for (1-u)^alpha (1+u)^beta.
QuadratureRule gauss_jacobi(int n, double alpha, double beta);

/// n-point Gauss rule on (0,1) for (1-t^2)^nu.
QuadratureRule radial_rule(int n, double nu);

/// n equally spaced nodes 2 pi j / n with weights 2 pi / n.
QuadratureRule periodic_trapezoid(int n);

/// Polar tensor rule for the normalized disk weight w_nu. Applying it to
/// f == 1 gives 1.
template <class Real>
struct BasicDiskRule {
  BasicQuadratureRule<Real> radial;
  BasicQuadratureRule<Real> angular;
  Real nu = Real(0);
  Real normalization = Real(0);  ///< (nu+1)/pi

  /// sum over nodes of f(x, y) times the combined weight.
  template <class F>
  auto integrate(F&& f) const {
    using std::cos;
    using std::sin;
    using Result = decltype(f(Real(0), Real(0)) * Real(1));
    Result s{};
    for (int i = 0; i < radial.size(); ++i) {
      const Real r = radial.nodes[i];
      const Real wr = radial.weights[i] * r * normalization;
      Result ring{};
      for (int j = 0; j < angular.size(); ++j) {
        const Real t = angular.nodes[j];
        ring += f(r * cos(t), r * sin(t)) * angular.weights[j];
      }
      s += ring * wr;
    }
    return s;
  }

  /// Flattened nodes and weights (x, y, weight), for repeated application.
  struct Node {
    Real x;
    Real y;
    Real r;
    Real theta;
    Real weight;
  };
  std::vector<Node> flatten() const {
    using std::cos;
    using std::sin;
    std::vector<Node> out;
    out.reserve(static_cast<std::size_t>(radial.size()) * angular.size());
    for (int i = 0; i < radial.size(); ++i) {
      const Real r = radial.nodes[i];
      const Real wr = radial.weights[i] * r * normalization;
      for (int j = 0; j < angular.size(); ++j) {
        const Real t = angular.nodes[j];
        out.push_back({r * cos(t), r * sin(t), r, t, wr * angular.weights[j]});
      }
    }
    return out;
  }
};

using DiskRule = BasicDiskRule<double>;

constexpr int kDefaultRadialSize = 200;
constexpr int kDefaultAngularSize = 256;

/// Angular size sufficient for integrands with angular frequency up to max_freq.
int default_angular_size(int max_freq);

DiskRule disk_rule(int n_r, int n_theta, double nu);

}  // namespace diskslep
