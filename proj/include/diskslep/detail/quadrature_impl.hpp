#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "diskslep/detail/linalg_impl.hpp"
#include "diskslep/detail/real.hpp"
#include "diskslep/quadrature.hpp"

namespace diskslep::detail {

// Gauss rule from recurrence coefficients: diagonal a, off-diagonal b (already
// square-rooted) and total mass mu0.
template <class Real>
void golub_welsch(std::vector<Real> a, std::vector<Real> b, const Real& mu0, std::vector<Real>& nodes,
                  std::vector<Real>& weights) {
  const int n = static_cast<int>(a.size());
  BasicMatrix<Real> z(1, n);
  z(0, 0) = Real(1);
  tql_implicit<Real>(a, b, &z);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return a[i] < a[j]; });
  nodes.resize(n);
  weights.resize(n);
  for (int k = 0; k < n; ++k) {
    nodes[k] = a[order[k]];
    weights[k] = mu0 * z(0, order[k]) * z(0, order[k]);
  }
}

template <class Real>
BasicQuadratureRule<Real> gauss_jacobi_impl(int n, const Real& alpha, const Real& beta) {
  using std::sqrt;
  if (n < 1) throw std::domain_error("gauss_jacobi: n must be at least 1");
  if (!(alpha > Real(-1)) || !(beta > Real(-1))) throw std::domain_error("gauss_jacobi: alpha and beta must exceed -1");
  const Real ab = alpha + beta;
  std::vector<Real> a(n);
  std::vector<Real> b(n, Real(0));
  a[0] = (beta - alpha) / (ab + 2);
  for (int k = 1; k < n; ++k) a[k] = (beta * beta - alpha * alpha) / ((2 * k + ab) * (2 * k + ab + 2));
  // b[k-1] couples k-1 and k
  for (int k = 1; k < n; ++k) {
    Real b2;
    if (k == 1) {
      b2 = 4 * (1 + alpha) * (1 + beta) / ((2 + ab) * (2 + ab) * (3 + ab));
    } else {
      const Real s = 2 * k + ab;
      b2 = 4 * Real(k) * (k + alpha) * (k + beta) * (k + ab) / (s * s * (s + 1) * (s - 1));
    }
    b[k - 1] = sqrt(b2);
  }
  using std::pow;
  const Real mu0 = pow(Real(2), ab + 1) * real_gamma(Real(alpha + 1)) * real_gamma(Real(beta + 1)) /
                   real_gamma(Real(ab + 2));
  BasicQuadratureRule<Real> rule;
  golub_welsch(a, b, mu0, rule.nodes, rule.weights);
  rule.lower = Real(-1);
  rule.upper = Real(1);
  rule.kind = (alpha == Real(0) && beta == Real(0)) ? WeightKind::legendre : WeightKind::jacobi;
  rule.alpha = alpha;
  rule.beta = beta;
  return rule;
}

// Gauss rule for (1-t^2)^nu on (0,1). A Gauss-Jacobi(nu, 0) rule in
// s = 2t - 1 with a margin of extra points carries the endpoint singularity
// exactly and the smooth factor (1+t)^nu to near machine precision; a Lanczos
// pass with full reorthogonalization over that discrete measure then yields
// the recurrence coefficients of the target weight.
template <class Real>
BasicQuadratureRule<Real> radial_rule_impl(int n, const Real& nu) {
  using std::pow;
  using std::sqrt;
  if (n < 1) throw std::domain_error("radial_rule: n must be at least 1");
  if (!(nu > Real(-1))) throw std::domain_error("radial_rule: nu must exceed -1");
  const int m = n + 32;
  const auto base = gauss_jacobi_impl<Real>(m, nu, Real(0));
  std::vector<Real> t(m);
  std::vector<Real> w(m);
  Real mass(0);
  const Real scale = pow(Real(2), -nu - 1);
  for (int i = 0; i < m; ++i) {
    t[i] = (1 + base.nodes[i]) / 2;
    w[i] = base.weights[i] * scale * pow(1 + t[i], nu);
    mass += w[i];
  }

  std::vector<std::vector<Real>> q;
  q.reserve(n);
  std::vector<Real> v(m);
  for (int i = 0; i < m; ++i) v[i] = sqrt(w[i] / mass);
  std::vector<Real> alpha(n);
  std::vector<Real> beta(n, Real(0));
  q.push_back(v);
  for (int k = 0; k < n; ++k) {
    const auto& qk = q[k];
    std::vector<Real> u(m);
    Real ak(0);
    for (int i = 0; i < m; ++i) {
      u[i] = t[i] * qk[i];
      ak += qk[i] * u[i];
    }
    alpha[k] = ak;
    if (k + 1 == n) break;
    for (int i = 0; i < m; ++i) u[i] -= ak * qk[i];
    if (k > 0) {
      for (int i = 0; i < m; ++i) u[i] -= beta[k - 1] * q[k - 1][i];
    }
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& qj : q) {
        Real dot(0);
        for (int i = 0; i < m; ++i) dot += qj[i] * u[i];
        for (int i = 0; i < m; ++i) u[i] -= dot * qj[i];
      }
    }
    Real nrm(0);
    for (int i = 0; i < m; ++i) nrm += u[i] * u[i];
    nrm = sqrt(nrm);
    beta[k] = nrm;
    for (int i = 0; i < m; ++i) u[i] /= nrm;
    q.push_back(std::move(u));
  }

  BasicQuadratureRule<Real> rule;
  golub_welsch(alpha, beta, mass, rule.nodes, rule.weights);
  rule.lower = Real(0);
  rule.upper = Real(1);
  rule.kind = WeightKind::radial;
  rule.alpha = nu;
  rule.beta = Real(0);
  return rule;
}

template <class Real>
BasicQuadratureRule<Real> periodic_trapezoid_impl(int n) {
  if (n < 1) throw std::domain_error("periodic_trapezoid: n must be at least 1");
  BasicQuadratureRule<Real> rule;
  const Real two_pi = 2 * real_pi<Real>();
  rule.nodes.resize(n);
  rule.weights.assign(n, two_pi / n);
  for (int j = 0; j < n; ++j) rule.nodes[j] = two_pi * j / n;
  rule.lower = Real(0);
  rule.upper = two_pi;
  rule.kind = WeightKind::periodic;
  return rule;
}

template <class Real>
BasicDiskRule<Real> disk_rule_impl(int n_r, int n_theta, const Real& nu) {
  if (n_r < 1 || n_theta < 1) throw std::domain_error("disk_rule: sizes must be at least 1");
  BasicDiskRule<Real> rule;
  rule.radial = radial_rule_impl<Real>(n_r, nu);
  rule.angular = periodic_trapezoid_impl<Real>(n_theta);
  rule.nu = nu;
  rule.normalization = (nu + 1) / real_pi<Real>();
  return rule;
}

}  // namespace diskslep::detail
