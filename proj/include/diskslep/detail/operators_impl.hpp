#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "diskslep/detail/bessel_impl.hpp"
#include "diskslep/detail/linalg_impl.hpp"
#include "diskslep/detail/quadrature_impl.hpp"
#include "diskslep/quadrature.hpp"

namespace diskslep::detail {

template <class Real>
void require_radial_rule(const BasicQuadratureRule<Real>& rule, const Real& nu, const char* who) {
  using std::abs;
  if (rule.kind != WeightKind::radial || abs(rule.alpha - nu) > Real(1e-14) * (1 + abs(nu))) {
    throw std::invalid_argument(std::string(who) + ": rule must be a radial rule for the same nu");
  }
}

template <class Real, class F>
Real apply_finite_hankel_impl(const Real& nu, const Real& c, int N, F&& f, const Real& x,
                              const BasicQuadratureRule<Real>& rule) {
  require_radial_rule(rule, nu, "apply_finite_hankel");
  if (N < 0) throw std::domain_error("apply_finite_hankel: N must be non-negative");
  Real s(0);
  const Real order(N);
  for (int i = 0; i < rule.size(); ++i) {
    const Real t = rule.nodes[i];
    s += rule.weights[i] * bessel_j_script_impl(order, Real(c * x * t)) * Real(f(t));
  }
  return s;
}

// Symmetrized Nystrom matrix sqrt(w_i w_j) Jc_N(c x_i x_j).
template <class Real>
BasicMatrix<Real> nystrom_matrix(const Real& c, int N, const BasicQuadratureRule<Real>& rule) {
  using std::sqrt;
  const int n = rule.size();
  BasicMatrix<Real> m(n, n);
  const Real order(N);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      const Real v = sqrt(rule.weights[i] * rule.weights[j]) *
                     bessel_j_script_impl(order, Real(c * rule.nodes[i] * rule.nodes[j]));
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return m;
}

// Eigenvalues only, by descending magnitude.
template <class Real>
std::vector<Real> nystrom_values_impl(const Real& c, int N, const BasicQuadratureRule<Real>& rule, int count) {
  auto vals = dense_sym_values(nystrom_matrix(c, N, rule));
  if (count < static_cast<int>(vals.size())) vals.resize(count);
  return vals;
}

}  // namespace diskslep::detail
