#pragma once

#include <cmath>
#include <stdexcept>

#include "diskslep/detail/bessel_impl.hpp"
#include "diskslep/detail/jacobi_impl.hpp"
#include "diskslep/detail/quadrature_impl.hpp"
#include "diskslep/detail/real.hpp"

namespace diskslep::detail {

template <class Real>
Real lemma1_rhs_impl(const Real& alpha, const Real& beta, int n, const Real& x) {
  using std::pow;
  if (!(x > Real(0))) throw std::domain_error("lemma1_rhs: x must be positive");
  if (n < 0) throw std::domain_error("lemma1_rhs: n must be non-negative");
  // Gamma(beta+n+1)/n! = Gamma(beta+1) (beta+1)_n / n!
  Real g = real_gamma(Real(beta + 1));
  for (int j = 1; j <= n; ++j) g *= (beta + j) / Real(j);
  return pow(Real(2), beta) * g * bessel_j_script_impl(Real(alpha + beta + 2 * n + 1), x) / pow(x, beta + 1);
}

template <class Real>
Real lemma1_lhs_on_rule(const Real& alpha, const Real& beta, int n, const Real& x, const BasicQuadratureRule<Real>& rule) {
  using std::pow;
  Real s(0);
  for (int i = 0; i < rule.size(); ++i) {
    const Real t = rule.nodes[i];
    s += rule.weights[i] * bessel_j_script_impl(alpha, Real(x * t)) * jacobi_eval(n, alpha, beta, Real(1 - 2 * t * t)) *
         pow(t, alpha + Real(0.5));
  }
  return s;
}

}  // namespace diskslep::detail
