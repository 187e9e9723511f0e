#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "diskslep/detail/jacobi_impl.hpp"

namespace diskslep::detail {

// sum_k A_k That_k(x) / x^{N+1/2}.
template <class Real>
Real radial_series(const std::vector<double>& coeffs, int N, const Real& nu, const Real& x) {
  std::vector<Real> g(coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    g[k] = Real(coeffs[k]) * t_orthonormal_factor_impl<Real>(N, static_cast<int>(k), nu);
  }
  return jacobi_clenshaw(g, Real(N), nu, Real(1 - 2 * x * x));
}

template <class Real>
Real eval_phi_impl(const std::vector<double>& coeffs, int N, const Real& nu, const Real& x) {
  using std::pow;
  if (x < Real(0) || x > Real(1)) throw std::domain_error("eval_phi: x outside [0,1]");
  if (x == Real(0)) return Real(0);
  return pow(x, Real(N) + Real(0.5)) * radial_series(coeffs, N, nu, x);
}

}  // namespace diskslep::detail
