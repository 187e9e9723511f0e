#pragma once

// Jacobi three-term recurrence written as
//   P_{k+1}(u) = (A_k u + B_k) P_k(u) - C_k P_{k-1}(u),  P_0 = 1, C_0 = 0.

#include <vector>

namespace diskslep::detail {

template <class Real>
struct JacobiStep {
  Real A;
  Real B;
  Real C;
};

template <class Real>
JacobiStep<Real> jacobi_step(int k, const Real& alpha, const Real& beta) {
  if (k == 0) {
    return {(alpha + beta + 2) / 2, (alpha - beta) / 2, Real(0)};
  }
  const Real s = 2 * k + alpha + beta;
  const Real denom = 2 * Real(k + 1) * (k + alpha + beta + 1) * s;
  return {(s + 1) * (s + 2) * s / denom, (s + 1) * (alpha * alpha - beta * beta) / denom,
          2 * (k + alpha) * (k + beta) * (s + 2) / denom};
}

template <class Real>
Real jacobi_eval(int n, const Real& alpha, const Real& beta, const Real& u) {
  Real prev(0);
  Real cur(1);
  for (int k = 0; k < n; ++k) {
    const auto st = jacobi_step<Real>(k, alpha, beta);
    const Real next = (st.A * u + st.B) * cur - st.C * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// sum_{k < g.size()} g[k] P_k(u) by Clenshaw's backward recurrence.
template <class Real, class Coeff>
Real jacobi_clenshaw(const std::vector<Coeff>& g, const Real& alpha, const Real& beta, const Real& u) {
  Real b1(0);  // b_{k+1}
  Real b2(0);  // b_{k+2}
  for (int k = static_cast<int>(g.size()) - 1; k >= 0; --k) {
    const auto st = jacobi_step<Real>(k, alpha, beta);
    const Real c_next = jacobi_step<Real>(k + 1, alpha, beta).C;
    const Real bk = Real(g[k]) + (st.A * u + st.B) * b1 - c_next * b2;
    b2 = b1;
    b1 = bk;
  }
  return b1;
}

// sqrt(2(2n+N+nu+1) prod_{j=1..N} (n+nu+j)/(n+j)): maps kappa_n^{-1} T_{N,n}
// onto the orthonormal basis.
template <class Real>
Real t_orthonormal_factor_impl(int N, int n, const Real& nu) {
  using std::sqrt;
  Real p = 2 * (2 * n + N + nu + 1);
  for (int j = 1; j <= N; ++j) p *= (n + nu + j) / Real(n + j);
  return sqrt(p);
}

}  // namespace diskslep::detail
