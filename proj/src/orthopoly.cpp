#include "diskslep/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "diskslep/detail/jacobi_impl.hpp"
#include "diskslep/detail/real.hpp"

namespace diskslep {

void JacobiIndex::validate() const {
  if (n < 0) throw std::invalid_argument("JacobiIndex: n must be non-negative");
  if (!(alpha > -1.0) || !(beta > -1.0)) throw std::invalid_argument("JacobiIndex: alpha and beta must exceed -1");
}

void TBasisIndex::validate() const {
  if (N < 0 || n < 0) throw std::invalid_argument("TBasisIndex: N and n must be non-negative");
  if (!(nu > -1.0)) throw std::invalid_argument("TBasisIndex: nu must exceed -1");
}

double jacobi_p(const JacobiIndex& idx, double x) {
  idx.validate();
  return detail::jacobi_eval(idx.n, idx.alpha, idx.beta, x);
}

double gegenbauer_c(int n, double nu, double x) {
  if (n < 0) throw std::domain_error("gegenbauer_c: negative degree");
  if (!(nu > -0.5)) throw std::domain_error("gegenbauer_c: nu must exceed -1/2");
  if (nu == 0.0) throw std::domain_error("gegenbauer_c: nu = 0 is not supported");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * nu * x;
  for (int k = 2; k <= n; ++k) {
    const double next = (2.0 * x * (k + nu - 1.0) * cur - (k + 2.0 * nu - 2.0) * prev) / k;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::complex<double> disk_poly(int n, int m, double nu, double r, double theta) {
  if (n < 0 || m < 0) throw std::domain_error("disk_poly: negative index");
  if (!(nu > -1.0)) throw std::domain_error("disk_poly: nu must exceed -1");
  if (r < 0.0 || r > 1.0) throw std::domain_error("disk_poly: r outside [0,1]");
  const int s = std::min(n, m);
  const int d = std::abs(n - m);
  double pref = detail::factorial(s) / detail::pochhammer(nu + 1.0, s);
  if (s % 2 != 0) pref = -pref;
  const double radial = pref * std::pow(r, d) * detail::jacobi_eval(s, static_cast<double>(d), nu, 1.0 - 2.0 * r * r);
  return std::polar(1.0, (n - m) * theta) * radial;
}

double disk_poly_norm(int n, int m, double nu) {
  if (n < 0 || m < 0) throw std::domain_error("disk_poly_norm: negative index");
  if (!(nu > -1.0)) throw std::domain_error("disk_poly_norm: nu must exceed -1");
  return (nu + 1.0) / (m + n + nu + 1.0) * detail::factorial(n) * detail::factorial(m) /
         (detail::pochhammer(nu + 1.0, n) * detail::pochhammer(nu + 1.0, m));
}

double gegenbauer2d(int n, int k, double nu, double x, double y) {
  if (k < 0 || k > n) throw std::domain_error("gegenbauer2d: need 0 <= k <= n");
  if (!(std::abs(x) < 1.0)) throw std::domain_error("gegenbauer2d: |x| must be < 1");
  const double s = std::sqrt(1.0 - x * x);
  return gegenbauer_c(n - k, nu + k + 0.5, x) * std::pow(s, k) * gegenbauer_c(k, nu, y / s);
}

double t_basis(const TBasisIndex& idx, double x) {
  idx.validate();
  if (x < 0.0 || x > 1.0) throw std::domain_error("t_basis: x outside [0,1]");
  if (x == 0.0) return 0.0;
  double kappa = 1.0;
  for (int j = 1; j <= idx.N; ++j) kappa *= static_cast<double>(j) / (idx.n + j);
  return std::pow(x, idx.N + 0.5) * kappa *
         detail::jacobi_eval(idx.n, static_cast<double>(idx.N), idx.nu, 1.0 - 2.0 * x * x);
}

double t_norm_sq(const TBasisIndex& idx) {
  idx.validate();
  double p = 1.0;
  for (int j = 1; j <= idx.N; ++j) p *= static_cast<double>(j) * j / ((idx.n + j) * (idx.n + idx.nu + j));
  return p / (2.0 * (2 * idx.n + idx.N + idx.nu + 1.0));
}

double t_orthonormal_factor(const TBasisIndex& idx) {
  idx.validate();
  return detail::t_orthonormal_factor_impl(idx.N, idx.n, idx.nu);
}

X2Recurrence x2_recurrence_coeffs(const TBasisIndex& idx) {
  idx.validate();
  // x^2 = (1 - u)/2 and u P_n = (P_{n+1} - B_n P_n + C_n P_{n-1}) / A_n.
  const int n = idx.n;
  const auto st = detail::jacobi_step(n, static_cast<double>(idx.N), idx.nu);
  X2Recurrence r;
  r.a = -0.5 / st.A * (n + idx.N + 1.0) / (n + 1.0);
  r.b = 0.5 * (1.0 + st.B / st.A);
  r.c = (n == 0) ? 0.0 : -0.5 * st.C / st.A * n / static_cast<double>(n + idx.N);
  return r;
}

}  // namespace diskslep
