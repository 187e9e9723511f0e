#pragma once

// Bessel J of real order > -1 and non-negative argument.
//
// Two regimes:
//   * ascending series when x < 2 or (x/2)^2 < order + 1; in the second case
//     the terms decrease monotonically from the first one, so there is no
//     cancellation;
//   * Miller backward recurrence from a high order, normalized with the
//     Neumann sum (x/2)^mu = sum_k (mu + 2k) Gamma(mu + k) / k! J_{mu+2k}(x).

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "diskslep/detail/real.hpp"

namespace diskslep::detail {

template <class Real>
bool bessel_use_series(const Real& order, const Real& x) {
  const Real h = x / 2;
  return x < Real(2) || h * h < order + 1;
}

// (x/2)^order / Gamma(order + 1) for order > -1, built as a product so it
// neither overflows for large orders nor loses accuracy to exp/log.
template <class Real>
Real bessel_series_prefactor(const Real& order, const Real& x) {
  using std::floor;
  using std::pow;
  const Real h = x / 2;
  const Real whole = floor(order);
  const Real frac = order - whole;
  Real p = pow(h, frac) / real_gamma(Real(frac + 1));
  const int n = static_cast<int>(whole);
  if (n < 0) return p * frac / h;
  for (int j = 1; j <= n; ++j) p *= h / (frac + j);
  return p;
}

// sum_k (-(x/2)^2)^k / (k! (order+1)_k), i.e. Gamma(order+1) (2/x)^order J_order(x).
template <class Real>
Real bessel_reduced_series(const Real& order, const Real& x) {
  using std::abs;
  const Real q = -(x * x) / 4;
  Real term(1);
  Real sum(1);
  const Real eps = real_eps<Real>();
  for (int k = 1; k < 2000; ++k) {
    term *= q / (Real(k) * (order + k));
    sum += term;
    if (abs(term) <= eps * abs(sum) && Real(k) * (order + k) > abs(q)) break;
  }
  return sum;
}

template <class Real>
Real bessel_j_miller(const Real& order, const Real& x) {
  using std::abs;
  using std::floor;
  using std::pow;
  using std::sqrt;

  const Real whole_r = floor(order);
  const Real mu = order - whole_r;
  const int whole = static_cast<int>(whole_r);  // >= -1
  const int top = std::max(whole, 0);

  const double xd = static_cast<double>(x);
  const double reach = std::max(static_cast<double>(top), xd);
  const double digits = real_digits10<Real>() + 10.0;
  int start = static_cast<int>(reach + digits + 2.0 * std::sqrt(digits * reach + 1.0)) + 2;
  if (start % 2 != 0) ++start;

  // Neumann weights: c_0 = Gamma(mu+1); c_k = (mu+2k) Gamma(mu+k)/k! for k >= 1.
  const int half = start / 2;
  std::vector<Real> weight(half + 1);
  weight[0] = real_gamma(Real(mu + 1));
  Real ratio = weight[0];  // Gamma(mu+k)/k! at k = 1
  for (int k = 1; k <= half; ++k) {
    weight[k] = (mu + 2 * k) * ratio;
    ratio *= (mu + k) / Real(k + 1);
  }

  const Real big(1e100);
  const Real inv_big(1e-100);
  Real f_up(0);     // f_{m+1}
  Real f_cur(1e-30);  // f_m, starting at m = start
  Real norm = weight[half] * f_cur;
  Real target = (whole == start) ? f_cur : Real(0);
  Real f_one(0);
  for (int m = start; m >= 1; --m) {
    const Real f_down = (2 * (mu + m) / x) * f_cur - f_up;
    f_up = f_cur;
    f_cur = f_down;
    const int idx = m - 1;
    if (idx % 2 == 0) norm += weight[idx / 2] * f_cur;
    if (idx == whole) target = f_cur;
    if (idx == 1) f_one = f_cur;
    if (abs(f_cur) > big) {
      f_cur *= inv_big;
      f_up *= inv_big;
      norm *= inv_big;
      target *= inv_big;
      f_one *= inv_big;
    }
  }
  // f_cur is now f_0, f_up is f_1.
  const Real scale = pow(x / 2, mu) / norm;
  if (whole < 0) {
    // one more downward step to mu - 1
    return ((2 * mu / x) * f_cur - f_up) * scale;
  }
  return target * scale;
}

template <class Real>
Real bessel_j_impl(const Real& order, const Real& x) {
  using std::isnan;
  if (!(order > Real(-1))) throw std::domain_error("bessel_j: order must exceed -1");
  if (!(x >= Real(0))) throw std::domain_error("bessel_j: argument must be non-negative");
  if (x == Real(0)) {
    if (order == Real(0)) return Real(1);
    if (order > Real(0)) return Real(0);
    return std::numeric_limits<Real>::infinity();
  }
  if (bessel_use_series(order, x)) {
    return bessel_series_prefactor(order, x) * bessel_reduced_series(order, x);
  }
  return bessel_j_miller(order, x);
}

// Gamma(order+1) (2/x)^order J_order(x), finite at x = 0 with value 1.
template <class Real>
Real bessel_j_reduced_impl(const Real& order, const Real& x) {
  using std::pow;
  if (!(order > Real(-1))) throw std::domain_error("j_small: order must exceed -1");
  if (!(x >= Real(0))) throw std::domain_error("j_small: argument must be non-negative");
  if (x == Real(0)) return Real(1);
  if (bessel_use_series(order, x)) return bessel_reduced_series(order, x);
  return real_gamma(Real(order + 1)) * pow(2 / x, order) * bessel_j_miller(order, x);
}

// sqrt(x) J_order(x).
template <class Real>
Real bessel_j_script_impl(const Real& order, const Real& x) {
  using std::pow;
  using std::sqrt;
  if (!(x >= Real(0))) throw std::domain_error("j_script: argument must be non-negative");
  if (x == Real(0)) {
    const Real p = order + Real(0.5);
    if (p > Real(0)) return Real(0);
    if (p == Real(0)) return sqrt(2 / real_pi<Real>());
    return std::numeric_limits<Real>::infinity();
  }
  if (bessel_use_series(order, x)) {
    // x^{1/2} (x/2)^order / Gamma(order+1) * reduced series, kept as one product
    // so that tiny arguments keep full relative accuracy.
    return sqrt(x) * bessel_series_prefactor(order, x) * bessel_reduced_series(order, x);
  }
  return sqrt(x) * bessel_j_miller(order, x);
}

// Integer order of either sign, real argument of either sign.
template <class Real>
Real bessel_jn_impl(int n, const Real& x) {
  using std::abs;
  const int an = n < 0 ? -n : n;
  Real v = bessel_j_impl(Real(an), Real(abs(x)));
  const bool flip = ((n < 0) != (x < Real(0))) && (an % 2 != 0);
  return flip ? Real(-v) : v;
}

}  // namespace diskslep::detail
