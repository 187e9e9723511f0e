#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "diskslep/linalg.hpp"

namespace diskslep::detail {

template <class Real>
Real pythag(const Real& a, const Real& b) {
  using std::abs;
  using std::sqrt;
  const Real aa = abs(a);
  const Real ab = abs(b);
  if (aa > ab) {
    const Real q = ab / aa;
    return aa * sqrt(1 + q * q);
  }
  if (ab == Real(0)) return Real(0);
  const Real q = aa / ab;
  return ab * sqrt(1 + q * q);
}

// Implicit QL with Wilkinson-type shifts. On entry d is the diagonal and e the
// off-diagonal (e[i] couples i and i+1; e[n-1] is ignored). On exit d holds the
// eigenvalues in no particular order. If z is non-null it must have n columns;
// its columns receive the same rotations, so starting from the identity gives
// eigenvectors and starting from a single row e_0^T gives their first entries.
template <class Real>
void tql_implicit(std::vector<Real>& d, std::vector<Real>& e, BasicMatrix<Real>* z) {
  using std::abs;
  const int n = static_cast<int>(d.size());
  if (n == 0) return;
  e.resize(n);
  e[n - 1] = Real(0);
  const Real eps = std::numeric_limits<Real>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const Real dd = abs(d[m]) + abs(d[m + 1]);
        if (abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) throw ConvergenceError("tridiagonal QL: no convergence after 60 iterations");
        Real g = (d[l + 1] - d[l]) / (2 * e[l]);
        Real r = pythag(g, Real(1));
        g = d[m] - d[l] + e[l] / (g + (g >= Real(0) ? abs(r) : Real(-abs(r))));
        Real s(1);
        Real c(1);
        Real p(0);
        int i = m - 1;
        for (; i >= l; --i) {
          Real f = s * e[i];
          const Real b = c * e[i];
          r = pythag(f, g);
          e[i + 1] = r;
          if (r == Real(0)) {
            d[i + 1] -= p;
            e[m] = Real(0);
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (z != nullptr) {
            for (int k = 0; k < z->rows; ++k) {
              f = (*z)(k, i + 1);
              (*z)(k, i + 1) = s * (*z)(k, i) + c * f;
              (*z)(k, i) = c * (*z)(k, i) - s * f;
            }
          }
        }
        if (r == Real(0) && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = Real(0);
      }
    } while (m != l);
  }
}

// Householder reduction of a symmetric matrix to tridiagonal form. On exit d
// and e (e[i] couples i and i+1) describe the tridiagonal matrix; when
// want_vectors is set, a holds the orthogonal transformation, otherwise its
// contents are destroyed.
template <class Real>
void householder_tridiagonalize(BasicMatrix<Real>& a, std::vector<Real>& d, std::vector<Real>& e, bool want_vectors) {
  using std::abs;
  using std::sqrt;
  const int n = a.rows;
  d.assign(n, Real(0));
  std::vector<Real> sub(n, Real(0));  // sub[i] couples i-1 and i
  for (int i = n - 1; i > 0; --i) {
    const int l = i - 1;
    Real h(0);
    Real scale(0);
    if (l > 0) {
      for (int k = 0; k < i; ++k) scale += abs(a(i, k));
      if (scale == Real(0)) {
        sub[i] = a(i, l);
      } else {
        for (int k = 0; k < i; ++k) {
          a(i, k) /= scale;
          h += a(i, k) * a(i, k);
        }
        Real f = a(i, l);
        Real g = (f >= Real(0)) ? Real(-sqrt(h)) : Real(sqrt(h));
        sub[i] = scale * g;
        h -= f * g;
        a(i, l) = f - g;
        f = Real(0);
        for (int j = 0; j < i; ++j) {
          if (want_vectors) a(j, i) = a(i, j) / h;
          g = Real(0);
          for (int k = 0; k <= j; ++k) g += a(j, k) * a(i, k);
          for (int k = j + 1; k < i; ++k) g += a(k, j) * a(i, k);
          sub[j] = g / h;
          f += sub[j] * a(i, j);
        }
        const Real hh = f / (h + h);
        for (int j = 0; j < i; ++j) {
          f = a(i, j);
          g = sub[j] - hh * f;
          sub[j] = g;
          for (int k = 0; k <= j; ++k) a(j, k) -= (f * sub[k] + g * a(i, k));
        }
      }
    } else {
      sub[i] = a(i, l);
    }
    d[i] = h;
  }
  if (want_vectors) d[0] = Real(0);
  sub[0] = Real(0);
  for (int i = 0; i < n; ++i) {
    if (want_vectors) {
      if (d[i] != Real(0)) {
        for (int j = 0; j < i; ++j) {
          Real g(0);
          for (int k = 0; k < i; ++k) g += a(i, k) * a(k, j);
          for (int k = 0; k < i; ++k) a(k, j) -= g * a(k, i);
        }
      }
      d[i] = a(i, i);
      a(i, i) = Real(1);
      for (int j = 0; j < i; ++j) {
        a(j, i) = Real(0);
        a(i, j) = Real(0);
      }
    } else {
      d[i] = a(i, i);
    }
  }
  e.assign(n, Real(0));
  for (int i = 1; i < n; ++i) e[i - 1] = sub[i];
}

template <class Real>
void fix_sign(std::vector<Real>& v) {
  using std::abs;
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (abs(v[i]) > abs(v[best])) best = i;
  }
  if (!v.empty() && v[best] < Real(0)) {
    for (auto& x : v) x = -x;
  }
}

// Eigenvalues of a dense symmetric matrix, sorted by descending magnitude.
template <class Real>
std::vector<Real> dense_sym_values(BasicMatrix<Real> a) {
  using std::abs;
  std::vector<Real> d;
  std::vector<Real> e;
  householder_tridiagonalize(a, d, e, false);
  tql_implicit<Real>(d, e, nullptr);
  std::sort(d.begin(), d.end(), [](const Real& x, const Real& y) { return abs(x) > abs(y); });
  return d;
}

// Twisted factorization T - sigma = N_r D_r N_r^T and the null vector of its
// twist index. a: diagonal, b: off-diagonal.
template <class Real>
std::vector<Real> twisted_vector(const std::vector<Real>& a, const std::vector<Real>& b, const Real& sigma,
                                 const Real& tiny, Real* gamma_out) {
  using std::abs;
  const int n = static_cast<int>(a.size());
  std::vector<Real> dp(n);
  std::vector<Real> dm(n);
  auto guard = [&](Real v) { return (v == Real(0)) ? tiny : v; };
  dp[0] = guard(a[0] - sigma);
  for (int k = 1; k < n; ++k) dp[k] = guard(a[k] - sigma - b[k - 1] * b[k - 1] / dp[k - 1]);
  dm[n - 1] = guard(a[n - 1] - sigma);
  for (int k = n - 2; k >= 0; --k) dm[k] = guard(a[k] - sigma - b[k] * b[k] / dm[k + 1]);
  int r = 0;
  Real best = std::numeric_limits<Real>::infinity();
  Real gamma_r(0);
  for (int k = 0; k < n; ++k) {
    const Real g = dp[k] + dm[k] - (a[k] - sigma);
    if (abs(g) < best) {
      best = abs(g);
      r = k;
      gamma_r = g;
    }
  }
  std::vector<Real> z(n, Real(0));
  z[r] = Real(1);
  for (int k = r - 1; k >= 0; --k) z[k] = -b[k] * z[k + 1] / dp[k];
  for (int k = r + 1; k < n; ++k) z[k] = -b[k - 1] * z[k - 1] / dm[k];
  if (gamma_out != nullptr) *gamma_out = gamma_r;
  return z;
}

// Refines (value, vector) for an isolated eigenvalue close to `shift`.
template <class Real>
std::pair<Real, std::vector<Real>> twisted_eigenpair_impl(const std::vector<Real>& a, const std::vector<Real>& b,
                                                          Real shift, int sweeps, const Real& norm) {
  using std::sqrt;
  const Real tiny = std::numeric_limits<Real>::epsilon() * (norm > Real(0) ? norm : Real(1)) * Real(1e-3);
  std::vector<Real> z;
  for (int s = 0; s < std::max(sweeps, 1); ++s) {
    Real gamma(0);
    z = twisted_vector(a, b, shift, tiny, &gamma);
    Real nrm2(0);
    for (const auto& v : z) nrm2 += v * v;
    shift += gamma / nrm2;
  }
  // Final vector at the corrected shift.
  z = twisted_vector(a, b, shift, tiny, static_cast<Real*>(nullptr));
  Real nrm2(0);
  for (const auto& v : z) nrm2 += v * v;
  const Real inv = 1 / sqrt(nrm2);
  for (auto& v : z) v *= inv;
  fix_sign(z);
  return {shift, z};
}

}  // namespace diskslep::detail
