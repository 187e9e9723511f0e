#pragma once

// Scalar helpers shared by the templated numerical kernels. The library
// itself only instantiates them with double; extended-precision types
// (boost::multiprecision) are used by the verification oracles.

#include <cmath>
#include <limits>

namespace diskslep {

double gamma_fn(double x);

namespace detail {

template <class Real>
Real real_gamma(const Real& x) {
  using std::tgamma;
  return Real(tgamma(x));
}

inline double real_gamma(double x) { return gamma_fn(x); }

template <class Real>
Real real_pi() {
  using std::acos;
  return Real(acos(Real(-1)));
}

template <class Real>
Real real_eps() {
  return std::numeric_limits<Real>::epsilon();
}

template <class Real>
int real_digits10() {
  return std::numeric_limits<Real>::digits10;
}

// Rising factorial (a)_n for non-negative integer n.
template <class Real>
Real pochhammer(const Real& a, int n) {
  Real p(1);
  for (int j = 0; j < n; ++j) p *= (a + j);
  return p;
}

inline double factorial(int n) {
  double f = 1.0;
  for (int j = 2; j <= n; ++j) f *= j;
  return f;
}

}  // namespace detail
}  // namespace diskslep
