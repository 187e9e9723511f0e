#include "diskslep/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "diskslep/detail/bessel_impl.hpp"

namespace diskslep {

namespace {

// Lanczos approximation, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// Largest x with Gamma(x) finite in double precision.
constexpr double kGammaOverflow = 171.6243769563027;

double lanczos_gamma(double x) {
  // valid for x >= 0.5
  const double z = x - 1.0;
  double series = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) series += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  const double t = z + kLanczosG + 0.5;
  // t^{z+1/2} split in two factors to stay finite up to the overflow limit
  const double half_power = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half_power * (half_power * std::exp(-t)) * series;
}

}  // namespace

double gamma_fn(double x) {
  if (std::isnan(x)) throw std::domain_error("gamma_fn: NaN argument");
  if (x <= 0.0 && x == std::floor(x)) throw std::domain_error("gamma_fn: pole at non-positive integer");
  if (x > kGammaOverflow) throw std::overflow_error("gamma_fn: result overflows double");

  if (x == std::floor(x) && x <= 23.0) {
    double f = 1.0;
    for (int k = 2; k < static_cast<int>(x); ++k) f *= k;
    return f;
  }
  if (x < 0.5) {
    // reflection; sin(pi x) evaluated on the reduced argument
    const double r = x - std::round(x);
    const double s = std::sin(std::numbers::pi * r) * ((static_cast<long long>(std::round(x)) % 2 == 0) ? 1.0 : -1.0);
    return std::numbers::pi / (s * lanczos_gamma(1.0 - x));
  }
  return lanczos_gamma(x);
}

double bessel_j(double order, double x) { return detail::bessel_j_impl(order, x); }

double bessel_jn(int n, double x) { return detail::bessel_jn_impl(n, x); }

double j_small(double nu, double x) { return detail::bessel_j_reduced_impl(nu, x); }

double j_script(double nu, double x) { return detail::bessel_j_script_impl(nu, x); }

}  // namespace diskslep
