#include "diskslep/transforms.hpp"

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "diskslep/detail/real.hpp"
#include "diskslep/detail/transforms_impl.hpp"
#include "diskslep/operators.hpp"
#include "diskslep/orthopoly.hpp"
#include "diskslep/quadrature.hpp"
#include "diskslep/specfun.hpp"

namespace diskslep {

namespace {

using cplx = std::complex<double>;

cplx i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

// Reference points (rho, angle) for fitting a constant, tried in order.
constexpr std::array<std::array<double, 2>, 3> kReferencePoints = {{{1.3, 0.7}, {3.1, 0.7}, {4.7, 0.7}}};
constexpr double kMinReferenceBessel = 1e-3;

enum class Family { disk, gegenbauer };

using CacheKey = std::tuple<int, double, int, int, int>;

class ConstantCache {
 public:
  template <class Compute>
  cplx get(const CacheKey& key, Compute&& compute) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    const cplx value = compute();
    std::lock_guard<std::mutex> lock(mutex_);
    // first writer wins; later computations of the same key are discarded
    return table_.emplace(key, value).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<CacheKey, cplx> table_;
};

ConstantCache& cache() {
  static ConstantCache instance;
  return instance;
}

// Index of the reference point used for a Bessel function of the given order.
std::size_t pick_reference(double order) {
  std::size_t best = 0;
  double best_val = -1.0;
  for (std::size_t i = 0; i < kReferencePoints.size(); ++i) {
    const double v = std::abs(bessel_j(order, kReferencePoints[i][0]));
    if (v >= kMinReferenceBessel) return i;
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  return best;
}

void check_disk_indices(double nu, int n, int m) {
  if (!(nu > -1.0)) throw std::domain_error("disk transform: nu must exceed -1");
  if (n < 0 || m < 0) throw std::domain_error("disk transform: negative index");
}

void check_gegenbauer_indices(double nu, int n, int k) {
  if (!(nu > -0.5)) throw std::domain_error("gegenbauer2d transform: nu must exceed -1/2");
  if (k < 0 || k > n) throw std::domain_error("gegenbauer2d transform: need 0 <= k <= n");
}

}  // namespace

double lemma1_rhs(double alpha, double beta, int n, double x) {
  if (!(alpha > -1.0) || !(beta > -1.0)) throw std::domain_error("lemma1_rhs: alpha and beta must exceed -1");
  return detail::lemma1_rhs_impl<double>(alpha, beta, n, x);
}

double lemma1_lhs(double alpha, double beta, int n, double x, int rule_size) {
  if (!(alpha > -1.0) || !(beta > -1.0)) throw std::domain_error("lemma1_lhs: alpha and beta must exceed -1");
  if (n < 0) throw std::domain_error("lemma1_lhs: n must be non-negative");
  return detail::lemma1_lhs_on_rule<double>(alpha, beta, n, x, radial_rule(rule_size, beta));
}

// ---- disk polynomials ----

cplx disk_transform_paper_constant(double nu, int n, int m) {
  check_disk_indices(nu, n, m);
  const int s = std::min(n, m);
  // Gamma(s+1)/Gamma(nu+s+1) = s! / (Gamma(nu+1) (nu+1)_s)
  const double g = detail::factorial(s) / (gamma_fn(nu + 1.0) * detail::pochhammer(nu + 1.0, s));
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  return sign * (nu + 1.0) * i_pow(n - m) * g;
}

cplx disk_transform_shape(double nu, int n, int m, double rho, double theta) {
  check_disk_indices(nu, n, m);
  if (!(rho > 0.0)) throw std::domain_error("disk transform: rho must be positive");
  return std::pow(2.0 / rho, nu + 1.0) * bessel_j(nu + n + m + 1.0, rho) * std::polar(1.0, (m - n) * theta);
}

cplx disk_transform_quadrature(double nu, int n, int m, double rho, double theta, int n_r, int n_theta) {
  check_disk_indices(nu, n, m);
  const auto rule = disk_rule(n_r, n_theta, nu);
  const DiskPoint y{rho * std::cos(theta), rho * std::sin(theta)};
  // D_{m,n} at (r cos t, r sin t) is disk_poly(m, n, ...)
  const DiskFunction d = [&](double x1, double x2) {
    return disk_poly(m, n, nu, std::min(1.0, std::hypot(x1, x2)), std::atan2(x2, x1));
  };
  return apply_weighted_fourier(nu, 1.0, d, y, rule);
}

cplx disk_transform_derived_constant(double nu, int n, int m) {
  check_disk_indices(nu, n, m);
  return cache().get({static_cast<int>(Family::disk), nu, n, m, 0}, [&] {
    const auto& ref = kReferencePoints[pick_reference(nu + n + m + 1.0)];
    return disk_transform_quadrature(nu, n, m, ref[0], ref[1]) / disk_transform_shape(nu, n, m, ref[0], ref[1]);
  });
}

ClosedFormResult disk_transform_closed(double nu, int n, int m, double rho, double theta, ConstantSource source) {
  ClosedFormResult out;
  out.constant_source = source;
  const cplx paper = disk_transform_paper_constant(nu, n, m);
  if (source == ConstantSource::paper) {
    out.constant = paper;
  } else {
    out.constant = disk_transform_derived_constant(nu, n, m);
    out.discrepancy_log = paper / out.constant;
  }
  out.value = out.constant * disk_transform_shape(nu, n, m, rho, theta);
  return out;
}

// ---- two-variable Gegenbauer polynomials ----

cplx gegenbauer2d_transform_paper_constant(double nu, int n, int k) {
  check_gegenbauer_indices(nu, n, k);
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const double mag = std::pow(2.0, nu + 1.0) * gamma_fn(nu + 1.0) * std::numbers::pi * detail::pochhammer(2.0 * nu + 1.0, n) /
                     detail::factorial(2 * n);
  return sign * mag / i_pow(k);
}

cplx gegenbauer2d_transform_shape(double nu, int n, int k, double rho, double phi, GegenbauerShape shape) {
  check_gegenbauer_indices(nu, n, k);
  if (!(rho > 0.0)) throw std::domain_error("gegenbauer2d transform: rho must be positive");
  const double bessel = bessel_j(nu + n + 1.0, rho);
  const double angular = gegenbauer_c(n - k, nu + k + 1.0, std::cos(phi));
  if (shape == GegenbauerShape::printed) return std::pow(rho, k - n) * bessel * angular;
  return std::pow(rho, -(nu + 1.0)) * bessel * angular * std::pow(std::sin(phi), k);
}

cplx gegenbauer2d_transform_quadrature(double nu, int n, int k, double rho, double phi, int n_r, int n_theta) {
  check_gegenbauer_indices(nu, n, k);
  const auto rule = disk_rule(n_r, n_theta, nu);
  const DiskPoint y{rho * std::cos(phi), rho * std::sin(phi)};
  const DiskFunction p = [&](double x1, double x2) { return cplx(gegenbauer2d(n, k, nu + 0.5, x1, x2), 0.0); };
  return apply_weighted_fourier(nu, 1.0, p, y, rule);
}

cplx gegenbauer2d_transform_derived_constant(double nu, int n, int k, GegenbauerShape shape) {
  check_gegenbauer_indices(nu, n, k);
  return cache().get({static_cast<int>(Family::gegenbauer), nu, n, k, static_cast<int>(shape)}, [&] {
    const auto& ref = kReferencePoints[pick_reference(nu + n + 1.0)];
    return gegenbauer2d_transform_quadrature(nu, n, k, ref[0], ref[1]) /
           gegenbauer2d_transform_shape(nu, n, k, ref[0], ref[1], shape);
  });
}

ClosedFormResult gegenbauer2d_transform_closed(double nu, int n, int k, double rho, double phi, ConstantSource source,
                                               GegenbauerShape shape) {
  ClosedFormResult out;
  out.constant_source = source;
  const cplx paper = gegenbauer2d_transform_paper_constant(nu, n, k);
  if (source == ConstantSource::paper) {
    out.constant = paper;
  } else {
    out.constant = gegenbauer2d_transform_derived_constant(nu, n, k, shape);
    out.discrepancy_log = paper / out.constant;
  }
  out.value = out.constant * gegenbauer2d_transform_shape(nu, n, k, rho, phi, shape);
  return out;
}

Matrix gegenbauer2d_gram(double nu, int max_degree, double weight_nu, int n_r, int n_theta) {
  if (max_degree < 0) throw std::domain_error("gegenbauer2d_gram: negative degree");
  std::vector<std::array<int, 2>> idx;
  for (int n = 0; n <= max_degree; ++n) {
    for (int k = 0; k <= n; ++k) idx.push_back({n, k});
  }
  const int size = static_cast<int>(idx.size());
  const auto nodes = disk_rule(n_r, n_theta, weight_nu).flatten();
  std::vector<std::vector<double>> values(size, std::vector<double>(nodes.size()));
  for (int a = 0; a < size; ++a) {
    for (std::size_t q = 0; q < nodes.size(); ++q) {
      values[a][q] = gegenbauer2d(idx[a][0], idx[a][1], nu + 0.5, nodes[q].x, nodes[q].y);
    }
  }
  Matrix g(size, size);
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b <= a; ++b) {
      double s = 0.0;
      for (std::size_t q = 0; q < nodes.size(); ++q) s += nodes[q].weight * values[a][q] * values[b][q];
      g(a, b) = s;
      g(b, a) = s;
    }
  }
  return g;
}

// ---- one-dimensional Gegenbauer integrals ----

cplx poisson_integral_quadrature(double nu, int n, double x, int rule_size) {
  if (!(nu > -0.5)) throw std::domain_error("poisson_integral: nu must exceed -1/2");
  const auto rule = gauss_jacobi(rule_size, nu - 0.5, nu - 0.5);
  cplx s = 0.0;
  for (int i = 0; i < rule.size(); ++i) {
    const double u = rule.nodes[i];
    s += rule.weights[i] * std::polar(1.0, x * u) * gegenbauer_c(n, nu, u);
  }
  return s;
}

cplx poisson_integral_closed(double nu, int n, double x, int shift) {
  if (!(nu > -0.5)) throw std::domain_error("poisson_integral: nu must exceed -1/2");
  if (!(x > 0.0)) throw std::domain_error("poisson_integral: x must be positive");
  const double mag = gamma_fn(nu + 0.5) * std::sqrt(std::numbers::pi) * detail::pochhammer(2.0 * nu, n) /
                     (detail::factorial(n) * std::pow(x / 2.0, nu));
  // 1/(-i)^n = i^n
  return i_pow(n) * mag * bessel_j(nu + n + shift, x);
}

cplx finite_integral_quadrature(double nu, int n, double r, double s, int rule_size) {
  if (!(nu > -0.5)) throw std::domain_error("finite_integral: nu must exceed -1/2");
  const auto rule = gauss_jacobi(rule_size, nu - 0.5, nu - 0.5);
  const double mu = nu - 0.5;
  const double scale = 1.0 / (std::pow(2.0, mu) * gamma_fn(mu + 1.0));
  cplx sum = 0.0;
  for (int i = 0; i < rule.size(); ++i) {
    const double u = rule.nodes[i];
    const double z = r * std::sqrt(1.0 - u * u) * std::sin(s);
    // J_mu(z)/z^mu = j_mu(z) / (2^mu Gamma(mu+1)), also for z < 0 (even in z)
    const double bessel_part = j_small(mu, std::abs(z)) * scale;
    sum += rule.weights[i] * bessel_part * std::polar(1.0, r * u * std::cos(s)) * gegenbauer_c(n, nu, u);
  }
  return sum;
}

cplx finite_integral_closed(double nu, int n, double r, double s) {
  if (!(nu > -0.5)) throw std::domain_error("finite_integral: nu must exceed -1/2");
  if (!(r > 0.0)) throw std::domain_error("finite_integral: r must be positive");
  return std::sqrt(2.0 * std::numbers::pi) * i_pow(n) * bessel_j(nu + n, r) / std::pow(r, nu) *
         gegenbauer_c(n, nu, std::cos(s));
}

}  // namespace diskslep
