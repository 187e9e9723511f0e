#include "diskslep/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "diskslep/detail/operators_impl.hpp"
#include "diskslep/specfun.hpp"

namespace diskslep {

namespace {

struct Derivatives {
  double d1;
  double d2;
};

Derivatives central5(const RadialFunction& f, double x, double h) {
  const double fm2 = f(x - 2 * h);
  const double fm1 = f(x - h);
  const double f0 = f(x);
  const double fp1 = f(x + h);
  const double fp2 = f(x + 2 * h);
  return {(fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h), (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h)};
}

// 5-point differences at h and 2h, combined to cancel the h^4 term.
Derivatives richardson_derivatives(const RadialFunction& f, double x, const char* who) {
  const double h = kDifferenceStep;
  if (!(x - 4 * h > 0.0) || !(x + 4 * h < 1.0)) {
    throw std::domain_error(std::string(who) + ": difference stencil leaves (0,1)");
  }
  const auto fine = central5(f, x, h);
  const auto coarse = central5(f, x, 2 * h);
  return {(16 * fine.d1 - coarse.d1) / 15, (16 * fine.d2 - coarse.d2) / 15};
}

void require_disk_rule(const DiskRule& rule, double nu, const char* who) {
  if (std::abs(rule.nu - nu) > 1e-14 * (1 + std::abs(nu))) {
    throw std::invalid_argument(std::string(who) + ": disk rule was built for a different nu");
  }
}

std::complex<double> fourier(double nu, double c, const DiskFunction& f, const DiskPoint& y, const DiskRule& rule,
                             double sign, const char* who) {
  require_disk_rule(rule, nu, who);
  return rule.integrate([&](double x1, double x2) {
    return std::polar(1.0, sign * c * (x1 * y.x + x2 * y.y)) * f(x1, x2);
  });
}

}  // namespace

double DiskPoint::norm() const { return std::hypot(x, y); }

PolarPoint DiskPoint::to_polar() const { return {norm(), std::atan2(y, x)}; }

DiskPoint PolarPoint::to_cartesian() const { return {r * std::cos(theta), r * std::sin(theta)}; }

double apply_finite_hankel(double nu, double c, int N, const RadialFunction& f, double x, const QuadratureRule& rule) {
  return detail::apply_finite_hankel_impl<double>(nu, c, N, f, x, rule);
}

double apply_classical_hankel(double c, int N, const RadialFunction& f, double x, const QuadratureRule& rule) {
  detail::require_radial_rule(rule, 0.0, "apply_classical_hankel");
  double s = 0.0;
  for (int i = 0; i < rule.size(); ++i) {
    const double z = c * x * rule.nodes[i];
    s += rule.weights[i] * bessel_j(N, z) * std::sqrt(z) * f(rule.nodes[i]);
  }
  return s;
}

double apply_L_jet(double nu, double c, int N, const RadialJet& f, double x) {
  return (1 - x * x) * f.d2 - 2 * (nu + 1) * x * f.d1 + ((0.25 - static_cast<double>(N) * N) / (x * x) - c * c * x * x) * f.value;
}

double apply_L(double nu, double c, int N, const RadialFunction& f, double x) {
  const auto d = richardson_derivatives(f, x, "apply_L");
  return apply_L_jet(nu, c, N, {f(x), d.d1, d.d2}, x);
}

double apply_L_classical(double c, int N, const RadialFunction& f, double x) {
  const auto d = richardson_derivatives(f, x, "apply_L_classical");
  const double y = f(x);
  return (1 - x * x) * d.d2 - 2 * x * d.d1 + ((0.25 - static_cast<double>(N) * N) / (x * x) - c * c * x * x) * y;
}

std::vector<NystromMode> nystrom_hankel_eigs(double nu, double c, int N, int rule_size, int count) {
  if (count < 1) throw std::invalid_argument("nystrom_hankel_eigs: count must be positive");
  if (rule_size < 4 * count) throw std::invalid_argument("nystrom_hankel_eigs: rule_size must be at least 4*count");
  const auto rule = radial_rule(rule_size, nu);
  const Matrix m = detail::nystrom_matrix(c, N, rule);
  const auto pairs = dense_sym_eigen(m, count);
  std::vector<NystromMode> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) {
    NystromMode mode;
    mode.value = p.value;
    mode.nodes = rule.nodes;
    mode.phi.resize(rule_size);
    for (int i = 0; i < rule_size; ++i) mode.phi[i] = p.vector[i] / std::sqrt(rule.weights[i]);
    out.push_back(std::move(mode));
  }
  return out;
}

double kernel_K(double nu, double c, const DiskPoint& y, const DiskPoint& z) {
  return j_small(nu + 1, c * std::hypot(y.x - z.x, y.y - z.y));
}

std::complex<double> apply_weighted_fourier(double nu, double c, const DiskFunction& f, const DiskPoint& y,
                                            const DiskRule& rule) {
  return fourier(nu, c, f, y, rule, 1.0, "apply_weighted_fourier");
}

std::complex<double> apply_adjoint_fourier(double nu, double c, const DiskFunction& f, const DiskPoint& y,
                                           const DiskRule& rule) {
  return fourier(nu, c, f, y, rule, -1.0, "apply_adjoint_fourier");
}

std::complex<double> disk_inner(const DiskFunction& f, const DiskFunction& g, const DiskRule& rule) {
  return rule.integrate([&](double x, double y) { return f(x, y) * std::conj(g(x, y)); });
}

double radial_inner(const RadialFunction& f, const RadialFunction& g, const QuadratureRule& rule) {
  if (rule.kind != WeightKind::radial) throw std::invalid_argument("radial_inner: rule must be a radial rule");
  return rule.integrate([&](double t) { return f(t) * g(t); });
}

}  // namespace diskslep
