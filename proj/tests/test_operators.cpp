#include <cmath>
#include <complex>
#include <numbers>

#include "diskslep/operators.hpp"
#include "diskslep/orthopoly.hpp"
#include "diskslep/quadrature.hpp"
#include "diskslep/specfun.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace diskslep;
using cd = std::complex<double>;

namespace {

// Jc_a(z) = sqrt(z) J_a(z) from the series oracle.
double jc(double a, double z) { return std::sqrt(z) * oracle::bessel_j(a, z); }

// f(t) = t^{N+1/2} g(t^2) with g(s) = 1 + p s + q s^2, and its derivatives.
struct Trial {
  int N;
  double p;
  double q;

  double value(double t) const { return std::pow(t, N + 0.5) * g(t * t); }
  RadialJet jet(double t) const {
    const double s = t * t;
    const double e = N + 0.5;
    const double g0 = g(s);
    const double g1 = 2 * t * (p + 2 * q * s);
    const double g2 = 2 * (p + 2 * q * s) + 8 * q * s;
    const double u = std::pow(t, e);
    const double u1 = e * std::pow(t, e - 1);
    const double u2 = e * (e - 1) * std::pow(t, e - 2);
    return {u * g0, u1 * g0 + u * g1, u2 * g0 + 2 * u1 * g1 + u * g2};
  }
  double g(double s) const { return 1 + p * s + q * s * s; }
};

}  // namespace

TEST_CASE("point conversions") {
  const DiskPoint p{0.3, -0.4};
  CHECK(p.norm() == doctest::Approx(0.5));
  const auto polar = p.to_polar();
  CHECK(polar.r == doctest::Approx(0.5));
  const auto back = polar.to_cartesian();
  CHECK(back.x == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(back.y == doctest::Approx(-0.4).epsilon(1e-15));
}

TEST_CASE("finite Hankel operator matches the classical form at nu = 0") {
  const auto rule = radial_rule(60, 0.0);
  auto f = [](double t) { return std::pow(t, 2.5) * (1 - t * t); };
  for (int N : {0, 2, 5}) {
    for (double x : {0.1, 0.5, 0.93}) {
      const double a = apply_finite_hankel(0.0, 4.0, N, f, x, rule);
      const double b = apply_classical_hankel(4.0, N, f, x, rule);
      CHECK(a == doctest::Approx(b).epsilon(1e-13));
    }
  }
}

TEST_CASE("finite Hankel operator on the T basis") {
  // T_{N,n} = kappa t^{N+1/2} P_n^{(N,nu)}(1-2t^2), kappa = N! n!/(N+n)!, and at c = 1
  // H[t^{N+1/2} P_n] = 2^nu Gamma(nu+n+1)/n! Jc_{N+nu+2n+1}(x) / x^{nu+1}
  for (double nu : {0.0, 0.5, 1.0, 2.5}) {
    const auto rule = radial_rule(60, nu);
    for (int N : {0, 1, 3}) {
      for (int n : {0, 2, 4}) {
        auto f = [&](double t) { return t_basis({N, n, nu}, t); };
        for (double x : {0.6, 0.9}) {
          const double lhs = apply_finite_hankel(nu, 1.0, N, f, x, rule);
          const double kappa = std::tgamma(N + 1) * std::tgamma(n + 1) / std::tgamma(N + n + 1);
          const double rhs = kappa * std::pow(2.0, nu) * std::tgamma(nu + n + 1) / std::tgamma(n + 1) *
                             jc(N + nu + 2 * n + 1, x) / std::pow(x, nu + 1);
          CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs) + 1e-14);
        }
      }
    }
  }
}

TEST_CASE("finite Hankel operator at small c") {
  // Jc_N(z) ~ z^{N+1/2} / (2^N N!)
  const double nu = 1.5;
  const auto rule = radial_rule(40, nu);
  auto f = [](double t) { return std::sqrt(t) * t * (2 - t); };
  for (int N : {0, 1, 2}) {
    const double c = 1e-4;
    const double x = 0.7;
    const double moment = oracle::radial_integral([&](double t) { return std::pow(t, N + 0.5) * f(t); }, nu, 200);
    const double approx = std::pow(c * x, N + 0.5) / (std::pow(2.0, N) * std::tgamma(N + 1)) * moment;
    CHECK(apply_finite_hankel(nu, c, N, f, x, rule) == doctest::Approx(approx).epsilon(1e-7));
  }
}

TEST_CASE("apply_L examples") {
  for (double nu : {0.0, 1.0, 2.5}) {
    for (int N : {0, 2}) {
      for (int n : {0, 1, 3}) {
        auto f = [&](double t) { return t_basis({N, n, nu}, t); };
        for (double x : {0.2, 0.5, 0.8}) {
          const double expect = -((N + 2 * n + 0.5) * (N + 2 * nu + 2 * n + 1.5)) * f(x);
          CHECK(std::abs(apply_L(nu, 0.0, N, f, x) - expect) <= 1e-6 * (1 + std::abs(expect)));
        }
      }
    }
  }
  auto root = [](double t) { return std::sqrt(t); };
  CHECK(apply_L(0.0, 0.0, 0, root, 0.5) == doctest::Approx(-0.75 * std::sqrt(0.5)).epsilon(1e-8));
  CHECK(apply_L(1.0, 0.0, 0, root, 0.5) == doctest::Approx(-1.75 * std::sqrt(0.5)).epsilon(1e-8));
}

TEST_CASE("apply_L with c: T basis picks up -c^2 x^2 T") {
  const double nu = 0.5;
  const double c = 3.0;
  auto f = [&](double t) { return t_basis({1, 2, nu}, t); };
  const double x = 0.45;
  const double expect = -(1 + 4 + 0.5) * (1 + 2 * nu + 4 + 1.5) * f(x) - c * c * x * x * f(x);
  CHECK(apply_L(nu, c, 1, f, x) == doctest::Approx(expect).epsilon(1e-7));
}

TEST_CASE("apply_L at nu = 0 equals the classical operator") {
  auto f = [](double t) { return std::pow(t, 1.5) * std::cos(t); };
  for (double x : {0.1, 0.5, 0.9}) {
    CHECK(apply_L(0.0, 2.0, 1, f, x) == doctest::Approx(apply_L_classical(2.0, 1, f, x)).epsilon(1e-14));
  }
}

TEST_CASE("apply_L agrees with the analytic jet") {
  const Trial tr{2, -1.3, 0.4};
  auto f = [&](double t) { return tr.value(t); };
  for (double nu : {0.0, 1.5}) {
    for (double x : {0.15, 0.5, 0.85}) {
      const double a = apply_L(nu, 5.0, 2, f, x);
      const double b = apply_L_jet(nu, 5.0, 2, tr.jet(x), x);
      CHECK(std::abs(a - b) <= 1e-7 * (1 + std::abs(b)));
    }
  }
}

TEST_CASE("apply_L stencil domain") {
  auto f = [](double t) { return t; };
  CHECK_THROWS_AS(apply_L(0.0, 1.0, 0, f, 2e-4), std::domain_error);
  CHECK_THROWS_AS(apply_L(0.0, 1.0, 0, f, 1 - 2e-4), std::domain_error);
  CHECK_NOTHROW(apply_L(0.0, 1.0, 0, f, 5e-4));
}

TEST_CASE("L is symmetric on functions of the right shape") {
  const double nu = 0.7;
  const double c = 2.0;
  const int N = 1;
  const Trial f{N, 0.5, -0.8};
  const Trial g{N, -2.0, 0.3};
  const auto rule = radial_rule(40, nu);
  const double a = radial_inner([&](double t) { return apply_L_jet(nu, c, N, f.jet(t), t); },
                                [&](double t) { return g.value(t); }, rule);
  const double b = radial_inner([&](double t) { return f.value(t); },
                                [&](double t) { return apply_L_jet(nu, c, N, g.jet(t), t); }, rule);
  CHECK(a == doctest::Approx(b).epsilon(1e-10));
}

TEST_CASE("H commutes with L") {
  for (double nu : {0.0, 1.0}) {
    const double c = 3.0;
    const int N = 1;
    const Trial f{N, 1.2, -0.7};
    const auto rule = radial_rule(60, nu);
    for (double x : {0.3, 0.6, 0.85}) {
      const double hl = apply_finite_hankel(nu, c, N, [&](double t) { return apply_L_jet(nu, c, N, f.jet(t), t); }, x, rule);
      const double lh = apply_L(nu, c, N, [&](double t) { return apply_finite_hankel(nu, c, N, [&](double s) { return f.value(s); }, t, rule); }, x);
      CHECK(std::abs(hl - lh) <= 1e-6 * (1 + std::abs(hl)));
    }
  }
}

TEST_CASE("Nystrom discretization") {
  // small c: rank-one limit, top value sqrt(c)/(2(nu+1))
  for (double nu : {0.0, 1.0}) {
    const auto modes = nystrom_hankel_eigs(nu, 1e-3, 0, 40, 2);
    CHECK(modes[0].value == doctest::Approx(std::sqrt(1e-3) / (2 * (nu + 1))).epsilon(1e-5));
    CHECK(std::abs(modes[1].value) < 1e-6 * modes[0].value);
  }
  const auto modes = nystrom_hankel_eigs(1.0, 5.0, 1, 60, 4);
  const auto rule = radial_rule(60, 1.0);
  for (std::size_t i = 0; i < modes.size(); ++i) {
    double norm = 0.0;
    for (int k = 0; k < rule.size(); ++k) norm += rule.weights[k] * modes[i].phi[k] * modes[i].phi[k];
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
    if (i > 0) CHECK(std::abs(modes[i].value) <= std::abs(modes[i - 1].value));
    // the eigenfunction reproduces itself under H at a node
    const int k = rule.size() / 2;
    double h = 0.0;
    for (int j = 0; j < rule.size(); ++j) h += rule.weights[j] * jc(1, 5.0 * rule.nodes[k] * rule.nodes[j]) * modes[i].phi[j];
    CHECK(h == doctest::Approx(modes[i].value * modes[i].phi[k]).epsilon(1e-10));
  }
  CHECK_THROWS_AS(nystrom_hankel_eigs(0.0, 1.0, 0, 7, 2), std::invalid_argument);
}

TEST_CASE("kernel_K examples") {
  const DiskPoint o{0.0, 0.0};
  const DiskPoint e{1.0, 0.0};
  CHECK(kernel_K(1.0, 3.0, e, e) == doctest::Approx(1.0));
  // j_2(3) = Gamma(3) (2/3)^2 J_2(3)
  CHECK(kernel_K(1.0, 3.0, o, e) == doctest::Approx(2 * 4.0 / 9.0 * oracle::bessel_j(2, 3.0)).epsilon(1e-13));
  const DiskPoint a{0.2, -0.5};
  const DiskPoint b{-0.6, 0.1};
  CHECK(kernel_K(0.5, 7.0, a, b) == doctest::Approx(kernel_K(0.5, 7.0, b, a)));
}

TEST_CASE("weighted Fourier transform of the constant") {
  for (double nu : {0.0, 1.0, 2.5}) {
    const auto rule = disk_rule(40, 64, nu);
    for (const DiskPoint y : {DiskPoint{0.3, 0.4}, DiskPoint{-0.8, 0.1}}) {
      const cd v = apply_weighted_fourier(nu, 6.0, [](double, double) { return cd(1.0); }, y, rule);
      CHECK(v.real() == doctest::Approx(j_small(nu + 1, 6.0 * y.norm())).epsilon(1e-12));
      CHECK(std::abs(v.imag()) <= 1e-14);
    }
  }
  CHECK_THROWS_AS(apply_weighted_fourier(1.0, 1.0, [](double, double) { return cd(1.0); }, {0, 0}, disk_rule(4, 8, 0.0)),
                  std::invalid_argument);
}

TEST_CASE("Fourier adjointness and composition") {
  const double nu = 0.5;
  const double c = 4.0;
  const auto rule = disk_rule(14, 36, nu);
  DiskFunction f = [](double x, double y) { return cd(1 + x * y, x - 0.5 * y * y); };
  DiskFunction g = [](double x, double y) { return cd(x * x - y, 0.3 + y); };
  const cd lhs = disk_inner([&](double x, double y) { return apply_weighted_fourier(nu, c, f, {x, y}, rule); }, g, rule);
  const cd rhs = disk_inner(f, [&](double x, double y) { return apply_adjoint_fourier(nu, c, g, {x, y}, rule); }, rule);
  CHECK(std::abs(lhs - rhs) <= 1e-13);

  // F* F f (y) = int K(y, z) f(z) w(z) dz
  const DiskPoint y{0.25, -0.35};
  const auto big = disk_rule(30, 64, nu);
  const cd ff = apply_adjoint_fourier(nu, c, [&](double x1, double x2) { return apply_weighted_fourier(nu, c, f, {x1, x2}, big); }, y, big);
  const cd kf = big.integrate([&](double z1, double z2) { return kernel_K(nu, c, y, {z1, z2}) * f(z1, z2); });
  CHECK(std::abs(ff - kf) <= 1e-11);
}

TEST_CASE("Fourier of a separable function reduces to the radial Hankel operator") {
  // F[R(r) e^{iN t}](rho, p) = 2(nu+1) i^N e^{iN p} (H phi)(rho) / sqrt(c rho), phi = sqrt(r) R
  for (double nu : {0.0, 1.5}) {
    for (int N : {0, 1, 3}) {
      const double c = 5.0;
      auto R = [&](double r) { return std::pow(r, N) * (1 + r * r - 0.5 * std::pow(r, 4)); };
      const auto drule = disk_rule(40, default_angular_size(N + 8), nu);
      const auto rrule = radial_rule(40, nu);
      const double rho = 0.7;
      const double p = 0.4;
      const cd v = apply_weighted_fourier(
          nu, c, [&](double x, double y) { return R(std::hypot(x, y)) * std::polar(1.0, N * std::atan2(y, x)); },
          PolarPoint{rho, p}.to_cartesian(), drule);
      const double h = apply_finite_hankel(nu, c, N, [&](double r) { return std::sqrt(r) * R(r); }, rho, rrule);
      const cd expect = 2 * (nu + 1) * std::pow(cd(0, 1), N) * std::polar(1.0, N * p) * h / std::sqrt(c * rho);
      CHECK(std::abs(v - expect) <= 1e-12);
    }
  }
}

TEST_CASE("radial_inner and the rule check") {
  const auto rule = radial_rule(10, 1.0);
  CHECK(radial_inner([](double t) { return t; }, [](double t) { return t; }, rule) == doctest::Approx(2.0 / 15.0));
  CHECK_THROWS_AS(apply_finite_hankel(0.0, 1.0, 0, [](double t) { return t; }, 0.5, rule), std::invalid_argument);
  CHECK_THROWS_AS(apply_finite_hankel(1.0, 1.0, 0, [](double t) { return t; }, 0.5, gauss_legendre(8)), std::invalid_argument);
}
