#include <cmath>
#include <complex>

#include "diskslep/operators.hpp"
#include "diskslep/orthopoly.hpp"
#include "diskslep/quadrature.hpp"
#include "diskslep/slepian.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace diskslep;
using cd = std::complex<double>;

TEST_CASE("chi0 examples") {
  CHECK(chi0(0, 0, 0.0) == doctest::Approx(0.75));
  CHECK(chi0(0, 1, 0.0) == doctest::Approx(8.75));
  CHECK(chi0(1, 0, 1.0) == doctest::Approx(1.5 * 4.5));
  CHECK(chi0(2, 3, 0.5) == doctest::Approx(8.5 * 10.5));
  CHECK_THROWS_AS(chi0(-1, 0, 0.0), std::domain_error);
}

TEST_CASE("spectral matrix example") {
  const auto t = build_spectral_matrix({0.0, 1.0, 0}, 2);
  CHECK(t.diag[0] == doctest::Approx(0.75 + 0.5));
  CHECK(t.diag[1] == doctest::Approx(8.75 + 0.5));
  CHECK(t.offdiag[0] == doctest::Approx(-0.5 * std::sqrt(1.0 / 3.0)));
}

TEST_CASE("spectral matrix is the Galerkin matrix of -L") {
  // entries <Lambda That_j, That_k> by quadrature with the analytic jet of That_j
  for (double nu : {0.0, 1.0, 2.5}) {
    for (int N : {0, 3}) {
      const double c = 4.0;
      const int K = 6;
      const auto t = build_spectral_matrix({nu, c, N}, K);
      const auto rule = radial_rule(40, nu);
      auto basis = [&](int k, double x) {
        return t_basis({N, k, nu}, x) / std::sqrt(t_norm_sq({N, k, nu}));
      };
      for (int j = 0; j + 1 < K; ++j) {
        // Lambda That_j = (chi0 + c^2 x^2) That_j
        auto lam = [&](double x) { return (chi0(N, j, nu) + c * c * x * x) * basis(j, x); };
        const double dj = radial_inner(lam, [&](double x) { return basis(j, x); }, rule);
        const double ej = radial_inner(lam, [&](double x) { return basis(j + 1, x); }, rule);
        CHECK(t.diag[j] == doctest::Approx(dj).epsilon(1e-12));
        CHECK(t.offdiag[j] == doctest::Approx(ej).epsilon(1e-12));
        const double far = (j + 2 < K) ? radial_inner(lam, [&](double x) { return basis(j + 2, x); }, rule) : 0.0;
        CHECK(std::abs(far) <= 1e-12 * (1 + std::abs(dj)));
      }
    }
  }
}

TEST_CASE("modes at c = 0") {
  for (double nu : {0.0, 1.0}) {
    for (int N : {0, 2}) {
      const SlepianParams p{nu, 0.0, N};
      const auto modes = solve_modes(p, 4);
      for (int n = 0; n < 4; ++n) {
        CHECK(modes[n].chi == doctest::Approx(chi0(N, n, nu)));
        CHECK(std::abs(modes[n].coeffs[n]) == doctest::Approx(1.0));
        const double mu = (N == 0 && n == 0) ? 1.0 / (2 * (nu + 1)) : 0.0;
        CHECK(modes[n].mu == doctest::Approx(mu));
      }
      if (N == 0) CHECK(modes[0].lambda.real() == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("lambda at small c") {
  // lambda_{0,0} = 1 - c^2 / (4 (nu+2)^2) + O(c^4)
  for (double nu : {0.0, 0.5, 2.0}) {
    const double c = 1e-3;
    const auto modes = solve_modes({nu, c, 0}, 1);
    CHECK(std::abs(modes[0].lambda.real() - (1 - c * c / (4 * (nu + 2) * (nu + 2)))) <= 1e-12);
    CHECK(modes[0].lambda.imag() == 0.0);
  }
  CHECK(solve_modes({0.0, 1e-3, 0}, 1)[0].lambda.real() == doctest::Approx(0.9999999375).epsilon(1e-13));
}

TEST_CASE("spectral mu agrees with Nystrom and the Rayleigh quotient") {
  for (double nu : {0.0, 1.0, 2.5}) {
    for (int N : {0, 1, 3}) {
      const double c = 5.0;
      const SlepianParams p{nu, c, N};
      const auto modes = solve_modes(p, 4);
      const auto ny = nystrom_hankel_eigs(nu, c, N, 120, 4);
      const auto rule = radial_rule(120, nu);
      for (int n = 0; n < 3; ++n) {
        const double s = std::sqrt(c) * modes[n].mu;
        CHECK(std::abs(s - ny[n].value) <= 1e-10 * std::abs(ny[0].value));
        CHECK(rayleigh_mu(modes[n], p, rule) == doctest::Approx(modes[n].mu).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("nu = 0 concentration c^2 |lambda|^2 / 4 increases to one") {
  for (int N : {0, 2}) {
    double prev = 0.0;
    for (double c : {1.0, 4.0, 10.0, 20.0}) {
      const auto m = solve_modes({0.0, c, N}, 1)[0];
      const double conc = c * c * std::norm(m.lambda) / 4;
      CHECK(conc > prev);
      CHECK(conc <= 1.0 + 1e-12);
      prev = conc;
    }
    CHECK(prev == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("ordering, tail decay and eigenvalue bounds") {
  for (double nu : {0.0, 1.5}) {
    for (int N : {0, 4}) {
      const double c = 12.0;
      const SlepianParams p{nu, c, N};
      const auto modes = solve_modes(p, 8);
      for (int n = 0; n < 8; ++n) {
        const auto& m = modes[n];
        // Lambda = Lambda_0 + c^2 x^2 with 0 <= x^2 <= 1
        CHECK(m.chi >= chi0(N, n, nu) - 1e-9);
        CHECK(m.chi <= chi0(N, n, nu) + c * c + 1e-9);
        double peak = 0.0;
        std::size_t arg = 0;
        for (std::size_t k = 0; k < m.coeffs.size(); ++k) {
          if (std::abs(m.coeffs[k]) > peak) {
            peak = std::abs(m.coeffs[k]);
            arg = k;
          }
        }
        CHECK(m.coeffs[arg] > 0.0);
        CHECK(std::abs(m.coeffs.back()) <= p.tolerance * peak);
        if (n > 0) {
          CHECK(m.chi > modes[n - 1].chi);
          CHECK(std::abs(m.mu) < std::abs(modes[n - 1].mu));
        }
      }
    }
  }
}

TEST_CASE("radial orthonormality") {
  const SlepianParams p{0.5, 8.0, 2};
  const auto modes = solve_modes(p, 6);
  const auto rule = radial_rule(80, p.nu);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double g = radial_inner([&](double x) { return eval_phi(modes[i], p, x); },
                                    [&](double x) { return eval_phi(modes[j], p, x); }, rule);
      CHECK(std::abs(g - (i == j ? 1.0 : 0.0)) <= 1e-12);
    }
  }
}

TEST_CASE("disk orthonormality across orders") {
  const double nu = 1.0;
  const double c = 6.0;
  const auto rule = disk_rule(40, 48, nu);
  struct Item {
    SlepianParams p;
    RadialMode m;
  };
  std::vector<Item> items;
  for (int N : {0, 1, 2}) {
    const SlepianParams p{nu, c, N};
    for (const auto& m : solve_modes(p, 2)) items.push_back({p, m});
  }
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      auto f = [&](const Item& it) {
        return [&it](double x, double y) { return eval_psi(it.m, it.p, std::hypot(x, y), std::atan2(y, x)); };
      };
      const cd g = disk_inner(f(items[i]), f(items[j]), rule);
      CHECK(std::abs(g - (i == j ? 1.0 : 0.0)) <= 1e-12);
    }
  }
}

TEST_CASE("eval_R and eval_psi examples") {
  // c = 0, N = 0, n = 0: R is the constant sqrt(2(nu+1)), psi is 1
  for (double nu : {0.0, 2.0}) {
    const SlepianParams p{nu, 0.0, 0};
    const auto m = solve_modes(p, 1)[0];
    for (double r : {0.0, 0.3, 1.0}) {
      CHECK(eval_R(m, p, r) == doctest::Approx(std::sqrt(2 * (nu + 1))));
      CHECK(std::abs(eval_psi(m, p, r, 1.1) - 1.0) <= 1e-14);
    }
  }
  const SlepianParams p{1.0, 3.0, 2};
  const auto m = solve_modes(p, 1)[0];
  CHECK(eval_R(m, p, 0.0) == 0.0);
  for (double r : {0.1, 0.5, 0.9}) {
    CHECK(eval_R(m, p, r) == doctest::Approx(eval_phi(m, p, r) / std::sqrt(r)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(eval_R(m, p, 1.5), std::domain_error);
}

TEST_CASE("psi is an eigenfunction of the weighted Fourier transform") {
  for (double nu : {0.0, 1.5}) {
    for (int N : {0, 1, 2, 3}) {
      const double c = 5.0;
      const SlepianParams p{nu, c, N};
      const auto modes = solve_modes(p, 3);
      const auto rule = disk_rule(50, default_angular_size(N + 8), nu);
      const DiskPoint y = PolarPoint{0.62, 0.9}.to_cartesian();
      for (const auto& m : modes) {
        DiskFunction psi = [&](double a, double b) { return eval_psi(m, p, std::hypot(a, b), std::atan2(b, a)); };
        const cd lhs = apply_weighted_fourier(nu, c, psi, y, rule);
        const cd rhs = m.lambda * psi(y.x, y.y);
        CHECK(std::abs(lhs - rhs) <= 1e-12);
      }
    }
  }
}

TEST_CASE("psi under the kernel operator picks up |lambda|^2") {
  const double nu = 0.5;
  const double c = 4.0;
  const SlepianParams p{nu, c, 1};
  const auto modes = solve_modes(p, 2);
  const auto rule = disk_rule(40, 64, nu);
  const DiskPoint y{0.3, 0.2};
  for (const auto& m : modes) {
    auto psi = [&](double a, double b) { return eval_psi(m, p, std::hypot(a, b), std::atan2(b, a)); };
    const cd k = rule.integrate([&](double a, double b) { return kernel_K(nu, c, y, {a, b}) * psi(a, b); });
    CHECK(std::abs(k - std::norm(m.lambda) * psi(y.x, y.y)) <= 1e-11);
  }
}

TEST_CASE("lambda phase follows i^N") {
  for (int N = 0; N < 4; ++N) {
    const auto m = solve_modes({0.0, 3.0, N}, 1)[0];
    const cd expect = std::pow(cd(0, 1), N) * (2.0 * m.mu);
    CHECK(std::abs(m.lambda - expect) <= 1e-15);
  }
}

TEST_CASE("fixed truncation and errors") {
  SlepianParams p{1.0, 10.0, 0};
  p.truncation = 60;
  const auto fixed = solve_modes(p, 3);
  CHECK(fixed[0].truncation == 60);
  const auto autom = solve_modes({1.0, 10.0, 0}, 3);
  CHECK(fixed[2].mu == doctest::Approx(autom[2].mu).epsilon(1e-12));
  CHECK_THROWS_AS(solve_modes({1.0, 5000.0, 0}, 1), TruncationError);
  CHECK_THROWS_AS(solve_modes({-1.0, 1.0, 0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(solve_modes({0.0, -1.0, 0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(solve_modes({0.0, 1.0, -1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(solve_modes({0.0, 1.0, 0}, 0), std::invalid_argument);
  CHECK_THROWS_AS(rayleigh_mu(autom[0], {1.0, 0.0, 0}, radial_rule(10, 1.0)), std::domain_error);
}
