#include "suites.hpp"

#include <algorithm>
#include <boost/multiprecision/float128.hpp>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <numbers>
#include <random>

#include "diskslep/detail/quadrature_impl.hpp"
#include "diskslep/detail/transforms_impl.hpp"
#include "diskslep/operators.hpp"
#include "diskslep/quadrature.hpp"
#include "diskslep/slepian.hpp"

namespace diskslep::cli {
namespace {

using f128 = boost::multiprecision::float128;
using cd = std::complex<double>;

std::string label(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string label(const char* f, double a, double b) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

std::string label(const char* f, double a, double b, int n) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a, b, n);
  return buf;
}

class Report {
 public:
  Report(std::string suite, const SuiteOptions& opt, std::vector<Check>& out) : suite_(std::move(suite)), opt_(opt), out_(out) {}

  Check& add(std::string name, double error, double default_tol) {
    if (std::isnan(error)) error = INFINITY;
    const double tol = opt_.tolerance.value_or(default_tol);
    out_.push_back({suite_, std::move(name), error, tol, error <= tol, std::nullopt});
    return out_.back();
  }

 private:
  std::string suite_;
  const SuiteOptions& opt_;
  std::vector<Check>& out_;
};

// Quadrature and closed form both in 113-bit arithmetic: in double the
// quadrature loses everything to cancellation at small x.
void lemma1(const SuiteOptions& opt, std::vector<Check>& out) {
  Report rep("lemma1", opt, out);
  const std::vector<double> params = opt.quick ? std::vector<double>{0.0, 1.0} : std::vector<double>{0.0, 0.5, 1.0, 2.5};
  const std::vector<double> xs = opt.quick ? std::vector<double>{0.5, 5.0} : std::vector<double>{0.5, 1.0, 2.0, 5.0, 10.0};
  const int max_n = opt.quick ? 3 : 6;
  for (double beta : params) {
    const auto rule = detail::radial_rule_impl<f128>(80, f128(beta));
    for (double alpha : params) {
      double worst = 0.0;
      for (int n = 0; n <= max_n; ++n) {
        for (double x : xs) {
          const f128 lhs = detail::lemma1_lhs_on_rule<f128>(f128(alpha), f128(beta), n, f128(x), rule);
          const f128 rhs = detail::lemma1_rhs_impl<f128>(f128(alpha), f128(beta), n, f128(x));
          worst = std::max(worst, static_cast<double>(abs(lhs - rhs) / abs(rhs)));
        }
      }
      rep.add(label("alpha=%g beta=%g", alpha, beta), worst, 1e-9);
    }
  }
}

void theorem41(const SuiteOptions& opt, std::vector<Check>& out) {
  Report rep("theorem41", opt, out);
  const std::vector<double> nus = opt.quick ? std::vector<double>{0.0, 1.0} : std::vector<double>{0.0, 1.0, 2.5};
  const int max_deg = opt.quick ? 2 : 5;
  const std::vector<double> rhos = opt.quick ? std::vector<double>{0.5, 3.0, 6.0} : std::vector<double>{0.5, 1.5, 3.0, 4.5, 6.0};
  const std::vector<double> thetas = opt.quick ? std::vector<double>{0.0, 1.8, 4.4} : std::vector<double>{0.0, 0.9, 1.8, 3.1, 4.4};
  for (double nu : nus) {
    double ratio = 0.0;
    double full = 0.0;
    for (int n = 0; n <= max_deg; ++n) {
      for (int m = 0; m + n <= max_deg; ++m) {
        const double th = 0.7;
        const cd q = disk_transform_quadrature(nu, n, m, 1.7, th) / disk_transform_quadrature(nu, n, m, 4.2, th);
        const cd s = disk_transform_shape(nu, n, m, 1.7, th) / disk_transform_shape(nu, n, m, 4.2, th);
        ratio = std::max(ratio, std::abs(q - s) / std::abs(s));
        double scale = 0.0;
        double worst = 0.0;
        for (double rho : rhos) {
          for (double theta : thetas) {
            const cd quad = disk_transform_quadrature(nu, n, m, rho, theta);
            const cd closed = disk_transform_closed(nu, n, m, rho, theta).value;
            scale = std::max(scale, std::abs(quad));
            worst = std::max(worst, std::abs(quad - closed));
          }
        }
        full = std::max(full, worst / scale);
      }
    }
    rep.add(label("two-radius ratio nu=%g", nu), ratio, 1e-6);
    rep.add(label("full identity nu=%g", nu), full, 1e-7);
    const cd c00 = disk_transform_derived_constant(nu, 0, 0);
    rep.add(label("C_00 vs Gamma(nu+2) nu=%g", nu), std::abs(c00 - std::tgamma(nu + 2)) / std::tgamma(nu + 2), 1e-9)
        .value = c00.real();
  }
}

void theorem42(const SuiteOptions& opt, std::vector<Check>& out) {
  Report rep("theorem42", opt, out);
  const std::vector<double> nus = opt.quick ? std::vector<double>{0.5, 1.0} : std::vector<double>{0.0, 0.5, 1.0, 2.5};
  const int max_n = opt.quick ? 2 : 4;
  for (double nu : nus) {
    double er = 0.0;
    double ep = 0.0;
    for (int n = 0; n <= max_n; ++n) {
      for (int k = 0; k <= n; ++k) {
        auto q = [&](double r, double p) { return gegenbauer2d_transform_quadrature(nu, n, k, r, p); };
        auto s = [&](double r, double p) { return gegenbauer2d_transform_shape(nu, n, k, r, p, opt.shape); };
        const cd rr = s(1.3, 0.7) / s(3.4, 0.7);
        const cd rp = s(1.3, 0.7) / s(1.3, 1.2);
        er = std::max(er, std::abs(q(1.3, 0.7) / q(3.4, 0.7) - rr) / std::abs(rr));
        ep = std::max(ep, std::abs(q(1.3, 0.7) / q(1.3, 1.2) - rp) / std::abs(rp));
      }
    }
    rep.add(label("rho ratio nu=%g", nu), er, 1e-6);
    rep.add(label("phi ratio nu=%g", nu), ep, 1e-6);
  }
  for (double nu : {0.5, 1.0, 2.5}) {
    double poisson = 0.0;
    double finite = 0.0;
    for (int n : {0, 1, 3}) {
      for (double x : {0.7, 3.0, 9.0}) {
        const cd qp = poisson_integral_quadrature(nu, n, x);
        poisson = std::max(poisson, std::abs(qp - poisson_integral_closed(nu, n, x)) / std::abs(qp));
        const cd qf = finite_integral_quadrature(nu, n, x, 1.1);
        finite = std::max(finite, std::abs(qf - finite_integral_closed(nu, n, x, 1.1)) / std::abs(qf));
      }
    }
    rep.add(label("Poisson integral nu=%g", nu), poisson, 1e-7);
    rep.add(label("finite Gegenbauer integral nu=%g", nu), finite, 1e-6);
  }
}

void kernel(const SuiteOptions& opt, std::vector<Check>& out) {
  Report rep("kernel", opt, out);
  std::mt19937 rng(20240601);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::pair<DiskPoint, DiskPoint>> pairs;
  for (int i = 0; i < (opt.quick ? 5 : 10); ++i) {
    auto pick = [&] { return PolarPoint{std::sqrt(u(rng)), 2 * std::numbers::pi * u(rng)}.to_cartesian(); };
    const DiskPoint y = pick();
    pairs.emplace_back(y, pick());
  }
  const std::vector<double> nus = opt.quick ? std::vector<double>{0.0, 1.0} : std::vector<double>{0.0, 1.0, 2.5};
  for (double nu : nus) {
    const auto rule = disk_rule(40, 64, nu);
    for (double c : {1.0, 3.0}) {
      double worst = 0.0;
      for (const auto& [y, z] : pairs) {
        const cd q = apply_weighted_fourier(nu, c, [](double, double) { return cd(1.0); }, {y.x - z.x, y.y - z.y}, rule);
        worst = std::max(worst, std::abs(q - kernel_K(nu, c, y, z)));
      }
      rep.add(label("nu=%g c=%g", nu, c), worst, 1e-8);
    }
  }
}

// f(t) = t^{N+1/2} g(t^2) with g(1) = 0, so no boundary terms arise.
struct Trial {
  int N;
  double poly(double s, int d) const {
    static const double g[] = {1.0, -0.3, -2.0, 1.3};
    double r = 0.0;
    for (int k = d; k < 4; ++k) {
      double f = 1.0;
      for (int j = 0; j < d; ++j) f *= k - j;
      r += f * g[k] * std::pow(s, k - d);
    }
    return r;
  }
  double value(double t) const { return std::pow(t, N + 0.5) * poly(t * t, 0); }
  RadialJet jet(double t) const {
    const double s = t * t;
    const double e = N + 0.5;
    const double g0 = poly(s, 0);
    const double g1 = 2 * t * poly(s, 1);
    const double g2 = 2 * poly(s, 1) + 4 * s * poly(s, 2);
    const double u0 = std::pow(t, e);
    const double u1 = e * std::pow(t, e - 1);
    const double u2 = e * (e - 1) * std::pow(t, e - 2);
    return {u0 * g0, u1 * g0 + u0 * g1, u2 * g0 + 2 * u1 * g1 + u0 * g2};
  }
};

void commute(const SuiteOptions& opt, std::vector<Check>& out) {
  Report rep("commute", opt, out);
  const std::vector<double> cs = opt.quick ? std::vector<double>{1.0} : std::vector<double>{0.5, 1.0, 2.0};
  const int max_N = opt.quick ? 1 : 2;
  for (double nu : {0.0, 1.0}) {
    const auto rule = radial_rule(80, nu);
    for (double c : cs) {
      for (int N = 0; N <= max_N; ++N) {
        const Trial f{N};
        auto Hf = [&](double x) { return apply_finite_hankel(nu, c, N, [&](double s) { return f.value(s); }, x, rule); };
        auto Lf = [&](double s) { return apply_L_jet(nu, c, N, f.jet(s), s); };
        double scale = 0.0;
        double worst = 0.0;
        for (int j = 1; j <= 9; ++j) {
          const double x = 0.1 * j;
          const double hl = apply_finite_hankel(nu, c, N, Lf, x, rule);
          scale = std::max(scale, std::abs(hl));
          worst = std::max(worst, std::abs(hl - apply_L(nu, c, N, Hf, x)));
        }
        rep.add(label("nu=%g c=%g N=%d", nu, c, N), worst / scale, 1e-5);
      }
    }
  }
}

void nystrom(const SuiteOptions& opt, std::vector<Check>& out) {
  Report rep("nystrom", opt, out);
  {
    const auto ny = nystrom_hankel_eigs(0.0, 1.0, 0, 200, 1);
    const auto modes = solve_modes({0.0, 1.0, 0}, 1);
    rep.add("nu=0 c=1 N=0 top value", std::abs(modes[0].mu - ny[0].value) / std::abs(ny[0].value), 1e-8).value =
        ny[0].value;
  }
  const std::vector<double> nus = opt.quick ? std::vector<double>{0.0, 1.0} : std::vector<double>{0.0, 1.0, 2.5};
  const std::vector<double> cs = opt.quick ? std::vector<double>{1.0} : std::vector<double>{1.0, 5.0};
  for (double nu : nus) {
    for (double c : cs) {
      for (int N : {0, 1}) {
        const auto ny = nystrom_hankel_eigs(nu, c, N, 200, 5);
        const auto modes = solve_modes({nu, c, N}, 5);
        double worst = 0.0;
        for (int n = 0; n < 5; ++n) {
          // below this the double-precision Nystrom values carry no relative accuracy
          if (std::abs(ny[n].value) < 1e-6 * std::abs(ny[0].value)) break;
          worst = std::max(worst, std::abs(std::sqrt(c) * modes[n].mu - ny[n].value) / std::abs(ny[n].value));
        }
        rep.add(label("spectral vs Nystrom nu=%g c=%g N=%d", nu, c, N), worst, 1e-8);
      }
    }
  }
  if (!opt.quick) {
    for (double nu : {0.0, 1.0}) {
      const auto a = nystrom_hankel_eigs(nu, 1.0, 0, 200, 10);
      const auto b = nystrom_hankel_eigs(nu, 1.0, 0, 400, 10);
      double worst = 0.0;
      for (int n = 0; n < 10; ++n) worst = std::max(worst, std::abs(a[n].value - b[n].value));
      rep.add(label("rule 200 vs 400 nu=%g c=%g", nu, 1.0), worst, 1e-10);
    }
  }
}

void orthogonality(const SuiteOptions& opt, std::vector<Check>& out) {
  Report rep("orthogonality", opt, out);
  const std::vector<double> nus = opt.quick ? std::vector<double>{0.0, 1.0} : std::vector<double>{0.0, 1.0, 2.5};
  const std::vector<double> cs = opt.quick ? std::vector<double>{1.0, 5.0} : std::vector<double>{0.5, 1.0, 5.0};
  const std::vector<int> Ns = opt.quick ? std::vector<int>{0, 1} : std::vector<int>{0, 1, 3};
  for (double nu : nus) {
    const auto rrule = radial_rule(80, nu);
    const auto nodes = disk_rule(60, 32, nu).flatten();
    for (double c : cs) {
      double radial = 0.0;
      double disk = 0.0;
      std::vector<std::vector<cd>> psi_at;
      for (int N : Ns) {
        const SlepianParams p{nu, c, N};
        std::vector<std::vector<double>> phi_at;
        for (const auto& m : solve_modes(p, 5)) {
          std::vector<double> v;
          for (double x : rrule.nodes) v.push_back(eval_phi(m, p, x));
          phi_at.push_back(std::move(v));
          std::vector<cd> w;
          for (const auto& q : nodes) w.push_back(eval_psi(m, p, q.r, q.theta));
          psi_at.push_back(std::move(w));
        }
        for (std::size_t i = 0; i < phi_at.size(); ++i) {
          for (std::size_t j = 0; j <= i; ++j) {
            double g = 0.0;
            for (int k = 0; k < rrule.size(); ++k) g += rrule.weights[k] * phi_at[i][k] * phi_at[j][k];
            radial = std::max(radial, std::abs(g - (i == j ? 1.0 : 0.0)));
          }
        }
      }
      for (std::size_t i = 0; i < psi_at.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
          cd g = 0.0;
          for (std::size_t k = 0; k < nodes.size(); ++k) g += nodes[k].weight * psi_at[i][k] * std::conj(psi_at[j][k]);
          disk = std::max(disk, std::abs(g - (i == j ? 1.0 : 0.0)));
        }
      }
      rep.add(label("radial Gram nu=%g c=%g", nu, c), radial, 1e-9);
      rep.add(label("disk Gram nu=%g c=%g", nu, c), disk, 1e-8);
    }
  }
}

using SuiteFn = void (*)(const SuiteOptions&, std::vector<Check>&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"lemma1", lemma1}, {"theorem41", theorem41}, {"theorem42", theorem42},        {"kernel", kernel},
      {"commute", commute}, {"nystrom", nystrom},   {"orthogonality", orthogonality},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    v.push_back("all");
    return v;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  const auto& v = suite_names();
  return std::find(v.begin(), v.end(), name) != v.end();
}

std::vector<Check> run_suite(const std::string& name, const SuiteOptions& options) {
  std::vector<Check> out;
  for (const auto& [n, fn] : registry()) {
    if (name == "all" || name == n) fn(options, out);
  }
  return out;
}

}  // namespace diskslep::cli
