#include "diskslep/slepian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "diskslep/detail/operators_impl.hpp"
#include "diskslep/detail/slepian_impl.hpp"
#include "diskslep/orthopoly.hpp"

namespace diskslep {

namespace {

int initial_truncation(const SlepianParams& params, int num_modes) {
  return std::max(2 * num_modes + 30, static_cast<int>(std::ceil(params.c)) + 30);
}

bool tail_ok(const std::vector<double>& a, double tol) {
  double peak = 0.0;
  for (double v : a) peak = std::max(peak, std::abs(v));
  return std::abs(a.back()) <= tol * peak;
}

std::complex<double> i_power(int N) {
  switch (N % 4) {
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

std::vector<RadialMode> solve_at(const SlepianParams& params, int K, int num_modes) {
  const auto t = build_spectral_matrix(params, K);
  auto pairs = symtri_eigen(t, num_modes);
  std::vector<RadialMode> modes;
  modes.reserve(num_modes);
  for (int n = 0; n < num_modes; ++n) {
    EigenPair p = std::move(pairs[n]);
    if (params.c > 0.0) {
      p = twisted_eigenpair(t, p.value, 3);
    }
    RadialMode m;
    m.n = n;
    m.chi = p.value;
    m.coeffs = std::move(p.vector);
    m.truncation = K;
    m.mu = mu_from_coeffs(m.coeffs, params);
    m.lambda = 2.0 * (params.nu + 1.0) * i_power(params.N) * m.mu;
    modes.push_back(std::move(m));
  }
  return modes;
}

}  // namespace

void SlepianParams::validate() const {
  if (!(nu > -1.0) || !std::isfinite(nu)) throw std::invalid_argument("SlepianParams: nu must be finite and exceed -1");
  if (!(c >= 0.0) || !std::isfinite(c)) throw std::invalid_argument("SlepianParams: c must be finite and non-negative");
  if (N < 0) throw std::invalid_argument("SlepianParams: N must be non-negative");
  if (truncation < 0 || truncation == 1) throw std::invalid_argument("SlepianParams: truncation must be 0 (auto) or >= 2");
  if (truncation > kMaxTruncation) throw std::invalid_argument("SlepianParams: truncation exceeds the hard cap");
  if (!(tolerance > 0.0) || !(tolerance < 1.0)) throw std::invalid_argument("SlepianParams: tolerance must lie in (0,1)");
}

double chi0(int N, int n, double nu) {
  if (N < 0 || n < 0) throw std::domain_error("chi0: negative index");
  return (N + 2.0 * n + 0.5) * (N + 2.0 * nu + 2.0 * n + 1.5);
}

SymTridiagonal build_spectral_matrix(const SlepianParams& params, int K) {
  params.validate();
  if (K < 2) throw std::invalid_argument("build_spectral_matrix: K must be at least 2");
  const double c2 = params.c * params.c;
  SymTridiagonal t;
  t.diag.resize(K);
  t.offdiag.resize(K - 1);
  double h_prev = t_norm_sq({params.N, 0, params.nu});
  for (int k = 0; k < K; ++k) {
    const TBasisIndex idx{params.N, k, params.nu};
    const auto r = x2_recurrence_coeffs(idx);
    t.diag[k] = chi0(params.N, k, params.nu) + c2 * r.b;
    if (k + 1 < K) {
      const double h_next = t_norm_sq({params.N, k + 1, params.nu});
      t.offdiag[k] = c2 * r.a * std::sqrt(h_next / h_prev);
      h_prev = h_next;
    }
  }
  return t;
}

double mu_from_coeffs(const std::vector<double>& coeffs, const SlepianParams& params) {
  if (coeffs.empty()) throw std::invalid_argument("mu_from_coeffs: empty coefficient vector");
  if (params.c == 0.0 && params.N > 0) return 0.0;
  double s = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    s += coeffs[k] / std::sqrt(t_norm_sq({params.N, static_cast<int>(k), params.nu}));
  }
  double denom = 2.0 * std::sqrt(t_norm_sq({params.N, 0, params.nu})) * s;
  for (int j = 1; j <= params.N + 1; ++j) denom *= (params.nu + j);
  return coeffs[0] * std::pow(params.c / 2.0, params.N) / denom;
}

std::vector<RadialMode> solve_modes(const SlepianParams& params, int num_modes) {
  params.validate();
  if (num_modes < 1) throw std::invalid_argument("solve_modes: num_modes must be positive");
  if (params.truncation > 0) {
    if (num_modes > params.truncation) throw std::invalid_argument("solve_modes: more modes than the fixed truncation");
    return solve_at(params, params.truncation, num_modes);
  }
  for (int K = initial_truncation(params, num_modes);; K *= 2) {
    if (K > kMaxTruncation) {
      throw TruncationError("solve_modes: truncation would exceed " + std::to_string(kMaxTruncation) +
                            "; c is too large for this solver");
    }
    auto modes = solve_at(params, K, num_modes);
    const bool ok = std::all_of(modes.begin(), modes.end(),
                                [&](const RadialMode& m) { return tail_ok(m.coeffs, params.tolerance); });
    if (ok) return modes;
  }
}

double eval_phi(const RadialMode& mode, const SlepianParams& params, double x) {
  return detail::eval_phi_impl<double>(mode.coeffs, params.N, params.nu, x);
}

double eval_R(const RadialMode& mode, const SlepianParams& params, double r) {
  if (r < 0.0 || r > 1.0) throw std::domain_error("eval_R: r outside [0,1]");
  const double series = detail::radial_series<double>(mode.coeffs, params.N, params.nu, r);
  return (params.N == 0) ? series : std::pow(r, params.N) * series;
}

std::complex<double> eval_psi(const RadialMode& mode, const SlepianParams& params, double r, double theta) {
  const double scale = 1.0 / std::sqrt(2.0 * (params.nu + 1.0));
  return std::polar(eval_R(mode, params, r) * scale, params.N * theta);
}

double rayleigh_mu(const RadialMode& mode, const SlepianParams& params, const QuadratureRule& rule) {
  if (!(params.c > 0.0)) throw std::domain_error("rayleigh_mu: requires c > 0");
  detail::require_radial_rule(rule, params.nu, "rayleigh_mu");
  const int n = rule.size();
  std::vector<double> phi(n);
  for (int i = 0; i < n; ++i) phi[i] = eval_phi(mode, params, rule.nodes[i]);
  double num = 0.0;
  double den = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) {
      row += rule.weights[j] * detail::bessel_j_script_impl(static_cast<double>(params.N),
                                                             params.c * rule.nodes[i] * rule.nodes[j]) * phi[j];
    }
    num += rule.weights[i] * row * phi[i];
    den += rule.weights[i] * phi[i] * phi[i];
  }
  return num / (den * std::sqrt(params.c));
}

}  // namespace diskslep
