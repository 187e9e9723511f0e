#include "diskslep/quadrature.hpp"

#include <sstream>

#include "diskslep/detail/quadrature_impl.hpp"

namespace diskslep {

std::string describe(const QuadratureRule& rule) {
  std::ostringstream os;
  switch (rule.kind) {
    case WeightKind::legendre:
      os << "gauss-legendre";
      break;
    case WeightKind::jacobi:
      os << "gauss-jacobi(alpha=" << rule.alpha << ", beta=" << rule.beta << ")";
      break;
    case WeightKind::radial:
      os << "radial(nu=" << rule.alpha << ")";
      break;
    case WeightKind::periodic:
      os << "periodic-trapezoid";
      break;
  }
  os << " n=" << rule.nodes.size();
  return os.str();
}

QuadratureRule gauss_legendre(int n) { return detail::gauss_jacobi_impl<double>(n, 0.0, 0.0); }

QuadratureRule gauss_jacobi(int n, double alpha, double beta) { return detail::gauss_jacobi_impl<double>(n, alpha, beta); }

QuadratureRule radial_rule(int n, double nu) { return detail::radial_rule_impl<double>(n, nu); }

QuadratureRule periodic_trapezoid(int n) { return detail::periodic_trapezoid_impl<double>(n); }

int default_angular_size(int max_freq) { return 4 * std::max(max_freq, 0) + 16; }

DiskRule disk_rule(int n_r, int n_theta, double nu) { return detail::disk_rule_impl<double>(n_r, n_theta, nu); }

}  // namespace diskslep
