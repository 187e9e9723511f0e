#include "diskslep/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "diskslep/detail/linalg_impl.hpp"

namespace diskslep {

namespace {

// Above this size symtri_eigen switches from accumulating the full rotation
// matrix (cubic cost) to twisted-factorization vectors for the requested pairs.
constexpr int kFullVectorLimit = 600;

void check_count(int count, int n, const char* who) {
  if (count < 0 || count > n) {
    throw std::invalid_argument(std::string(who) + ": count must lie in [0, " + std::to_string(n) + "]");
  }
}

std::vector<double> column(const Matrix& z, int j) {
  std::vector<double> v(z.rows);
  for (int i = 0; i < z.rows; ++i) v[i] = z(i, j);
  return v;
}

}  // namespace

void SymTridiagonal::validate() const {
  if (diag.empty()) throw std::invalid_argument("SymTridiagonal: empty diagonal");
  if (offdiag.size() + 1 != diag.size()) throw std::invalid_argument("SymTridiagonal: offdiag must have length K-1");
  for (double v : diag) {
    if (!std::isfinite(v)) throw std::invalid_argument("SymTridiagonal: non-finite diagonal entry");
  }
  for (double v : offdiag) {
    if (!std::isfinite(v)) throw std::invalid_argument("SymTridiagonal: non-finite off-diagonal entry");
  }
}

double SymTridiagonal::norm_bound() const {
  double best = 0.0;
  const int n = size();
  for (int i = 0; i < n; ++i) {
    double row = std::abs(diag[i]);
    if (i > 0) row += std::abs(offdiag[i - 1]);
    if (i + 1 < n) row += std::abs(offdiag[i]);
    best = std::max(best, row);
  }
  return best;
}

std::vector<double> symtri_eigenvalues(const SymTridiagonal& t) {
  t.validate();
  std::vector<double> d = t.diag;
  std::vector<double> e = t.offdiag;
  detail::tql_implicit<double>(d, e, nullptr);
  std::sort(d.begin(), d.end());
  return d;
}

EigenPair twisted_eigenpair(const SymTridiagonal& t, double shift, int sweeps) {
  t.validate();
  auto [value, vec] = detail::twisted_eigenpair_impl<double>(t.diag, t.offdiag, shift, sweeps, t.norm_bound());
  return {value, std::move(vec)};
}

std::vector<EigenPair> symtri_eigen(const SymTridiagonal& t, int count) {
  t.validate();
  const int n = t.size();
  check_count(count, n, "symtri_eigen");
  std::vector<EigenPair> out;
  out.reserve(count);

  if (n > kFullVectorLimit) {
    const auto values = symtri_eigenvalues(t);
    for (int j = 0; j < count; ++j) {
      auto pair = twisted_eigenpair(t, values[j], 1);
      pair.value = values[j];
      out.push_back(std::move(pair));
    }
    return out;
  }

  std::vector<double> d = t.diag;
  std::vector<double> e = t.offdiag;
  Matrix z(n, n);
  for (int i = 0; i < n; ++i) z(i, i) = 1.0;
  detail::tql_implicit<double>(d, e, &z);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });
  for (int j = 0; j < count; ++j) {
    EigenPair p{d[order[j]], column(z, order[j])};
    detail::fix_sign(p.vector);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<EigenPair> dense_sym_eigen(const Matrix& a, int count) {
  if (a.rows != a.cols || a.rows == 0) throw std::invalid_argument("dense_sym_eigen: matrix must be square and non-empty");
  const int n = a.rows;
  check_count(count, n, "dense_sym_eigen");
  double scale = 0.0;
  for (double v : a.data) scale = std::max(scale, std::abs(v));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (std::abs(a(i, j) - a(j, i)) > 1e-12 * scale) throw std::invalid_argument("dense_sym_eigen: matrix is not symmetric");
    }
  }
  Matrix z = a;
  std::vector<double> d;
  std::vector<double> e;
  detail::householder_tridiagonalize(z, d, e, true);
  detail::tql_implicit<double>(d, e, &z);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return std::abs(d[x]) > std::abs(d[y]); });
  std::vector<EigenPair> out;
  out.reserve(count);
  for (int j = 0; j < count; ++j) {
    EigenPair p{d[order[j]], column(z, order[j])};
    detail::fix_sign(p.vector);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace diskslep
