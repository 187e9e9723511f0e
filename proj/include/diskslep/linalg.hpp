#pragma once

// Symmetric eigensolvers: implicit-shift QL for tridiagonal matrices and a
// Householder reduction feeding the same core for dense matrices.
//
// Ordering conventions:
//   symtri_eigen     ascending eigenvalues
//   dense_sym_eigen  descending |eigenvalue|
// Eigenvector signs: the largest-magnitude component (first one on ties) is
// made positive.

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace diskslep {

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> offdiag;  ///< offdiag[i] couples i and i+1

  int size() const { return static_cast<int>(diag.size()); }
  /// Throws std::invalid_argument on inconsistent lengths or non-finite entries.
  void validate() const;
  /// Gershgorin bound on the spectral norm.
  double norm_bound() const;
};

struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;
};

/// Row-major dense matrix.
template <class Real>
struct BasicMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Real> data;

  BasicMatrix() = default;
  BasicMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, Real(0)) {}

  Real& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  const Real& operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
};

using Matrix = BasicMatrix<double>;

/// The `count` smallest eigenpairs, ascending.
std::vector<EigenPair> symtri_eigen(const SymTridiagonal& t, int count);

/// All eigenvalues, ascending.
std::vector<double> symtri_eigenvalues(const SymTridiagonal& t);

/// Eigenvector for an isolated eigenvalue near `shift` by a twisted
/// factorization, with `sweeps` Rayleigh-type corrections of the value. Small
/// components are obtained with relative accuracy (no cancellation against the
/// large ones), which matters for rapidly decaying coefficient vectors.
EigenPair twisted_eigenpair(const SymTridiagonal& t, double shift, int sweeps = 3);

/// The `count` eigenpairs of largest magnitude, by descending |value|.
/// Throws std::invalid_argument when `a` is not square or not symmetric to
/// 1e-12 relative.
std::vector<EigenPair> dense_sym_eigen(const Matrix& a, int count);

}  // namespace diskslep
