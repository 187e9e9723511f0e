#include <cmath>
#include <random>
#include <stdexcept>

#include "diskslep/linalg.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace diskslep;

namespace {

double residual(const SymTridiagonal& t, const EigenPair& p) {
  const int n = t.size();
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    double v = t.diag[i] * p.vector[i] - p.value * p.vector[i];
    if (i > 0) v += t.offdiag[i - 1] * p.vector[i - 1];
    if (i + 1 < n) v += t.offdiag[i] * p.vector[i + 1];
    s += v * v;
  }
  return std::sqrt(s);
}

double residual(const Matrix& a, const EigenPair& p) {
  double s = 0.0;
  for (int i = 0; i < a.rows; ++i) {
    double v = -p.value * p.vector[i];
    for (int j = 0; j < a.cols; ++j) v += a(i, j) * p.vector[j];
    s += v * v;
  }
  return std::sqrt(s);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

SymTridiagonal random_tridiagonal(int n, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SymTridiagonal t;
  for (int i = 0; i < n; ++i) t.diag.push_back(u(rng) * 3.0);
  for (int i = 0; i + 1 < n; ++i) t.offdiag.push_back(u(rng));
  return t;
}

Matrix random_symmetric(int n, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      a(i, j) = u(rng);
      a(j, i) = a(i, j);
    }
  }
  return a;
}

}  // namespace

TEST_CASE("symtri_eigen small examples") {
  const auto p = symtri_eigen({{2, 2}, {-1}}, 2);
  CHECK(p[0].value == doctest::Approx(1.0));
  CHECK(p[1].value == doctest::Approx(3.0));
  const auto q = symtri_eigen({{5, 5, 5}, {0, 0}}, 3);
  for (const auto& e : q) CHECK(e.value == 5.0);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) CHECK(std::abs(dot(q[i].vector, q[j].vector) - (i == j ? 1.0 : 0.0)) <= 1e-14);
  }
}

TEST_CASE("symtri_eigen against Sturm bisection") {
  SymTridiagonal t;
  for (int k = 0; k < 6; ++k) t.diag.push_back(k * k);
  t.offdiag.assign(5, 1.0);
  const auto ref = oracle::sturm_eigenvalues(t.diag, t.offdiag);
  const auto p = symtri_eigen(t, 6);
  for (int k = 0; k < 6; ++k) CHECK(p[k].value == doctest::Approx(ref[k]).epsilon(1e-14));

  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const auto r = random_tridiagonal(40, rng);
    const auto rr = oracle::sturm_eigenvalues(r.diag, r.offdiag);
    const auto vals = symtri_eigenvalues(r);
    for (int k = 0; k < 40; ++k) CHECK(std::abs(vals[k] - rr[k]) <= 1e-12);
  }
}

TEST_CASE("symtri_eigen residual and orthogonality contract") {
  std::mt19937 rng(11);
  for (int n : {3, 17, 80}) {
    const auto t = random_tridiagonal(n, rng);
    const auto p = symtri_eigen(t, n);
    const double norm = t.norm_bound();
    for (int i = 0; i < n; ++i) {
      CHECK(residual(t, p[i]) <= 1e-11 * norm);
      CHECK(std::abs(dot(p[i].vector, p[i].vector) - 1.0) <= 1e-12);
      if (i > 0) CHECK(p[i - 1].value <= p[i].value);
      for (int j = 0; j < i; ++j) CHECK(std::abs(dot(p[i].vector, p[j].vector)) <= 1e-10);
    }
  }
}

TEST_CASE("large tridiagonal path uses twisted vectors") {
  SymTridiagonal t;
  const int n = 900;
  for (int k = 0; k < n; ++k) t.diag.push_back(0.5 * k * k + k);
  for (int k = 0; k + 1 < n; ++k) t.offdiag.push_back(-0.3 * (k + 1));
  const auto p = symtri_eigen(t, 6);
  const double norm = t.norm_bound();
  for (int i = 0; i < 6; ++i) {
    CHECK(residual(t, p[i]) <= 1e-11 * norm);
    for (int j = 0; j < i; ++j) CHECK(std::abs(dot(p[i].vector, p[j].vector)) <= 1e-10);
  }
}

TEST_CASE("trace preservation") {
  std::mt19937 rng(3);
  const auto t = random_tridiagonal(30, rng);
  double trace = 0.0;
  for (double d : t.diag) trace += d;
  double sum = 0.0;
  for (double v : symtri_eigenvalues(t)) sum += v;
  CHECK(sum == doctest::Approx(trace).epsilon(1e-10));

  const auto a = random_symmetric(20, rng);
  double trace_a = 0.0;
  for (int i = 0; i < 20; ++i) trace_a += a(i, i);
  double sum_a = 0.0;
  for (const auto& p : dense_sym_eigen(a, 20)) sum_a += p.value;
  CHECK(sum_a == doctest::Approx(trace_a).epsilon(1e-10));
}

TEST_CASE("off-diagonal sign flips act as a diagonal similarity") {
  std::mt19937 rng(5);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 5; ++trial) {
    const auto t = random_tridiagonal(25, rng);
    auto flipped = t;
    // S = diag(s_i), S T S has offdiag s_i s_{i+1} e_i
    std::vector<double> s(25, 1.0);
    for (int i = 1; i < 25; ++i) s[i] = coin(rng) ? -1.0 : 1.0;
    for (int i = 0; i < 24; ++i) flipped.offdiag[i] *= s[i] * s[i + 1];
    const auto p = symtri_eigen(t, 25);
    const auto q = symtri_eigen(flipped, 25);
    for (int k = 0; k < 25; ++k) {
      CHECK(q[k].value == doctest::Approx(p[k].value).epsilon(1e-12));
      // q_k = +-S p_k
      const double sign = dot(q[k].vector, [&] {
        std::vector<double> v = p[k].vector;
        for (int i = 0; i < 25; ++i) v[i] *= s[i];
        return v;
      }());
      CHECK(std::abs(std::abs(sign) - 1.0) <= 1e-10);
    }
  }
}

TEST_CASE("dense_sym_eigen examples") {
  Matrix id(4, 4);
  for (int i = 0; i < 4; ++i) id(i, i) = 1.0;
  for (const auto& p : dense_sym_eigen(id, 4)) CHECK(p.value == doctest::Approx(1.0));

  std::vector<double> v = {0.5, -0.5, 0.5, 0.5};
  Matrix r1(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) r1(i, j) = v[i] * v[j];
  }
  const auto p = dense_sym_eigen(r1, 4);
  CHECK(p[0].value == doctest::Approx(1.0));
  for (int i = 1; i < 4; ++i) CHECK(std::abs(p[i].value) <= 1e-15);
  CHECK(std::abs(std::abs(dot(p[0].vector, v)) - 1.0) <= 1e-14);
}

TEST_CASE("dense path agrees with Sturm bisection on its tridiagonal form") {
  // build A = Q T Q^T from a known tridiagonal T with a random orthogonal Q
  std::mt19937 rng(13);
  const int n = 8;
  const auto t = random_tridiagonal(n, rng);
  const auto q = dense_sym_eigen(random_symmetric(n, rng), n);  // columns of an orthogonal matrix
  Matrix a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          double tkl = (k == l) ? t.diag[k] : 0.0;
          if (l == k + 1) tkl = t.offdiag[k];
          if (k == l + 1) tkl = t.offdiag[l];
          s += q[k].vector[i] * tkl * q[l].vector[j];
        }
      }
      a(i, j) = s;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) a(j, i) = a(i, j);
  }
  auto ref = oracle::sturm_eigenvalues(t.diag, t.offdiag);
  std::sort(ref.begin(), ref.end(), [](double x, double y) { return std::abs(x) > std::abs(y); });
  const auto p = dense_sym_eigen(a, n);
  for (int k = 0; k < n; ++k) CHECK(std::abs(p[k].value - ref[k]) <= 1e-10);
}

TEST_CASE("dense_sym_eigen residual contract and ordering") {
  std::mt19937 rng(17);
  const auto a = random_symmetric(50, rng);
  double norm = 0.0;
  for (int i = 0; i < 50; ++i) {
    double row = 0.0;
    for (int j = 0; j < 50; ++j) row += std::abs(a(i, j));
    norm = std::max(norm, row);
  }
  const auto p = dense_sym_eigen(a, 50);
  for (int i = 0; i < 50; ++i) {
    CHECK(residual(a, p[i]) <= 1e-11 * norm);
    if (i > 0) CHECK(std::abs(p[i - 1].value) >= std::abs(p[i].value));
    for (int j = 0; j < i; ++j) CHECK(std::abs(dot(p[i].vector, p[j].vector)) <= 1e-10);
  }
}

TEST_CASE("deterministic eigenvector signs") {
  std::mt19937 rng(19);
  const auto a = random_symmetric(12, rng);
  for (const auto& p : dense_sym_eigen(a, 12)) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < p.vector.size(); ++i) {
      if (std::abs(p.vector[i]) > std::abs(p.vector[best])) best = i;
    }
    CHECK(p.vector[best] > 0.0);
  }
}

TEST_CASE("linalg errors") {
  Matrix a(2, 2);
  a(0, 1) = 1.0;
  CHECK_THROWS_AS(dense_sym_eigen(a, 1), std::invalid_argument);
  CHECK_THROWS_AS(symtri_eigen({{1, 2}, {}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(symtri_eigen({{1, 2}, {0.5}}, 3), std::invalid_argument);
  CHECK_THROWS_AS(symtri_eigen({{1, NAN}, {0.5}}, 1), std::invalid_argument);
}
