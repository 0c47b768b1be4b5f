// SPDX-License-Identifier: Apache-2.0
#include "codebounds/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace codebounds {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double x : a_) m = std::max(m, std::fabs(x));
  return m;
}

namespace linalg {

namespace {
bool g_parallel =
#ifdef _OPENMP
    true;
#else
    false;
#endif

inline double dot_row_col(const Matrix& a, const Matrix& b, int i, int j) {
  const int k = a.cols();
  const double* ar = a.data() + static_cast<size_t>(i) * k;
  double s = 0.0;
  for (int l = 0; l < k; ++l) s += ar[l] * b(l, j);
  return s;
}
}  // namespace

void set_parallel(bool on) { g_parallel = on; }
bool parallel_enabled() { return g_parallel; }

Matrix matmul_serial(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) c(i, j) = dot_row_col(a, b, i, j);
  return c;
}

Matrix matmul_omp(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  Matrix c(a.rows(), b.cols());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) c(i, j) = dot_row_col(a, b, i, j);
  return c;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  // Spawning threads costs more than a small product; stay serial below a
  // quarter-million scalar ops.
  size_t work = static_cast<size_t>(a.rows()) * b.cols() * a.cols();
  if (!g_parallel || work < (1u << 18)) return matmul_serial(a, b);
  return matmul_omp(a, b);
}

bool cholesky(Matrix& a) {
  const int n = a.rows();
  for (int j = 0; j < n; ++j) {
    double d = a(j, j);
    for (int k = 0; k < j; ++k) d -= a(j, k) * a(j, k);
    if (!(d > 0.0)) return false;
    d = std::sqrt(d);
    a(j, j) = d;
    for (int i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (int k = 0; k < j; ++k) s -= a(i, k) * a(j, k);
      a(i, j) = s / d;
      a(j, i) = 0.0;
    }
  }
  return true;
}

std::vector<double> chol_solve(const Matrix& L, const std::vector<double>& b) {
  const int n = L.rows();
  std::vector<double> y(b);
  for (int i = 0; i < n; ++i) {
    double s = y[i];
    for (int k = 0; k < i; ++k) s -= L(i, k) * y[k];
    y[i] = s / L(i, i);
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = y[i];
    for (int k = i + 1; k < n; ++k) s -= L(k, i) * y[k];
    y[i] = s / L(i, i);
  }
  return y;
}

Matrix chol_inverse(const Matrix& L) {
  const int n = L.rows();
  Matrix inv(n, n);
  std::vector<double> e(n, 0.0);
  for (int j = 0; j < n; ++j) {
    e[j] = 1.0;
    std::vector<double> x = chol_solve(L, e);
    for (int i = 0; i < n; ++i) inv(i, j) = x[i];
    e[j] = 0.0;
  }
  // restore exact symmetry
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double v = 0.5 * (inv(i, j) + inv(j, i));
      inv(i, j) = inv(j, i) = v;
    }
  return inv;
}

std::vector<double> sym_eigenvalues(Matrix a) {
  const int n = a.rows();
  if (n == 0) return {};
  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    if (off < 1e-300) break;
    double thresh = (sweep < 3) ? 0.2 * off / (n * n) : 0.0;
    bool rotated = false;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = a(p, q);
        double scale = std::fabs(a(p, p)) + std::fabs(a(q, q));
        if (std::fabs(apq) <= 1e-18 * scale + 1e-300) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        if (apq * apq <= thresh) continue;
        double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        rotated = true;
      }
    }
    if (!rotated && sweep >= 3) break;
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

double sym_min_eigenvalue(const Matrix& a) {
  auto ev = sym_eigenvalues(a);
  return ev.empty() ? 0.0 : ev.front();
}

}  // namespace linalg

}  // namespace codebounds
