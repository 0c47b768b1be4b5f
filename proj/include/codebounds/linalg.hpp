// SPDX-License-Identifier: Apache-2.0
#ifndef CODEBOUNDS_LINALG_HPP
#define CODEBOUNDS_LINALG_HPP

#include <cstddef>
#include <vector>

namespace codebounds {

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, 0.0) {}
  static Matrix identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }
  double* data() { return a_.data(); }
  const double* data() const { return a_.data(); }

  Matrix transposed() const;
  double max_abs() const;
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int r_ = 0, c_ = 0;
  std::vector<double> a_;
};

namespace linalg {

/// Runtime switch between the serial reference kernels and the OpenMP ones.
/// Parallel kernels compute each output entry with the same fixed-order inner
/// loop as the serial reference, so results are bit-identical.
void set_parallel(bool on);
bool parallel_enabled();

Matrix matmul_serial(const Matrix& a, const Matrix& b);
Matrix matmul_omp(const Matrix& a, const Matrix& b);
Matrix matmul(const Matrix& a, const Matrix& b);  // dispatches on the switch

/// In-place lower Cholesky of a symmetric matrix; false when not positive
/// definite (within a tiny pivot floor).
bool cholesky(Matrix& a);
/// Solve A x = b given the lower Cholesky factor of A.
std::vector<double> chol_solve(const Matrix& chol_lower, const std::vector<double>& b);
/// Invert from the lower Cholesky factor.
Matrix chol_inverse(const Matrix& chol_lower);

/// Eigenvalues (ascending) of a symmetric matrix via cyclic Jacobi.
std::vector<double> sym_eigenvalues(Matrix a);
double sym_min_eigenvalue(const Matrix& a);

}  // namespace linalg

}  // namespace codebounds

#endif
