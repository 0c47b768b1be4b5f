// SPDX-License-Identifier: Apache-2.0
#include "codebounds/rat_linalg.hpp"

#include <stdexcept>

namespace codebounds {

RatMat rat_identity(int n) {
  RatMat m(n, RatVec(n));
  for (int i = 0; i < n; ++i) m[i][i] = Rational(1);
  return m;
}

RatMat rat_transpose(const RatMat& a) {
  if (a.empty()) return {};
  RatMat t(a[0].size(), RatVec(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

RatMat rat_mul(const RatMat& a, const RatMat& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMat r(n, RatVec(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

RatVec rat_mul_vec(const RatMat& a, const RatVec& x) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j)
      if (!a[i][j].is_zero()) r[i] += a[i][j] * x[j];
  return r;
}

namespace {

// Row echelon reduction of [a | b]; returns pivot column per row.
std::vector<int> row_reduce(RatMat& a, RatMat* b) {
  int rows = static_cast<int>(a.size());
  int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!a[i][c].is_zero()) { p = i; break; }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    if (b) std::swap((*b)[p], (*b)[r]);
    Rational inv = Rational(1) / a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] *= inv;
    if (b)
      for (auto& x : (*b)[r]) x *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rational f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      if (b)
        for (size_t j = 0; j < (*b)[i].size(); ++j) (*b)[i][j] -= f * (*b)[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  return pivot_col;
}

}  // namespace

std::optional<RatVec> rat_solve(RatMat a, RatVec b) {
  size_t n = a.size();
  RatMat bb(n, RatVec(1));
  for (size_t i = 0; i < n; ++i) bb[i][0] = b[i];
  auto piv = row_reduce(a, &bb);
  if (piv.size() != n) return std::nullopt;
  RatVec x(n);
  for (size_t r = 0; r < n; ++r) x[piv[r]] = bb[r][0];
  return x;
}

std::optional<RatVec> rat_solve_any(RatMat a, RatVec b) {
  int rows = static_cast<int>(a.size());
  int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  RatMat bb(rows, RatVec(1));
  for (int i = 0; i < rows; ++i) bb[i][0] = b[i];
  auto piv = row_reduce(a, &bb);
  // Inconsistent if a zero row has nonzero rhs.
  for (int i = static_cast<int>(piv.size()); i < rows; ++i)
    if (!bb[i][0].is_zero()) return std::nullopt;
  RatVec x(cols);
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = bb[r][0];
  return x;
}

std::vector<RatVec> rat_nullspace(RatMat a) {
  int rows = static_cast<int>(a.size());
  int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  auto piv = row_reduce(a, nullptr);
  std::vector<bool> is_pivot(cols, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(cols);
    v[f] = Rational(1);
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool rat_psd(RatMat m) {
  int n = static_cast<int>(m.size());
  for (int k = 0; k < n; ++k) {
    if (m[k][k].sign() < 0) return false;
    if (m[k][k].is_zero()) {
      for (int j = k; j < n; ++j)
        if (!m[k][j].is_zero()) return false;
      continue;
    }
    for (int i = k + 1; i < n; ++i) {
      if (m[k][i].is_zero()) continue;
      Rational f = m[k][i] / m[k][k];
      for (int j = i; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return true;
}

}  // namespace codebounds
