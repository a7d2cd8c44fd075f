#include "valconv/linalg.hpp"

#include <utility>

#include "valconv/errors.hpp"

namespace valconv {

RowEchelon rref(std::vector<QVector> rows, int ncols) {
  RowEchelon out;
  std::size_t r = 0;
  for (int c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (int j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

int rank(const std::vector<QVector>& rows, int ncols) { return rref(rows, ncols).rank(); }

std::vector<QVector> span_basis(const std::vector<QVector>& vectors, int n) {
  return rref(vectors, n).rows;
}

std::vector<QVector> nullspace(const std::vector<QVector>& rows, int ncols) {
  RowEchelon e = rref(rows, ncols);
  std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<QVector> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    QVector v = zero_vector(ncols);
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      v[static_cast<std::size_t>(e.pivots[i])] = -e.rows[i][static_cast<std::size_t>(f)];
    }
    basis.push_back(std::move(v));
  }
  return span_basis(basis, ncols);
}

Rational determinant(std::vector<QVector> m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw DimensionMismatch("determinant: matrix is not square");
  }
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

int orientation_sign(const std::vector<std::vector<QVector>>& blocks) {
  std::vector<QVector> m;
  for (const auto& b : blocks) m.insert(m.end(), b.begin(), b.end());
  if (m.empty()) return 1;
  return sign(determinant(std::move(m)));
}

QVector rref_coordinates(const RowEchelon& basis, const QVector& x) {
  QVector c(basis.pivots.size());
  for (std::size_t i = 0; i < basis.pivots.size(); ++i) {
    c[i] = x[static_cast<std::size_t>(basis.pivots[i])];
  }
  return c;
}

QVector project_onto_span(const QVector& x, const std::vector<QVector>& basis) {
  if (basis.empty()) return zero_vector(static_cast<int>(x.size()));
  // Solve the normal equations G c = B x with G the Gram matrix.
  const std::size_t k = basis.size();
  std::vector<QVector> aug(k, QVector(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = dot(basis[i], basis[j]);
    aug[i][k] = dot(basis[i], x);
  }
  RowEchelon e = rref(aug, static_cast<int>(k + 1));
  QVector out = zero_vector(static_cast<int>(x.size()));
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    out = out + e.rows[i][k] * basis[static_cast<std::size_t>(e.pivots[i])];
  }
  return out;
}

bool solve_combination(const std::vector<QVector>& columns, const QVector& target,
                       QVector& coeffs) {
  const std::size_t k = columns.size();
  const std::size_t n = target.size();
  std::vector<QVector> aug(n, QVector(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = columns[j][i];
    aug[i][k] = target[i];
  }
  RowEchelon e = rref(aug, static_cast<int>(k + 1));
  coeffs.assign(k, Rational(0));
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == static_cast<int>(k)) return false;
    coeffs[static_cast<std::size_t>(e.pivots[i])] = e.rows[i][k];
  }
  return true;
}

std::vector<QVector> inverse(const std::vector<QVector>& m) {
  const std::size_t n = m.size();
  if (n == 0) return {};
  std::vector<QVector> aug(n, QVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DimensionMismatch("inverse: matrix is not square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  RowEchelon e = rref(aug, static_cast<int>(2 * n));
  if (e.rank() < static_cast<int>(n) || e.pivots[n - 1] >= static_cast<int>(n)) {
    throw InvalidArgument("inverse: matrix is singular");
  }
  std::vector<QVector> inv(n, QVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = e.rows[i][n + j];
  }
  return inv;
}

}  // namespace valconv
