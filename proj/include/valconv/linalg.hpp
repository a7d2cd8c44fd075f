#pragma once

#include <vector>

#include "valconv/rational.hpp"

namespace valconv {

/// Reduced row echelon form. Nonzero rows only; `pivots[i]` is the pivot
/// column of `rows[i]`. The RREF of a row space is unique, so `rows` doubles
/// as a canonical basis of the span.
struct RowEchelon {
  std::vector<QVector> rows;
  std::vector<int> pivots;

  int rank() const { return static_cast<int>(rows.size()); }
};

RowEchelon rref(std::vector<QVector> rows, int ncols);

int rank(const std::vector<QVector>& rows, int ncols);

/// Canonical basis (RREF rows) of the span of `vectors`.
std::vector<QVector> span_basis(const std::vector<QVector>& vectors, int n);

/// Canonical basis (RREF rows) of {x : <r, x> = 0 for every row r}.
std::vector<QVector> nullspace(const std::vector<QVector>& rows, int ncols);

/// Determinant of a square matrix given as a list of rows (or columns).
Rational determinant(std::vector<QVector> m);

/// Sign of det[blocks...] where every block contributes its vectors in order.
int orientation_sign(const std::vector<std::vector<QVector>>& blocks);

/// Coordinates of x in a canonical RREF basis: read off the pivot entries.
QVector rref_coordinates(const RowEchelon& basis, const QVector& x);

/// Orthogonal projection of x onto span(basis); basis need not be orthogonal.
QVector project_onto_span(const QVector& x, const std::vector<QVector>& basis);

/// Solves `sum_i c_i * columns[i] = target`; returns false if no solution.
bool solve_combination(const std::vector<QVector>& columns, const QVector& target,
                       QVector& coeffs);

/// Inverse of a square matrix given as rows. Throws InvalidArgument when singular.
std::vector<QVector> inverse(const std::vector<QVector>& m);

}  // namespace valconv
