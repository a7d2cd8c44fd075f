#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "valconv/rational.hpp"

namespace valconv {

/// Homogeneous element of the exterior algebra over Q^n.
///
/// Stored sparsely as a map from strictly increasing index tuples (0-based)
/// to nonzero coefficients. The zero element has an empty map; two zero
/// KVectors of the same ambient dimension compare equal whatever their
/// nominal grade.
class KVector {
 public:
  using Index = std::vector<int>;

  KVector() = default;
  KVector(int dim, int grade);

  static KVector scalar(int dim, const Rational& c);
  static KVector basis(int dim, Index idx, const Rational& c = 1);
  static KVector from_vector(const QVector& v);

  int dim() const { return dim_; }
  int grade() const { return grade_; }
  const std::map<Index, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Index& idx) const;

  /// Adds c to the coefficient of e_idx. idx must be strictly increasing.
  void add_term(const Index& idx, const Rational& c);

  KVector operator+(const KVector& o) const;
  KVector operator-(const KVector& o) const;
  KVector operator-() const;
  KVector scaled(const Rational& s) const;

  bool operator==(const KVector& o) const;

  /// Euclidean norm squared (sum of squared Pluecker coordinates).
  Rational norm_squared() const;

  /// Coefficient of the lexicographically first stored term (0 for zero).
  Rational leading_coefficient() const;

  /// c with *this == c * other, if such a rational exists.
  std::optional<Rational> ratio_to(const KVector& other) const;

 private:
  int dim_ = 0;
  int grade_ = 0;
  std::map<Index, Rational> terms_;
};

/// Graded-anticommutative wedge product. Grades summing past n give the
/// canonical zero of grade n.
KVector wedge(const KVector& a, const KVector& b);

/// Coefficient on e_1 ^ ... ^ e_n. Requires grade n.
Rational top_coefficient(const KVector& a);

/// v_1 ^ ... ^ v_k for vectors in Q^dim (k = 0 gives the scalar 1).
KVector simple_kvector_from_basis(std::span<const QVector> vectors, int dim);

/// Euclidean pairing <a, b> = sum of coefficient products over shared indices.
Rational pairing(const KVector& a, const KVector& b);

/// True iff a is nonzero and decomposable (a product of grade-1 vectors).
bool is_simple(const KVector& a);

/// For a simple nonzero a, the canonical basis of its k-dimensional span
/// {x : x ^ a = 0}. For grade 0 the span is {0}.
std::vector<QVector> kvector_span(const KVector& a);

}  // namespace valconv
