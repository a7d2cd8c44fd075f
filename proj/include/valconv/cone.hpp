#pragma once

#include <vector>

#include "valconv/linalg.hpp"
#include "valconv/rational.hpp"

namespace valconv {

/// Polyhedral cone in Q^n with its vertex at the origin, kept in both
/// representations:
///
///   V: extreme rays of the pointed part (the cone intersected with the
///      orthogonal complement of its lineality space) plus a basis of the
///      lineality space;
///   H: facet normals a (lying in the linear span, <a, x> >= 0 on the cone)
///      plus a basis of the orthogonal complement of the span.
///
/// All vectors are primitive integer vectors and every list is sorted, so two
/// cones are equal iff their data compare equal.
class Cone {
 public:
  Cone() = default;

  static Cone from_generators(int n, const std::vector<QVector>& generators);
  static Cone from_halfspaces(int n, const std::vector<QVector>& inequalities,
                              const std::vector<QVector>& equations = {});
  static Cone zero(int n);
  static Cone whole_space(int n);

  int ambient_dim() const { return n_; }
  /// Dimension of the linear span.
  int lin_dim() const { return span_.rank(); }
  int lineality_dim() const { return static_cast<int>(lineality_.size()); }

  bool is_zero() const { return lin_dim() == 0; }
  bool is_pointed() const { return lineality_.empty(); }
  bool is_linear_subspace() const { return !is_zero() && facets_.empty(); }

  const std::vector<QVector>& rays() const { return rays_; }
  const std::vector<QVector>& lineality() const { return lineality_; }
  const std::vector<QVector>& facets() const { return facets_; }
  const std::vector<QVector>& equations() const { return equations_; }
  const RowEchelon& span() const { return span_; }

  /// rays followed by +/- each lineality basis vector.
  std::vector<QVector> generators() const;
  /// facet normals followed by +/- each equation.
  std::vector<QVector> halfspaces() const;

  bool contains(const QVector& x) const;
  bool in_relative_interior(const QVector& x) const;
  /// A point in the relative interior, nonzero unless the cone is {0}.
  QVector relative_interior_point() const;

  Cone negated() const;

  /// The face cut out by facet i.
  Cone facet_cone(std::size_t i) const;

  /// Indices of facets whose hyperplane contains x.
  std::vector<int> tight_facets(const QVector& x) const;

  /// Every nonzero face (including the cone itself).
  std::vector<Cone> faces() const;

  /// Simplicial subdivision: each entry lists lin_dim() generators of a
  /// simplicial cone. Pointed part: pulling triangulation from the smallest
  /// ray; the lineality space is split into coordinate orthants of its basis.
  std::vector<std::vector<QVector>> triangulation() const;

  bool operator==(const Cone& o) const;

 private:
  int n_ = 0;
  RowEchelon span_;
  std::vector<QVector> rays_;
  std::vector<QVector> lineality_;
  std::vector<QVector> facets_;
  std::vector<QVector> equations_;
};

/// Intersection of two cones in the same ambient space.
Cone intersect(const Cone& a, const Cone& b);

/// Dedups primitive directions and sorts them.
std::vector<QVector> unique_directions(std::vector<QVector> v);

}  // namespace valconv
