#pragma once

#include <memory>
#include <vector>

#include "valconv/cone.hpp"
#include "valconv/exterior_algebra.hpp"
#include "valconv/rational.hpp"

namespace valconv {

/// A face of a polytope, oriented by `orientation_basis`.
struct Face {
  int dim = 0;
  /// Sorted indices into the parent's vertex list.
  std::vector<int> vertex_indices;
  /// Edge vectors of the lexicographically smallest simplex of the face's
  /// triangulation, ordered by vertex index.
  std::vector<QVector> orientation_basis;
  /// v_F: simple k-vector parallel to the face with |v_F| = vol_k(F).
  KVector v;
  /// Outer normal cone; {0} for a full-dimensional polytope's top face.
  Cone normal_cone;
  /// Fan triangulation from the smallest vertex; simplices as vertex indices.
  std::vector<std::vector<int>> triangulation;
};

namespace detail {
struct LatticeCache;
}

/// Convex hull of finitely many points of Q^n in canonical form: vertices
/// only, sorted lexicographically. Lower-dimensional polytopes are allowed.
class Polytope {
 public:
  Polytope() = default;

  int ambient_dim() const { return n_; }
  /// Dimension of the affine hull.
  int dim() const { return dim_; }
  const std::vector<QVector>& vertices() const { return vertices_; }

  /// All faces of dimension 0..dim(), sorted by dimension then vertex set.
  /// Computed on first use; safe to call concurrently.
  const std::vector<Face>& faces() const;
  std::vector<const Face*> faces_of_dim(int k) const;
  /// The face equal to the polytope itself.
  const Face& self_face() const;

  Polytope translated(const QVector& t) const;
  Polytope scaled(const Rational& s) const;
  /// Image under x -> A x with A given by its rows.
  Polytope transformed(const std::vector<QVector>& rows) const;

  bool operator==(const Polytope& o) const { return n_ == o.n_ && vertices_ == o.vertices_; }

 private:
  friend Polytope canonical_hull(const std::vector<QVector>& points);

  int n_ = 0;
  int dim_ = 0;
  std::vector<QVector> vertices_;
  std::shared_ptr<detail::LatticeCache> cache_;
};

/// Vertex-minimal canonical polytope spanned by `points`.
Polytope canonical_hull(const std::vector<QVector>& points);

const std::vector<Face>& face_lattice(const Polytope& p);
const KVector& face_kvector(const Face& f);
Polytope minkowski_sum(const Polytope& p, const Polytope& q);
/// Exact n-volume; zero for lower-dimensional polytopes.
Rational volume(const Polytope& p);
/// Outer normal cone n(F, P). Throws InvalidArgument for the top face of a
/// full-dimensional polytope.
const Cone& normal_cone(const Polytope& p, const Face& f);

}  // namespace valconv
