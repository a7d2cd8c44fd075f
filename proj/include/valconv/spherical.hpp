#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "valconv/cone.hpp"
#include "valconv/rational.hpp"

namespace valconv {

struct NumericConfig {
  double tol = 1e-9;
  long mc_samples = 2'000'000;
  std::uint64_t seed = 42;

  /// Default tolerance for ambient dimension n: 1e-9 up to n = 3, 1e-3 above.
  static NumericConfig defaults_for(int n);
};

/// Oriented spherical polytope N = cone ∩ S^{n-1}, of dimension lin_dim - 1.
///
/// The orientation is an orientation of span(cone), stored as a sign relative
/// to the canonical (RREF) basis of that span. A point (dim 0) is then
/// positively oriented iff its oriented basis vector points along the ray.
class SphericalPolytope {
 public:
  SphericalPolytope() = default;
  /// Orientation given by an ordered basis of span(cone).
  SphericalPolytope(Cone cone, const std::vector<QVector>& orientation_basis);
  static SphericalPolytope with_sign(Cone cone, int sign);
  /// The whole sphere with the standard orientation of R^n.
  static SphericalPolytope full_sphere(int n);

  const Cone& cone() const { return cone_; }
  int ambient_dim() const { return cone_.ambient_dim(); }
  int dim() const { return cone_.lin_dim() - 1; }
  int sign() const { return sign_; }
  /// Canonical span basis with the first vector negated when sign() < 0.
  std::vector<QVector> orientation_basis() const;
  /// +1/-1 for a pointed 0-dimensional polytope (an oriented point).
  int point_sign() const;

  SphericalPolytope reversed() const { return with_sign(cone_, -sign_); }

  bool operator==(const SphericalPolytope& o) const { return sign_ == o.sign_ && cone_ == o.cone_; }

 private:
  Cone cone_;
  int sign_ = 1;
};

/// Formal rational combination of oriented spherical polytopes plus a scalar
/// (the boundary of an oriented point is its sign).
struct SphericalChain {
  std::vector<std::pair<Rational, SphericalPolytope>> terms;
  Rational scalar = 0;

  SphericalChain() = default;
  explicit SphericalChain(SphericalPolytope p) { terms.emplace_back(1, std::move(p)); }

  SphericalChain& operator+=(const SphericalChain& o);
  SphericalChain scaled(const Rational& c) const;
  SphericalChain operator-() const { return scaled(-1); }

  /// Orientation folded into the coefficient, equal cones merged, zeros dropped.
  SphericalChain canonicalized() const;
  bool is_zero() const;
};

/// Sign of det of `vectors` written in the coordinates of the canonical basis `span`.
int relative_orientation(const RowEchelon& span, const std::vector<QVector>& vectors);

/// N1 ∩ N2 oriented by the complement rule (see README); nullopt if {0}.
std::optional<SphericalPolytope> cone_intersection(const SphericalPolytope& a,
                                                   const SphericalPolytope& b);

SphericalChain boundary(const SphericalPolytope& p);
SphericalChain boundary(const SphericalChain& c);

SphericalPolytope antipode(const SphericalPolytope& p);
SphericalChain antipode(const SphericalChain& c);

/// Every pair of faces whose relative interiors meet away from 0 spans R^n.
bool transversal(const SphericalPolytope& a, const SphericalPolytope& b);

struct VolumeEstimate {
  double value = 0;
  double std_error = 0;
  /// Set when a Monte Carlo standard error exceeds the configured tolerance.
  bool warning = false;

  VolumeEstimate& operator+=(const VolumeEstimate& o);
};

/// Volume of the unit sphere S^{n-1}.
double sphere_volume(int n);

/// Unsigned (n-1)-volume of a simplicial cone's trace on the sphere;
/// `generators` are n independent vectors of R^n.
VolumeEstimate simplex_volume(const std::vector<QVector>& generators, const NumericConfig& cfg);

/// Unsigned volume of K ∩ S^{n-1} for a full-dimensional cone K. A lineality
/// space L is factored out exactly when dim L^⊥ <= 3.
VolumeEstimate cone_volume(const Cone& k, const NumericConfig& cfg);

/// Unsigned volume of a top-dimensional spherical polytope.
VolumeEstimate spherical_volume(const SphericalPolytope& p, const NumericConfig& cfg);

/// Signed volume of conv(I, J) for single polytopes with dim I + dim J = n - 2.
VolumeEstimate join_volume(const SphericalPolytope& i, const SphericalPolytope& j,
                           const NumericConfig& cfg);

/// Bilinear extension to chains; scalar parts act as conv(eps, J) = J^eps.
VolumeEstimate join_volume(const SphericalChain& i, const SphericalChain& j, const NumericConfig& cfg);

}  // namespace valconv
