#pragma once

#include <optional>
#include <string>
#include <vector>

#include "valconv/exterior_algebra.hpp"
#include "valconv/polytope.hpp"
#include "valconv/spherical.hpp"

namespace valconv {

/// The current A_{v,N} = [v] x [[N]]: a simple k-vector paired with an
/// oriented spherical polytope of dimension n-1-k.
///
/// (v, N) and (-v, N reversed) describe the same current; the stored pair
/// has the first nonzero Pluecker coordinate of v positive.
class FaceCurrent {
 public:
  FaceCurrent(KVector v, SphericalPolytope n);

  const KVector& v() const { return v_; }
  const SphericalPolytope& normal() const { return n_; }
  int degree() const { return v_.grade(); }

  FaceCurrent scaled(const Rational& c) const { return FaceCurrent(v_.scaled(c), n_); }

  /// Span(v) followed by span(N) is a positive basis of R^n.
  bool positively_oriented() const;

 private:
  KVector v_;
  SphericalPolytope n_;
};

/// Coefficient of [[V]] in the C-current. Exact for polytopes, numeric once
/// join volumes enter.
struct CCoefficient {
  std::optional<Rational> exact;
  double value = 0;
  double error = 0;

  CCoefficient() : exact(Rational(0)) {}
  static CCoefficient from_exact(const Rational& q);
  static CCoefficient from_double(double x, double err);

  CCoefficient operator+(const CCoefficient& o) const;
  CCoefficient scaled(const Rational& c) const;
  std::string to_string() const;
};

/// Current pair (T, C) of a translation-invariant valuation, with T split by
/// face dimension k = 0..n-1.
struct ValuationRep {
  int n = 0;
  std::vector<std::vector<FaceCurrent>> components;
  CCoefficient c;
  Rational alpha = 0;

  explicit ValuationRep(int dim = 0) : n(dim), components(static_cast<std::size_t>(dim)) {}

  ValuationRep operator+(const ValuationRep& o) const;
  ValuationRep operator-(const ValuationRep& o) const;
  ValuationRep scaled(const Rational& s) const;
  std::size_t term_count() const;
};

ValuationRep represent(const Polytope& p);

/// n-th face current of a polytope: A_{v_F, ň(F,P)} with ň(F,P) oriented so
/// that the face orientation followed by span(ň) is positive.
FaceCurrent face_current(const Polytope& p, const Face& f);

struct CanonicalCell {
  Cone cell;
  QVector witness;
  Rational coeff;
};

/// The constructible function sum_j c_j 1_{N_j} for all face currents of one
/// degree whose cones span the same linear space L, written as
/// v_j = c_j w_L with a fixed primitive simple k-vector w_L normal to L.
struct CanonicalGroup {
  int degree = 0;
  std::vector<QVector> span;
  KVector w;
  std::vector<CanonicalCell> cells;
};

struct CanonicalRep {
  int n = 0;
  std::vector<CanonicalGroup> groups;

  bool empty() const { return groups.empty(); }
};

/// Nonzero cells of the facet-hyperplane arrangement, per degree and span.
/// Throws MalformedRep when some v_j is not a multiple of w_L.
CanonicalRep canonical_form(const ValuationRep& rep);

/// Constant value of the degree-0 constructible function. Throws
/// NonConstantAlpha if it is not constant.
Rational compute_alpha(const ValuationRep& rep);

struct RepDifference {
  int degree = -1;  // -1: C or alpha differ
  std::vector<QVector> span;
  QVector witness;
  Rational coeff;
  std::string what;
};

/// First difference between a and b, if any.
std::optional<RepDifference> compare(const ValuationRep& a, const ValuationRep& b, const NumericConfig& cfg);

bool equals(const ValuationRep& a, const ValuationRep& b, const NumericConfig& cfg);

/// Face-dimension-k component scaled by lambda^k, C by lambda^n.
ValuationRep dilate(const ValuationRep& rep, const Rational& lambda);

}  // namespace valconv
