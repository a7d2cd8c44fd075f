#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "valconv/polytope.hpp"
#include "valconv/spherical.hpp"

namespace valconv {

enum class PolytopeKind { segment, triangle, simplex, box, hull };

std::string to_string(PolytopeKind k);
/// Throws InvalidArgument for an unknown name.
PolytopeKind parse_kind(const std::string& s);

/// Small random rational, numerator in [-range, range], denominator in [1, den_max].
Rational random_rational(std::mt19937_64& rng, int range = 6, int den_max = 3);
QVector random_point(std::mt19937_64& rng, int n, int range = 6, int den_max = 3);

/// Rational rotation (I - A)(I + A)^{-1} for a random skew-symmetric A.
std::vector<QVector> cayley_rotation(std::mt19937_64& rng, int n);

/// Integer matrix of determinant +1 or -1, as rows.
std::vector<QVector> random_unimodular(std::mt19937_64& rng, int n);

/// Random polytope of the given kind; boxes come rotated by a Cayley rotation,
/// hulls use between n + 1 and 10 points.
Polytope random_polytope(std::mt19937_64& rng, int n, PolytopeKind kind);

/// Random pointed oriented spherical simplex of dimension `dim` (dim + 1
/// independent generators, plus `extra` further generators when dim = n - 1).
SphericalPolytope random_spherical(std::mt19937_64& rng, int n, int dim, int extra = 0);

/// span(I) meets J only at 0: both sides of the boundary symmetry identity
/// are then defined.
bool join_domain_strict(const SphericalPolytope& i, const SphericalPolytope& j);

}  // namespace valconv
