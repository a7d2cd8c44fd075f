#include "valconv/corpus.hpp"

#include <algorithm>
#include <numeric>

#include "valconv/errors.hpp"
#include "valconv/linalg.hpp"

namespace valconv {

std::string to_string(PolytopeKind k) {
  switch (k) {
    case PolytopeKind::segment:
      return "segment";
    case PolytopeKind::triangle:
      return "triangle";
    case PolytopeKind::simplex:
      return "simplex";
    case PolytopeKind::box:
      return "box";
    case PolytopeKind::hull:
      return "hull";
  }
  return "?";
}

PolytopeKind parse_kind(const std::string& s) {
  for (auto k : {PolytopeKind::segment, PolytopeKind::triangle, PolytopeKind::simplex, PolytopeKind::box,
                 PolytopeKind::hull}) {
    if (to_string(k) == s) return k;
  }
  throw InvalidArgument("unknown polytope kind: " + s);
}

Rational random_rational(std::mt19937_64& rng, int range, int den_max) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, den_max);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

QVector random_point(std::mt19937_64& rng, int n, int range, int den_max) {
  QVector v;
  for (int i = 0; i < n; ++i) v.push_back(random_rational(rng, range, den_max));
  return v;
}

std::vector<QVector> cayley_rotation(std::mt19937_64& rng, int n) {
  std::vector<QVector> a(static_cast<std::size_t>(n), zero_vector(n));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      a[i][j] = random_rational(rng, 3, 2);
      a[j][i] = -a[i][j];
    }
  }
  std::vector<QVector> minus = a, plus = a;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      minus[i][j] = (i == j ? Rational(1) : Rational(0)) - a[i][j];
      plus[i][j] = (i == j ? Rational(1) : Rational(0)) + a[i][j];
    }
  }
  std::vector<QVector> inv = inverse(plus);
  std::vector<QVector> r(static_cast<std::size_t>(n), zero_vector(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) r[i][j] += minus[i][k] * inv[k][j];
    }
  }
  return r;
}

std::vector<QVector> random_unimodular(std::mt19937_64& rng, int n) {
  std::vector<QVector> m;
  for (int i = 0; i < n; ++i) m.push_back(unit_vector(n, i));
  std::uniform_int_distribution<int> idx(0, n - 1), c(-2, 2), coin(0, 1);
  for (int step = 0; step < 2 * n; ++step) {
    const int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const Rational f = c(rng);
    for (int k = 0; k < n; ++k) m[i][k] += f * m[j][k];
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<QVector> out;
  for (int i = 0; i < n; ++i) out.push_back(coin(rng) ? m[perm[i]] : -m[perm[i]]);
  return out;
}

namespace {

Polytope hull_until_dim(std::mt19937_64& rng, int n, int points, int dim) {
  while (true) {
    std::vector<QVector> pts;
    for (int i = 0; i < points; ++i) pts.push_back(random_point(rng, n));
    Polytope p = canonical_hull(pts);
    if (p.dim() == dim) return p;
  }
}

}  // namespace

Polytope random_polytope(std::mt19937_64& rng, int n, PolytopeKind kind) {
  switch (kind) {
    case PolytopeKind::segment:
      return hull_until_dim(rng, n, 2, 1);
    case PolytopeKind::triangle:
      return hull_until_dim(rng, n, 3, std::min(2, n));
    case PolytopeKind::simplex:
      return hull_until_dim(rng, n, n + 1, n);
    case PolytopeKind::box: {
      std::vector<QVector> rot = cayley_rotation(rng, n);
      QVector side;
      std::uniform_int_distribution<int> len(1, 4);
      for (int i = 0; i < n; ++i) side.push_back(len(rng));
      QVector base = random_point(rng, n);
      std::vector<QVector> pts;
      for (int mask = 0; mask < (1 << n); ++mask) {
        QVector x = base;
        for (int i = 0; i < n; ++i) {
          if (mask >> i & 1) x = x + side[i] * rot[i];
        }
        pts.push_back(x);
      }
      return canonical_hull(pts);
    }
    case PolytopeKind::hull: {
      std::uniform_int_distribution<int> count(n + 1, 10);
      return hull_until_dim(rng, n, count(rng), n);
    }
  }
  throw InvalidArgument("random_polytope: unknown kind");
}

SphericalPolytope random_spherical(std::mt19937_64& rng, int n, int dim, int extra) {
  if (dim < 0 || dim > n - 1) throw InvalidArgument("random_spherical: dimension out of range");
  std::uniform_int_distribution<int> coin(0, 1);
  while (true) {
    std::vector<QVector> gens;
    const int count = dim + 1 + (dim + 1 == n ? extra : 0);
    for (int i = 0; i < count; ++i) gens.push_back(random_point(rng, n, 9, 4));
    Cone c = Cone::from_generators(n, gens);
    if (c.lin_dim() != dim + 1 || !c.is_pointed()) continue;
    return SphericalPolytope::with_sign(c, coin(rng) ? 1 : -1);
  }
}

bool join_domain_strict(const SphericalPolytope& i, const SphericalPolytope& j) {
  std::vector<QVector> span;
  for (const auto& r : i.cone().span().rows) {
    span.push_back(r);
    span.push_back(-r);
  }
  return intersect(Cone::from_generators(i.ambient_dim(), span), j.cone()).is_zero();
}

}  // namespace valconv
