#include <doctest.h>

#include <cmath>
#include <numbers>

#include "support.hpp"
#include "valconv/errors.hpp"
#include "valconv/spherical.hpp"

using namespace valconv;
using testing_support::iv;
using testing_support::random_vector;

namespace {

const double pi = std::numbers::pi;

SphericalPolytope sp(int n, std::vector<QVector> gens, int sign = 1) {
  return SphericalPolytope::with_sign(Cone::from_generators(n, gens), sign);
}

// Girard: area of a spherical triangle is its angle excess.
double girard(const std::vector<QVector>& g) {
  std::vector<std::vector<double>> u;
  for (const auto& v : g) {
    auto d = to_doubles(v);
    double r = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
    for (double& x : d) x /= r;
    u.push_back(d);
  }
  auto dotd = [](const std::vector<double>& a, const std::vector<double>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
  };
  double sum = 0;
  for (int i = 0; i < 3; ++i) {
    const auto& a = u[i];
    const auto& b = u[(i + 1) % 3];
    const auto& c = u[(i + 2) % 3];
    std::vector<double> tb(3), tc(3);
    for (int j = 0; j < 3; ++j) {
      tb[j] = b[j] - dotd(a, b) * a[j];
      tc[j] = c[j] - dotd(a, c) * a[j];
    }
    sum += std::acos(dotd(tb, tc) / std::sqrt(dotd(tb, tb) * dotd(tc, tc)));
  }
  return sum - pi;
}

// Plain membership Monte Carlo for a simplicial cone.
std::pair<double, double> plain_mc(const std::vector<QVector>& gens, long count, std::uint64_t seed) {
  const int n = static_cast<int>(gens.size());
  Cone c = Cone::from_generators(n, gens);
  std::vector<std::vector<double>> facets;
  for (const auto& a : c.facets()) facets.push_back(to_doubles(a));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  long hits = 0;
  std::vector<double> x(n);
  for (long s = 0; s < count; ++s) {
    for (auto& xi : x) xi = normal(rng);
    bool in = true;
    for (const auto& a : facets) {
      double d = 0;
      for (int i = 0; i < n; ++i) d += a[i] * x[i];
      if (d < 0) {
        in = false;
        break;
      }
    }
    hits += in ? 1 : 0;
  }
  const double p = static_cast<double>(hits) / count;
  return {p * sphere_volume(n), std::sqrt(p * (1 - p) / count) * sphere_volume(n)};
}

bool pointed_full(const Cone& c, int dim) { return c.is_pointed() && c.lin_dim() == dim; }

SphericalPolytope random_convex(std::mt19937_64& rng, int n, int dim, int extra = 0) {
  while (true) {
    std::vector<QVector> gens;
    for (int i = 0; i < dim + 1 + extra; ++i) gens.push_back(random_vector(rng, n));
    Cone c = Cone::from_generators(n, gens);
    if (dim + 1 < n) {
      // restrict to a random subspace spanned by the first dim+1 generators
      std::vector<QVector> sub(gens.begin(), gens.begin() + dim + 1);
      c = Cone::from_generators(n, sub);
    }
    if (!pointed_full(c, dim + 1)) continue;
    std::uniform_int_distribution<int> coin(0, 1);
    return SphericalPolytope::with_sign(c, coin(rng) ? 1 : -1);
  }
}

bool domain_ok(const SphericalPolytope& i, const SphericalPolytope& j) {
  std::vector<QVector> span;
  for (const auto& r : i.cone().span().rows) {
    span.push_back(r);
    span.push_back(-r);
  }
  return intersect(Cone::from_generators(i.ambient_dim(), span), j.cone()).is_zero();
}

}  // namespace

TEST_CASE("cone intersection") {
  auto left = sp(2, {iv({0, 1}), iv({0, -1}), iv({-1, 0})});
  auto upper = sp(2, {iv({1, 0}), iv({-1, 0}), iv({0, 1})});
  auto d = cone_intersection(left, upper);
  REQUIRE(d.has_value());
  CHECK(d->cone() == Cone::from_generators(2, {iv({0, 1}), iv({-1, 0})}));
  CHECK(d->sign() == 1);

  auto arc1 = sp(3, {iv({1, 0, 1}), iv({1, 0, -1})});
  auto arc2 = sp(3, {iv({1, 1, 0}), iv({1, -1, 0})});
  auto pt = cone_intersection(arc1, arc2);
  REQUIRE(pt.has_value());
  CHECK(pt->dim() == 0);
  CHECK(pt->cone().rays() == std::vector<QVector>{iv({1, 0, 0})});

  auto oct = sp(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})});
  CHECK_FALSE(cone_intersection(oct, antipode(oct)).has_value());
}

TEST_CASE("intersection orientation follows the complement rule") {
  // half plane {y >= 0} with the standard orientation meets the line x = 0
  // oriented by e1 x e2 order: codim data (e1) then span (e2)
  auto half = sp(2, {iv({1, 0}), iv({-1, 0}), iv({0, 1})});
  auto line = SphericalPolytope(Cone::from_generators(2, {iv({0, 1}), iv({0, -1})}), {iv({0, 1})});
  auto d = cone_intersection(half, line);
  REQUIRE(d.has_value());
  CHECK(d->point_sign() == 1);
  auto d2 = cone_intersection(half, line.reversed());
  CHECK(d2->point_sign() == -1);
}

TEST_CASE("boundary") {
  auto arc = sp(2, {iv({1, 0}), iv({0, 1})});
  SphericalChain b = boundary(arc);
  REQUIRE(b.terms.size() == 2);
  for (const auto& [c, p] : b.terms) {
    CHECK(c == 1);
    if (p.cone().rays()[0] == iv({0, 1})) {
      CHECK(p.point_sign() == 1);
    } else {
      CHECK(p.point_sign() == -1);
    }
  }
  CHECK(boundary(sp(2, {iv({1, 1})})).scalar == 1);
  CHECK(boundary(sp(2, {iv({1, 1})}, -1)).scalar == -1);
  auto oct = sp(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})});
  CHECK(boundary(boundary(oct)).is_zero());
  CHECK(boundary(SphericalPolytope::full_sphere(3)).is_zero());
}

TEST_CASE("boundary squares to zero on random polytopes") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 3;
    auto p = random_convex(rng, n, n - 1, 2);
    CHECK(boundary(boundary(p)).is_zero());
  }
}

TEST_CASE("antipode") {
  auto pt = sp(2, {iv({1, 0})});
  auto a = antipode(pt);
  CHECK(a.cone().rays() == std::vector<QVector>{iv({-1, 0})});
  CHECK(a.point_sign() == 1);
  auto arc = sp(2, {iv({1, 0}), iv({1, 3})});
  CHECK(antipode(antipode(arc)) == arc);
  // the antipodal map commutes with the boundary
  SphericalChain lhs = boundary(antipode(arc));
  lhs += -antipode(boundary(arc));
  CHECK(lhs.is_zero());
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 10; ++trial) {
    auto p = random_convex(rng, 3, 2);
    SphericalChain c = boundary(antipode(p));
    c += -antipode(boundary(p));
    CHECK(c.is_zero());
  }
}

TEST_CASE("transversality") {
  auto v = sp(2, {iv({0, 1}), iv({0, -1})});
  auto h = sp(2, {iv({1, 0}), iv({-1, 0})});
  CHECK(transversal(v, h));
  CHECK_FALSE(transversal(h, h));
  auto upper = sp(2, {iv({1, 0}), iv({-1, 0}), iv({0, 1})});
  auto right = sp(2, {iv({0, 1}), iv({0, -1}), iv({1, 0})});
  CHECK(transversal(upper, right));
  CHECK_FALSE(transversal(upper, upper));
  CHECK(transversal(SphericalPolytope::full_sphere(3), sp(3, {iv({1, 2, 3})})));
  // a ray inside a plane: the ray and plane spans do not fill R^3
  CHECK_FALSE(transversal(sp(3, {iv({1, 0, 0}), iv({-1, 0, 0}), iv({0, 1, 0}), iv({0, -1, 0})}),
                          sp(3, {iv({1, 1, 0})})));
}

TEST_CASE("spherical volumes: closed forms") {
  NumericConfig cfg;
  CHECK(spherical_volume(SphericalPolytope::full_sphere(2), cfg).value == doctest::Approx(2 * pi).epsilon(1e-12));
  CHECK(spherical_volume(SphericalPolytope::full_sphere(3), cfg).value == doctest::Approx(4 * pi).epsilon(1e-12));
  auto oct = sp(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})});
  CHECK(std::abs(spherical_volume(oct, cfg).value - pi / 2) < 1e-12);
  CHECK(sphere_volume(4) == doctest::Approx(2 * pi * pi));

  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<QVector> g{random_vector(rng, 3), random_vector(rng, 3), random_vector(rng, 3)};
    if (rank(g, 3) < 3) continue;
    CHECK(std::abs(simplex_volume(g, cfg).value - girard(g)) < 1e-9);
  }
}

TEST_CASE("spherical volumes: Monte Carlo in R^4") {
  NumericConfig cfg = NumericConfig::defaults_for(4);
  cfg.mc_samples = 400'000;
  auto full = spherical_volume(SphericalPolytope::full_sphere(4), cfg);
  CHECK(std::abs(full.value - 2 * pi * pi) < 4 * full.std_error + 1e-9);
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<QVector> g;
    for (int i = 0; i < 4; ++i) g.push_back(random_vector(rng, 4));
    if (rank(g, 4) < 4) continue;
    auto est = simplex_volume(g, cfg);
    auto [oracle, oracle_err] = plain_mc(g, 4'000'000, 99 + trial);
    CHECK(std::abs(est.value - oracle) <= 3 * std::hypot(est.std_error, oracle_err));
  }
}

TEST_CASE("join volume of two points on the circle") {
  NumericConfig cfg;
  auto i = sp(2, {iv({0, 1})});
  auto j = sp(2, {iv({1, 0})});
  // conv orientation: det[e2 | e1] = -1
  CHECK(join_volume(i, j, cfg).value == doctest::Approx(-pi / 2));
  CHECK(join_volume(j, i, cfg).value == doctest::Approx(pi / 2));
  // coincident points: a degenerate arc; antipodal points: undefined
  CHECK(join_volume(i, i, cfg).value == 0);
  CHECK_THROWS_AS(join_volume(i, sp(2, {iv({0, -1})}), cfg), PartialFunctionDomain);
  // spans do not add up to R^3: admissible but of volume zero
  auto ray = sp(3, {iv({1, 0, 0})});
  auto in_plane = sp(3, {iv({0, 1, 0}), iv({1, 1, 0})});
  CHECK(join_volume(ray, in_plane, cfg).value == 0);
  auto through = sp(3, {iv({0, 1, 0}), iv({1, -1, 0})});
  CHECK(join_volume(ray, through, cfg).value == 0);
  auto opposite = sp(3, {iv({0, 1, 0}), iv({-1, -1, 0})});
  CHECK_THROWS_AS(join_volume(ray, opposite, cfg), PartialFunctionDomain);
}

TEST_CASE("symmetry of the join volume under boundaries") {
  NumericConfig cfg;
  std::mt19937_64 rng(35);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 2;
    std::uniform_int_distribution<int> kd(0, n - 2);
    const int k = kd(rng);
    auto i = random_convex(rng, n, k);
    auto j = random_convex(rng, n, n - 1 - k);
    if (!domain_ok(i, j)) continue;
    const double lhs = join_volume(boundary(i), SphericalChain(j), cfg).value;
    const double rhs = join_volume(SphericalChain(i), boundary(j), cfg).value;
    CHECK(std::abs(lhs - (k % 2 == 0 ? 1 : -1) * rhs) < 1e-9);
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("simplicial cones in R^4 against product closed forms") {
  NumericConfig cfg = NumericConfig::defaults_for(4);
  // two orthogonal planar wedges of angles a and b: fraction (a / 2pi)(b / 2pi)
  std::vector<QVector> g{iv({1, 0, 0, 0}), iv({3, 4, 0, 0}), iv({0, 0, 1, 0}), iv({0, 0, -5, 12})};
  const double a = std::atan2(4.0, 3.0), b = std::atan2(12.0, -5.0);
  CHECK(std::abs(simplex_volume(g, cfg).value - a * b / (4 * pi * pi) * 2 * pi * pi) < 1e-12);
  std::vector<QVector> orth{iv({1, 0, 0, 0}), iv({0, 1, 0, 0}), iv({0, 0, 1, 0}), iv({0, 0, 0, 1})};
  CHECK(std::abs(simplex_volume(orth, cfg).value - pi * pi / 8) < 1e-12);
  // a trihedral cone times a half line
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<QVector> g3{random_vector(rng, 3), random_vector(rng, 3), random_vector(rng, 3)};
    if (rank(g3, 3) < 3) continue;
    std::vector<QVector> g4;
    for (const auto& v : g3) g4.push_back({v[0], v[1], v[2], Rational(0)});
    g4.push_back(iv({0, 0, 0, 1}));
    const double expect = girard(g3) / (4 * pi) * 0.5 * 2 * pi * pi;
    CHECK(std::abs(simplex_volume(g4, cfg).value - expect) < 1e-11);
  }
}

TEST_CASE("cone volume factors out a lineality space") {
  NumericConfig cfg = NumericConfig::defaults_for(4);
  Cone half = Cone::from_halfspaces(4, {iv({1, 1, 0, 0})});
  CHECK(std::abs(cone_volume(half, cfg).value - pi * pi) < 1e-12);
  Cone wedge = Cone::from_halfspaces(4, {iv({1, 0, 0, 0}), iv({0, 1, 0, 0})});
  CHECK(std::abs(cone_volume(wedge, cfg).value - pi * pi / 2) < 1e-12);
  Cone oct = Cone::from_halfspaces(4, {iv({1, 0, 0, 0}), iv({0, 1, 0, 0}), iv({0, 0, 1, 0})});
  CHECK(std::abs(cone_volume(oct, cfg).value - pi * pi / 4) < 1e-12);
  CHECK(std::abs(cone_volume(Cone::whole_space(5), cfg).value - sphere_volume(5)) < 1e-12);
}
