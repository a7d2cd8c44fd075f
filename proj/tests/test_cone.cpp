#include <doctest.h>

#include "support.hpp"
#include "valconv/cone.hpp"
#include "valconv/errors.hpp"

using namespace valconv;
using testing_support::iv;
using testing_support::random_vector;

TEST_CASE("cone from generators finds rays and facets") {
  Cone c = Cone::from_generators(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1}), iv({1, 1, 1})});
  CHECK(c.rays().size() == 3);
  CHECK(c.facets().size() == 3);
  CHECK(c.lin_dim() == 3);
  CHECK(c.is_pointed());
  CHECK(c.contains(iv({1, 2, 3})));
  CHECK_FALSE(c.contains(iv({-1, 2, 3})));
  CHECK(c.in_relative_interior(c.relative_interior_point()));
}

TEST_CASE("cone with lineality") {
  Cone half = Cone::from_generators(2, {iv({1, 0}), iv({-1, 0}), iv({0, 1})});
  CHECK(half.lineality_dim() == 1);
  CHECK(half.rays() == std::vector<QVector>{iv({0, 1})});
  CHECK(half.facets() == std::vector<QVector>{iv({0, 1})});
  Cone line = Cone::from_generators(2, {iv({0, 2}), iv({0, -1})});
  CHECK(line.is_linear_subspace());
  CHECK(line.lin_dim() == 1);
  CHECK(line.equations() == std::vector<QVector>{iv({1, 0})});
  CHECK(Cone::whole_space(3).lin_dim() == 3);
  CHECK(Cone::zero(3).is_zero());
}

TEST_CASE("V and H descriptions agree") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 3;
    std::vector<QVector> gens;
    for (int i = 0; i < n + 2; ++i) gens.push_back(random_vector(rng, n));
    Cone c = Cone::from_generators(n, gens);
    Cone h = Cone::from_halfspaces(n, c.facets(), c.equations());
    CHECK(c == h);
    for (const auto& g : c.generators()) CHECK(c.contains(g));
    for (const auto& a : c.halfspaces()) {
      for (const auto& g : gens) CHECK(dot(a, g) >= 0);
    }
  }
}

TEST_CASE("faces of an orthant") {
  Cone c = Cone::from_generators(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})});
  CHECK(c.faces().size() == 7);
  Cone h = Cone::from_generators(3, {iv({1, 0, 0}), iv({-1, 0, 0}), iv({0, 1, 0})});
  CHECK(h.faces().size() == 2);
}

TEST_CASE("triangulation covers the cone with simplicial pieces") {
  Cone c = Cone::from_generators(3, {iv({1, 0, 1}), iv({0, 1, 1}), iv({-1, 0, 1}), iv({0, -1, 1})});
  auto t = c.triangulation();
  CHECK(t.size() == 2);
  for (const auto& s : t) CHECK(rank(s, 3) == 3);
  Cone plane = Cone::from_generators(3, {iv({1, 0, 0}), iv({-1, 0, 0}), iv({0, 1, 0}), iv({0, -1, 0})});
  CHECK(plane.triangulation().size() == 4);
}

TEST_CASE("intersection of cones") {
  Cone a = Cone::from_generators(2, {iv({1, 0}), iv({0, 1})});
  Cone b = Cone::from_generators(2, {iv({1, 1}), iv({-1, 0})});
  Cone d = intersect(a, b);
  CHECK(d == Cone::from_generators(2, {iv({1, 1}), iv({0, 1})}));
  CHECK(intersect(a, a.negated()).is_zero());
  CHECK_THROWS_AS(intersect(a, Cone::zero(3)), DimensionMismatch);
}
