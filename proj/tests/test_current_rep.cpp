#include <doctest.h>

#include "support.hpp"
#include "valconv/current_rep.hpp"
#include "valconv/errors.hpp"

using namespace valconv;
using testing_support::iv;
using testing_support::random_vector;

namespace {

Polytope box(std::initializer_list<long> lo, std::initializer_list<long> hi) {
  QVector a = iv(lo), b = iv(hi);
  const std::size_t n = a.size();
  std::vector<QVector> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    QVector p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = (mask >> i) & 1 ? b[i] : a[i];
    pts.push_back(p);
  }
  return canonical_hull(pts);
}

const NumericConfig kCfg;

}  // namespace

TEST_CASE("rep of a point") {
  ValuationRep r = represent(canonical_hull({iv({3, -1})}));
  CHECK(r.alpha == 1);
  REQUIRE(r.c.exact);
  CHECK(*r.c.exact == 0);
  REQUIRE(r.components[0].size() == 1);
  CHECK(r.components[1].empty());
  CHECK(r.components[0][0].normal().cone() == Cone::whole_space(2));
  CHECK(compute_alpha(r) == 1);
}

TEST_CASE("rep of the unit square") {
  ValuationRep r = represent(box({0, 0}, {1, 1}));
  CHECK(r.components[0].size() == 4);
  CHECK(r.components[1].size() == 4);
  CHECK(*r.c.exact == 1);
  for (const auto& comp : r.components) {
    for (const auto& f : comp) {
      CHECK(f.positively_oriented());
      CHECK(f.degree() + f.normal().dim() == 1);
    }
  }
  CHECK(compute_alpha(r) == 1);
}

TEST_CASE("rep of a segment") {
  ValuationRep r = represent(canonical_hull({iv({0, 0}), iv({2, 0})}));
  CHECK(r.components[0].size() == 2);
  REQUIRE(r.components[1].size() == 1);
  CHECK(r.components[1][0].v().norm_squared() == 4);
  CHECK(*r.c.exact == 0);
  CHECK(compute_alpha(r) == 1);
}

TEST_CASE("reps are translation invariant and separate non-translates") {
  Polytope sq = box({0, 0}, {1, 1});
  CHECK(equals(represent(sq), represent(sq.translated(iv({5, -2}))), kCfg));
  CHECK(canonical_form(represent(sq) - represent(sq)).empty());
  CHECK_FALSE(equals(represent(sq), represent(canonical_hull({iv({0, 0}), iv({1, 0})})), kCfg));
  std::vector<QVector> oct{iv({1, 0}), iv({2, 0}), iv({3, 1}), iv({3, 2}), iv({2, 3}), iv({1, 3}), iv({0, 2}), iv({0, 1})};
  auto d = compare(represent(sq), represent(canonical_hull(oct)), kCfg);
  REQUIRE(d);
  CHECK(d->degree >= 0);
}

TEST_CASE("inclusion-exclusion of two boxes sharing a facet") {
  for (int n = 2; n <= 3; ++n) {
    std::vector<long> zero(n, 0), one(n, 1), two(n, 1);
    two[0] = 2;
    auto mk = [&](const std::vector<long>& lo, const std::vector<long>& hi) {
      std::vector<QVector> pts;
      for (int mask = 0; mask < (1 << n); ++mask) {
        QVector p(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p[i] = (mask >> i) & 1 ? hi[i] : lo[i];
        pts.push_back(p);
      }
      return canonical_hull(pts);
    };
    std::vector<long> mid_lo(n, 0), mid_hi(n, 1);
    mid_lo[0] = 1;
    Polytope big = mk(zero, two);
    Polytope left = mk(zero, one);
    Polytope right = mk(mid_lo, two);
    Polytope shared = mk(mid_lo, mid_hi);
    ValuationRep lhs = represent(big) + represent(shared);
    ValuationRep rhs = represent(left) + represent(right);
    CHECK(equals(lhs, rhs, kCfg));
    CHECK(compute_alpha(lhs) == 2);
  }
}

TEST_CASE("dilation scales slice k by lambda^k") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 2;
    std::vector<QVector> pts;
    for (int i = 0; i < n + 2; ++i) pts.push_back(random_vector(rng, n));
    Polytope p = canonical_hull(pts);
    Rational lambda(1 + trial, 3);
    lambda.canonicalize();
    CHECK(equals(dilate(represent(p), lambda), represent(p.scaled(lambda)), kCfg));
  }
  CHECK_THROWS_AS(dilate(represent(box({0, 0}, {1, 1})), 0), InvalidArgument);
}

TEST_CASE("alpha must be constant") {
  ValuationRep r = represent(box({0, 0}, {1, 1}));
  r.components[0].pop_back();
  CHECK_THROWS_AS(compute_alpha(r), NonConstantAlpha);
}

TEST_CASE("face current validation") {
  SphericalPolytope full = SphericalPolytope::full_sphere(2);
  CHECK_THROWS_AS(FaceCurrent(KVector::from_vector(iv({1, 0})), full), MalformedRep);
  CHECK_THROWS_AS(FaceCurrent(KVector(2, 0), full), MalformedRep);
  Cone ray = Cone::from_generators(2, {iv({1, 1})});
  CHECK_THROWS_AS(FaceCurrent(KVector::from_vector(iv({1, 0})), SphericalPolytope::with_sign(ray, 1)), MalformedRep);
  FaceCurrent ok(KVector::from_vector(iv({-1, 1})), SphericalPolytope::with_sign(ray, 1));
  CHECK(ok.v().leading_coefficient() > 0);
  CHECK(ok.normal().sign() == -1);
}
