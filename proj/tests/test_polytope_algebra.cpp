#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "valconv/convolution.hpp"
#include "valconv/errors.hpp"
#include "valconv/polytope_algebra.hpp"

using namespace valconv;
using testing_support::iv;
using testing_support::random_vector;

namespace {

const NumericConfig kCfg;

Polytope seg(const QVector& a, const QVector& b) { return canonical_hull({a, b}); }
Polytope square() { return canonical_hull({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})}); }
Polytope tri() { return canonical_hull({iv({0, 0}), iv({1, 0}), iv({0, 1})}); }

}  // namespace

TEST_CASE("pi elements are translation normalized") {
  PiElement x = PiElement::of(square().translated(iv({4, 7})));
  REQUIRE(x.terms().size() == 1);
  CHECK(x.terms()[0].second == square());
  PiElement y = x + PiElement::of(square(), 2);
  REQUIRE(y.terms().size() == 1);
  CHECK(y.terms()[0].first == 3);
  CHECK((y - y).terms().empty());
}

TEST_CASE("product examples") {
  PiElement a = PiElement::of(seg(iv({0, 0}), iv({1, 0})));
  PiElement b = PiElement::of(seg(iv({0, 0}), iv({0, 1})));
  CHECK(equal_in_pi(product(a, b), PiElement::of(square()), kCfg));
  PiElement u = PiElement::unit(2);
  CHECK(equal_in_pi(product(u, PiElement::of(tri())), PiElement::of(tri()), kCfg));
  PiElement t2 = PiElement::of(tri()) + PiElement::of(tri().scaled(-1));
  CHECK(equal_in_pi(product(t2, u), t2, kCfg));
}

TEST_CASE("embed is linear and the point embeds as the identity") {
  ValuationRep e = embed(PiElement::unit(3));
  CHECK(e.alpha == 1);
  CHECK(e.term_count() == 1);
  CHECK(equals(embed(PiElement::of(square(), 2)), represent(square()).scaled(2), kCfg));
}

TEST_CASE("equality in the polytope algebra") {
  CHECK(equal_in_pi(PiElement::of(tri()), PiElement::of(tri().translated(iv({-3, 2}))), kCfg));
  Polytope big = canonical_hull({iv({0, 0}), iv({2, 0}), iv({0, 1}), iv({2, 1})});
  Polytope left = square();
  Polytope right = square().translated(iv({1, 0}));
  Polytope shared = seg(iv({1, 0}), iv({1, 1}));
  CHECK(equal_in_pi(PiElement::of(big), PiElement::of(left) + PiElement::of(right) - PiElement::of(shared), kCfg));
  CHECK_FALSE(equal_in_pi(PiElement::of(square()), PiElement::of(tri()), kCfg));
  auto d = compare(embed(PiElement::of(square())), embed(PiElement::of(tri())), kCfg);
  REQUIRE(d);
  CHECK(d->degree == 1);
}

TEST_CASE("ring laws on random segments and triangles") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 6; ++trial) {
    auto rnd = [&](int k) {
      std::vector<QVector> pts;
      for (int i = 0; i < k; ++i) pts.push_back(random_vector(rng, 2, 5, 2));
      return PiElement::of(canonical_hull(pts));
    };
    PiElement x = rnd(2), y = rnd(3), z = rnd(2);
    CHECK(equal_in_pi(product(x, y), product(y, x), kCfg));
    CHECK(equal_in_pi(product(product(x, y), z), product(x, product(y, z)), kCfg));
    CHECK(equal_in_pi(product(x, y + z), product(x, y) + product(x, z), kCfg));
  }
}

TEST_CASE("weight components") {
  ValuationRep pt = weight_component(PiElement::unit(2), 0);
  CHECK(pt.alpha == 1);
  CHECK(pt.term_count() == 1);
  CHECK(weight_component(PiElement::unit(2), 1).term_count() == 0);
  ValuationRep c = weight_component(PiElement::of(square()), 2);
  CHECK(*c.c.exact == 1);
  CHECK(c.term_count() == 0);
  CHECK_THROWS_AS(weight_component(PiElement::of(square()), 3), InvalidArgument);
  PiElement x = PiElement::of(tri());
  for (int k = 0; k <= 2; ++k) {
    Rational lambda(5, 2);
    Rational lk = 1;
    for (int i = 0; i < k; ++i) lk *= lambda;
    ValuationRep scaled_slice = weight_component(PiElement::of(tri().scaled(lambda)), k);
    ValuationRep slice = weight_component(x, k);
    CHECK(equals(scaled_slice, slice.scaled(lk), kCfg));
  }
}

TEST_CASE("embedding a product is the convolution of embeddings") {
  PiElement x = PiElement::of(tri()) + PiElement::of(seg(iv({0, 0}), iv({2, 1})), 2);
  PiElement y = PiElement::of(seg(iv({0, 0}), iv({1, -3})));
  ValuationRep lhs = embed(product(x, y));
  ValuationRep rhs = convolution(embed(x), embed(y), kCfg);
  CHECK(canonical_form(lhs - rhs).empty());
  CHECK(std::abs(lhs.c.value - rhs.c.value) <= 1e-12);
}
