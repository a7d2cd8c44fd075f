#include <doctest.h>

#include <string>

#include "support.hpp"
#include "valconv/checks.hpp"
#include "valconv/corpus.hpp"
#include "valconv/errors.hpp"
#include "valconv/io.hpp"
#include "valconv/linalg.hpp"
#include "valconv/polytope_algebra.hpp"

using namespace valconv;
using testing_support::iv;

namespace {

const NumericConfig kCfg;

}  // namespace

TEST_CASE("json round trips") {
  CHECK(rational_from_json(rational_to_json(Rational(-7, 3))) == Rational(-7, 3));
  CHECK(rational_from_json(Json("5/10")) == Rational(1, 2));
  CHECK(rational_from_json(Json(4)) == 4);

  std::mt19937_64 rng(5);
  for (int n = 2; n <= 3; ++n) {
    Polytope p = random_polytope(rng, n, PolytopeKind::hull);
    Polytope back = polytope_from_json(parse_json(to_json(p).dump()));
    CHECK(back == p);
    ValuationRep r = represent(p);
    ValuationRep rr = valuation_rep_from_json(parse_json(to_json(r).dump()));
    CHECK(equals(r, rr, kCfg));
    CHECK(rr.alpha == r.alpha);
    SphericalPolytope s = random_spherical(rng, n, n - 2);
    CHECK(spherical_from_json(to_json(s)) == s);
    CHECK(cone_from_json(to_json(s.cone())) == s.cone());
  }
  KVector k = wedge(KVector::from_vector(iv({1, -2, 3})), KVector::from_vector(iv({0, 1, 1})));
  CHECK(kvector_from_json(to_json(k)) == k);

  PiElement x = PiElement::of(canonical_hull({iv({0, 0}), iv({1, 0}), iv({0, 1})}), 2) + PiElement::unit(2);
  CHECK(equal_in_pi(pi_element_from_json(to_json(x)), x, kCfg));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_json("{\n  \"dim\": 2,\n  \"vertices\": [1,\n}", "p.json");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("p.json:4:") != std::string::npos);
  }
  CHECK_THROWS_AS(polytope_from_json(parse_json(R"({"dim": 2, "vertices": [[1, 2, 3]]})")), ParseError);
  CHECK_THROWS_AS(polytope_from_json(parse_json(R"({"dim": 2, "vertices": []})")), ParseError);
  CHECK_THROWS_AS(polytope_from_json(parse_json(R"({"vertices": [[0, 0]]})")), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json("1/0")), ParseError);
  CHECK_THROWS_AS(numeric_config_from_json(parse_json(R"({"tol": -1})")), ParseError);
  CHECK_THROWS_AS(numeric_config_from_json(parse_json(R"({"mc_samples": 10})")), ParseError);
}

TEST_CASE("faces report of the unit square") {
  Json j = faces_report(canonical_hull({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})}));
  CHECK(j["counts"]["0"] == 4);
  CHECK(j["counts"]["1"] == 4);
  CHECK(j["counts"]["2"] == 1);
  CHECK(j["faces"].size() == 9);
}

TEST_CASE("corpus transforms") {
  std::mt19937_64 rng(9);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      auto q = cayley_rotation(rng, n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) CHECK(dot(q[i], q[j]) == (i == j ? 1 : 0));
      }
      auto g = random_unimodular(rng, n);
      Rational d = determinant(g);
      CHECK((d == 1 || d == -1));
    }
  }
  for (const auto kind : {PolytopeKind::segment, PolytopeKind::triangle, PolytopeKind::simplex, PolytopeKind::box,
                          PolytopeKind::hull}) {
    CHECK(parse_kind(to_string(kind)) == kind);
    Polytope p = random_polytope(rng, 3, kind);
    CHECK(p.ambient_dim() == 3);
  }
  CHECK_THROWS_AS(parse_kind("cube"), InvalidArgument);
}

TEST_CASE("selftest reports are reproducible") {
  SelftestOptions opt;
  opt.seed = 7;
  opt.dims = {2};
  opt.trials = 3;
  Json a = run_selftest(opt);
  Json b = run_selftest(opt);
  CHECK(a.dump() == b.dump());
  CHECK(a["passed"].get<bool>());
}
