#include <doctest.h>

#include <functional>

#include "support.hpp"
#include "valconv/errors.hpp"
#include "valconv/exterior_algebra.hpp"
#include "valconv/linalg.hpp"

using namespace valconv;
using testing_support::iv;
using testing_support::random_vector;

namespace {

KVector e(int n, int i) { return KVector::basis(n, {i}); }

KVector random_kvector(std::mt19937_64& rng, int n, int k) {
  KVector a(n, k);
  std::uniform_int_distribution<int> coin(0, 2);
  std::vector<int> idx;
  // every k-subset gets a random coefficient, roughly a third of them zero
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(idx.size()) == k) {
      if (coin(rng) != 0) a.add_term(idx, testing_support::random_rational(rng, 5, 3));
      return;
    }
    for (int i = start; i < n; ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
  return a;
}

}  // namespace

TEST_CASE("wedge basics") {
  KVector w = wedge(e(2, 0), e(2, 1));
  CHECK(w.grade() == 2);
  CHECK(w.coefficient({0, 1}) == 1);

  CHECK(wedge(wedge(e(3, 0), e(3, 1)), e(3, 0)).is_zero());

  KVector a = KVector::from_vector(iv({2, 3, 0}));
  KVector r = wedge(a, e(3, 2));
  KVector expected = KVector::basis(3, {0, 2}, 2) + KVector::basis(3, {1, 2}, 3);
  CHECK(r == expected);
}

TEST_CASE("wedge past top degree is the canonical zero") {
  KVector a = wedge(e(2, 0), e(2, 1));
  KVector z = wedge(a, e(2, 0));
  CHECK(z.is_zero());
  CHECK(z.grade() == 2);
  CHECK(z == KVector(2, 0));
}

TEST_CASE("top coefficient") {
  CHECK(top_coefficient(wedge(wedge(e(3, 0), e(3, 1)), e(3, 2))) == 1);
  CHECK(top_coefficient(KVector::basis(2, {0, 1}, Rational(-5, 2))) == Rational(-5, 2));
  CHECK(top_coefficient(wedge(KVector::from_vector(iv({1, 1})), e(2, 1))) == 1);
  CHECK_THROWS_AS(top_coefficient(e(3, 0)), InvalidArgument);
}

TEST_CASE("simple k-vector from a basis") {
  std::vector<QVector> frame{iv({1, 0}), iv({0, 1})};
  CHECK(simple_kvector_from_basis(frame, 2) == wedge(e(2, 0), e(2, 1)));
  std::vector<QVector> dep{iv({1, 0}), iv({2, 0})};
  CHECK(simple_kvector_from_basis(dep, 2).is_zero());
  std::vector<QVector> seg{iv({3, 4})};
  KVector s = simple_kvector_from_basis(seg, 2);
  CHECK(s.norm_squared() == 25);
  std::vector<QVector> mixed{iv({1, 0}), iv({0, 1, 0})};
  CHECK_THROWS_AS(simple_kvector_from_basis(mixed, 2), DimensionMismatch);
}

TEST_CASE("wedge is graded anticommutative and associative") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 4;
    std::uniform_int_distribution<int> g(0, n);
    KVector a = random_kvector(rng, n, g(rng));
    KVector b = random_kvector(rng, n, g(rng));
    KVector c = random_kvector(rng, n, g(rng));
    if (a.grade() + b.grade() <= n) {
      const int s = (a.grade() * b.grade()) % 2 == 0 ? 1 : -1;
      CHECK(wedge(a, b) == wedge(b, a).scaled(s));
    }
    if (a.grade() + b.grade() + c.grade() <= n) {
      CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    }
  }
}

TEST_CASE("norm of a simple k-vector is the Gram determinant") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 3;
    const int k = 1 + trial % n;
    std::vector<QVector> frame;
    for (int i = 0; i < k; ++i) frame.push_back(random_vector(rng, n));
    std::vector<QVector> gram(static_cast<std::size_t>(k), QVector(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) gram[i][j] = dot(frame[i], frame[j]);
    }
    CHECK(simple_kvector_from_basis(frame, n).norm_squared() == determinant(gram));
  }
}

TEST_CASE("span and simplicity of k-vectors") {
  std::vector<QVector> frame{iv({1, 2, 0, 1}), iv({0, 1, 1, 1})};
  KVector v = simple_kvector_from_basis(frame, 4);
  CHECK(is_simple(v));
  CHECK(span_basis(kvector_span(v), 4) == span_basis(frame, 4));
  KVector nonsimple = KVector::basis(4, {0, 1}) + KVector::basis(4, {2, 3});
  CHECK_FALSE(is_simple(nonsimple));
  CHECK(v.ratio_to(v.scaled(3)) == Rational(1, 3));
  CHECK_FALSE(v.ratio_to(nonsimple).has_value());
}
