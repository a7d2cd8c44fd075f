#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "valconv/rational.hpp"

namespace testing_support {

inline valconv::QVector qv(std::initializer_list<const char*> xs) {
  valconv::QVector v;
  for (const char* x : xs) v.push_back(valconv::parse_rational(x));
  return v;
}

inline valconv::QVector iv(std::initializer_list<long> xs) {
  valconv::QVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline valconv::Rational random_rational(std::mt19937_64& rng, int num_range, int den_max) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_max);
  valconv::Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline valconv::QVector random_vector(std::mt19937_64& rng, int n, int num_range = 9, int den_max = 4) {
  valconv::QVector v;
  for (int i = 0; i < n; ++i) v.push_back(random_rational(rng, num_range, den_max));
  return v;
}

}  // namespace testing_support
