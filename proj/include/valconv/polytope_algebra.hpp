#pragma once

#include <utility>
#include <vector>

#include "valconv/current_rep.hpp"
#include "valconv/polytope.hpp"

namespace valconv {

/// Formal rational combination of polytope classes [P], modulo translation.
/// Each polytope is translated so its smallest vertex is the origin; equal
/// polytopes are merged and zero coefficients dropped. Two elements with
/// different terms can still be equal in the algebra; use equal_in_pi.
class PiElement {
 public:
  explicit PiElement(int n = 0) : n_(n) {}
  static PiElement of(const Polytope& p, const Rational& coeff = 1);
  /// The unit [pt].
  static PiElement unit(int n);

  int ambient_dim() const { return n_; }
  const std::vector<std::pair<Rational, Polytope>>& terms() const { return terms_; }

  void add_term(const Rational& coeff, const Polytope& p);

  PiElement operator+(const PiElement& o) const;
  PiElement operator-(const PiElement& o) const;
  PiElement scaled(const Rational& s) const;

 private:
  int n_;
  std::vector<std::pair<Rational, Polytope>> terms_;
};

/// Bilinear extension of [P]·[Q] = [P + Q].
PiElement product(const PiElement& x, const PiElement& y);

/// Linear extension of represent().
ValuationRep embed(const PiElement& x);

bool equal_in_pi(const PiElement& x, const PiElement& y, const NumericConfig& cfg);

/// Slice k of embed(x): the face-dimension-k currents for k < n, the C part
/// for k = n. Everything else is zero; alpha is kept only in slice 0.
ValuationRep weight_component(const PiElement& x, int k);
ValuationRep weight_component(const ValuationRep& rep, int k);

}  // namespace valconv
