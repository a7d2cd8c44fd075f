#include "valconv/polytope_algebra.hpp"

#include "valconv/errors.hpp"
#include "valconv/parallel.hpp"

namespace valconv {

namespace {

Polytope normalized(const Polytope& p) {
  if (p.vertices().empty()) throw InvalidArgument("PiElement: empty polytope");
  return p.translated(-p.vertices().front());
}

}  // namespace

PiElement PiElement::of(const Polytope& p, const Rational& coeff) {
  PiElement x(p.ambient_dim());
  x.add_term(coeff, p);
  return x;
}

PiElement PiElement::unit(int n) { return of(canonical_hull({zero_vector(n)})); }

void PiElement::add_term(const Rational& coeff, const Polytope& p) {
  if (p.ambient_dim() != n_) throw DimensionMismatch("PiElement: polytope dimension differs");
  if (coeff == 0) return;
  Polytope q = normalized(p);
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->second == q) {
      it->first += coeff;
      if (it->first == 0) terms_.erase(it);
      return;
    }
  }
  terms_.emplace_back(coeff, std::move(q));
}

PiElement PiElement::operator+(const PiElement& o) const {
  if (o.n_ != n_) throw DimensionMismatch("PiElement: dimensions differ");
  PiElement r = *this;
  for (const auto& [c, p] : o.terms_) r.add_term(c, p);
  return r;
}

PiElement PiElement::operator-(const PiElement& o) const { return *this + o.scaled(-1); }

PiElement PiElement::scaled(const Rational& s) const {
  PiElement r(n_);
  if (s == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.first *= s;
  return r;
}

PiElement product(const PiElement& x, const PiElement& y) {
  if (x.ambient_dim() != y.ambient_dim()) throw DimensionMismatch("product: dimensions differ");
  PiElement r(x.ambient_dim());
  for (const auto& [a, p] : x.terms()) {
    for (const auto& [b, q] : y.terms()) r.add_term(a * b, minkowski_sum(p, q));
  }
  return r;
}

ValuationRep embed(const PiElement& x) {
  const auto& terms = x.terms();
  std::vector<ValuationRep> reps(terms.size());
  parallel_for(terms.size(), [&](std::size_t i) { reps[i] = represent(terms[i].second).scaled(terms[i].first); });
  ValuationRep r(x.ambient_dim());
  for (const auto& t : reps) r = r + t;
  return r;
}

bool equal_in_pi(const PiElement& x, const PiElement& y, const NumericConfig& cfg) {
  if (x.ambient_dim() != y.ambient_dim()) throw DimensionMismatch("equal_in_pi: dimensions differ");
  return equals(embed(x), embed(y), cfg);
}

ValuationRep weight_component(const ValuationRep& rep, int k) {
  if (k < 0 || k > rep.n) throw InvalidArgument("weight_component: k out of range");
  ValuationRep r(rep.n);
  if (k < rep.n) {
    r.components[static_cast<std::size_t>(k)] = rep.components[static_cast<std::size_t>(k)];
  } else {
    r.c = rep.c;
  }
  if (k == 0) r.alpha = rep.alpha;
  return r;
}

ValuationRep weight_component(const PiElement& x, int k) { return weight_component(embed(x), k); }

}  // namespace valconv
