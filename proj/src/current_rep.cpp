#include "valconv/current_rep.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "valconv/errors.hpp"
#include "valconv/linalg.hpp"

namespace valconv {

FaceCurrent::FaceCurrent(KVector v, SphericalPolytope n) : v_(std::move(v)), n_(std::move(n)) {
  const int dim = n_.ambient_dim();
  if (v_.dim() != dim) throw DimensionMismatch("FaceCurrent: v and N live in different dimensions");
  if (v_.grade() + n_.dim() != dim - 1) throw MalformedRep("FaceCurrent: grade(v) + dim(N) must be n - 1");
  if (v_.is_zero()) throw MalformedRep("FaceCurrent: v is zero");
  if (v_.grade() > 0) {
    if (!is_simple(v_)) throw MalformedRep("FaceCurrent: v is not simple");
    for (const auto& a : kvector_span(v_)) {
      for (const auto& b : n_.cone().span().rows) {
        if (dot(a, b) != 0) throw MalformedRep("FaceCurrent: span(N) is not orthogonal to v");
      }
    }
  }
  if (v_.leading_coefficient() < 0) {
    v_ = -v_;
    n_ = n_.reversed();
  }
}

bool FaceCurrent::positively_oriented() const {
  std::vector<QVector> basis = kvector_span(v_);
  int s = sign(v_.leading_coefficient());
  if (!basis.empty()) {
    s = sign(*v_.ratio_to(simple_kvector_from_basis(basis, v_.dim())));
  }
  return s * orientation_sign({basis, n_.orientation_basis()}) > 0;
}

CCoefficient CCoefficient::from_exact(const Rational& q) {
  CCoefficient c;
  c.exact = q;
  c.value = to_double(q);
  return c;
}

CCoefficient CCoefficient::from_double(double x, double err) {
  CCoefficient c;
  c.exact.reset();
  c.value = x;
  c.error = err;
  return c;
}

CCoefficient CCoefficient::operator+(const CCoefficient& o) const {
  if (exact && o.exact) return from_exact(*exact + *o.exact);
  return from_double(value + o.value, error + o.error);
}

CCoefficient CCoefficient::scaled(const Rational& s) const {
  if (exact) return from_exact(*exact * s);
  return from_double(value * to_double(s), error * std::abs(to_double(s)));
}

std::string CCoefficient::to_string() const {
  if (exact) return valconv::to_string(*exact);
  std::ostringstream os;
  os.precision(17);
  os << value;
  return os.str();
}

ValuationRep ValuationRep::operator+(const ValuationRep& o) const {
  if (n != o.n) throw DimensionMismatch("ValuationRep: dimensions differ");
  ValuationRep r = *this;
  for (int k = 0; k < n; ++k) {
    auto& dst = r.components[static_cast<std::size_t>(k)];
    const auto& src = o.components[static_cast<std::size_t>(k)];
    dst.insert(dst.end(), src.begin(), src.end());
  }
  r.c = c + o.c;
  r.alpha = alpha + o.alpha;
  return r;
}

ValuationRep ValuationRep::scaled(const Rational& s) const {
  ValuationRep r(n);
  if (s == 0) return r;
  for (int k = 0; k < n; ++k) {
    for (const auto& f : components[static_cast<std::size_t>(k)]) {
      r.components[static_cast<std::size_t>(k)].push_back(f.scaled(s));
    }
  }
  r.c = c.scaled(s);
  r.alpha = alpha * s;
  return r;
}

ValuationRep ValuationRep::operator-(const ValuationRep& o) const { return *this + o.scaled(-1); }

std::size_t ValuationRep::term_count() const {
  std::size_t t = 0;
  for (const auto& comp : components) t += comp.size();
  return t;
}

FaceCurrent face_current(const Polytope& p, const Face& f) {
  const Cone& cone = normal_cone(p, f);
  const int s = orientation_sign({f.orientation_basis, cone.span().rows});
  return FaceCurrent(f.v, SphericalPolytope::with_sign(cone, s));
}

ValuationRep represent(const Polytope& p) {
  const int n = p.ambient_dim();
  ValuationRep rep(n);
  for (const auto& f : p.faces()) {
    if (f.dim >= n) continue;
    rep.components[static_cast<std::size_t>(f.dim)].push_back(face_current(p, f));
  }
  rep.c = CCoefficient::from_exact(volume(p));
  rep.alpha = 1;
  return rep;
}

namespace {

struct Term {
  Rational coeff;
  const Cone* cone;
};

struct CellValue {
  Cone cell;
  QVector witness;
  Rational value;
};

bool cuts(const Cone& c, const QVector& h) {
  bool pos = false, neg = false;
  for (const auto& g : c.generators()) {
    const int s = sign(dot(h, g));
    pos |= s > 0;
    neg |= s < 0;
    if (pos && neg) return true;
  }
  return false;
}

Cone halfspace_cut(const Cone& c, const QVector& h) {
  std::vector<QVector> ineqs = c.facets();
  ineqs.push_back(h);
  return Cone::from_halfspaces(c.ambient_dim(), ineqs, c.equations());
}

// All cells of the arrangement of every facet hyperplane of the group's cones
// that lie in the support, each listed once with the function value there.
std::vector<CellValue> arrangement_cells(const std::vector<Term>& raw) {
  // identical cones are merged first; exact cancellation is the common case
  std::vector<Term> terms;
  {
    std::map<std::pair<std::vector<QVector>, std::vector<QVector>>, std::size_t> index;
    for (const auto& t : raw) {
      auto key = std::make_pair(t.cone->span().rows, t.cone->facets());
      auto [it, inserted] = index.emplace(key, terms.size());
      if (inserted) {
        terms.push_back(t);
      } else {
        terms[it->second].coeff += t.coeff;
      }
    }
    std::erase_if(terms, [](const Term& t) { return t.coeff == 0; });
  }
  std::vector<QVector> hyperplanes;
  for (const auto& t : terms) {
    for (const auto& a : t.cone->facets()) hyperplanes.push_back(primitive_up_to_sign(a));
  }
  std::sort(hyperplanes.begin(), hyperplanes.end());
  hyperplanes.erase(std::unique(hyperplanes.begin(), hyperplanes.end()), hyperplanes.end());

  std::vector<CellValue> out;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    std::vector<Cone> cells{*terms[j].cone};
    for (const auto& h : hyperplanes) {
      if (!cuts(*terms[j].cone, h)) continue;
      std::vector<Cone> next;
      for (auto& c : cells) {
        if (cuts(c, h)) {
          next.push_back(halfspace_cut(c, h));
          next.push_back(halfspace_cut(c, -h));
        } else {
          next.push_back(std::move(c));
        }
      }
      cells = std::move(next);
    }
    for (auto& c : cells) {
      QVector x = c.relative_interior_point();
      bool seen = false;
      for (std::size_t i = 0; i < j && !seen; ++i) seen = terms[i].cone->contains(x);
      if (seen) continue;
      Rational value = 0;
      for (const auto& t : terms) {
        if (t.cone->contains(x)) value += t.coeff;
      }
      out.push_back({std::move(c), std::move(x), value});
    }
  }
  return out;
}

struct Group {
  std::vector<QVector> span;
  KVector w;
  std::vector<Term> terms;
};

std::map<std::vector<QVector>, Group> group_degree(const ValuationRep& rep, int k) {
  std::map<std::vector<QVector>, Group> groups;
  for (const auto& f : rep.components[static_cast<std::size_t>(k)]) {
    const auto& span = f.normal().cone().span().rows;
    auto it = groups.find(span);
    if (it == groups.end()) {
      Group g;
      g.span = span;
      std::vector<QVector> perp = nullspace(span, rep.n);
      g.w = simple_kvector_from_basis(perp, rep.n);
      it = groups.emplace(span, std::move(g)).first;
    }
    auto c = f.v().ratio_to(it->second.w);
    if (!c) throw MalformedRep("canonical_form: v is not normal to the span of its cone");
    it->second.terms.push_back({*c * f.normal().sign(), &f.normal().cone()});
  }
  return groups;
}

bool cone_less(const Cone& a, const Cone& b) {
  if (a.span().rows != b.span().rows) return a.span().rows < b.span().rows;
  return a.facets() < b.facets();
}

}  // namespace

CanonicalRep canonical_form(const ValuationRep& rep) {
  CanonicalRep out;
  out.n = rep.n;
  for (int k = 0; k < rep.n; ++k) {
    for (auto& [span, g] : group_degree(rep, k)) {
      CanonicalGroup cg;
      cg.degree = k;
      cg.span = span;
      cg.w = g.w;
      for (auto& cv : arrangement_cells(g.terms)) {
        if (cv.value != 0) cg.cells.push_back({std::move(cv.cell), std::move(cv.witness), cv.value});
      }
      if (cg.cells.empty()) continue;
      std::sort(cg.cells.begin(), cg.cells.end(),
                [](const CanonicalCell& a, const CanonicalCell& b) { return cone_less(a.cell, b.cell); });
      out.groups.push_back(std::move(cg));
    }
  }
  return out;
}

Rational compute_alpha(const ValuationRep& rep) {
  if (rep.n == 0) return rep.alpha;
  auto groups = group_degree(rep, 0);
  if (groups.empty()) return 0;
  auto cells = arrangement_cells(groups.begin()->second.terms);
  if (cells.empty()) return 0;
  const Rational value = cells.front().value;
  for (const auto& c : cells) {
    if (c.value != value) throw NonConstantAlpha("degree-0 constructible function is not constant");
  }
  if (value == 0) return 0;
  // The support is all of R^n iff every facet of a support cell is shared by
  // exactly two support cells.
  std::map<std::pair<std::vector<QVector>, std::vector<QVector>>, int> facet_count;
  for (const auto& c : cells) {
    for (std::size_t i = 0; i < c.cell.facets().size(); ++i) {
      Cone f = c.cell.facet_cone(i);
      ++facet_count[{f.span().rows, f.facets()}];
    }
  }
  for (const auto& [key, count] : facet_count) {
    if (count != 2) throw NonConstantAlpha("degree-0 constructible function vanishes on part of the sphere");
  }
  return value;
}

std::optional<RepDifference> compare(const ValuationRep& a, const ValuationRep& b, const NumericConfig& cfg) {
  if (a.n != b.n) throw DimensionMismatch("compare: dimensions differ");
  CanonicalRep diff = canonical_form(a - b);
  if (!diff.empty()) {
    const auto& g = diff.groups.front();
    RepDifference d;
    d.degree = g.degree;
    d.span = g.span;
    d.witness = g.cells.front().witness;
    d.coeff = g.cells.front().coeff;
    d.what = "face currents differ";
    return d;
  }
  if (a.alpha != b.alpha) {
    RepDifference d;
    d.coeff = a.alpha - b.alpha;
    d.what = "alpha differs";
    return d;
  }
  bool c_equal;
  if (a.c.exact && b.c.exact) {
    c_equal = *a.c.exact == *b.c.exact;
  } else {
    c_equal = std::abs(a.c.value - b.c.value) <= cfg.tol;
  }
  if (!c_equal) {
    RepDifference d;
    d.what = "C differs: " + a.c.to_string() + " vs " + b.c.to_string();
    return d;
  }
  return std::nullopt;
}

bool equals(const ValuationRep& a, const ValuationRep& b, const NumericConfig& cfg) {
  return !compare(a, b, cfg).has_value();
}

ValuationRep dilate(const ValuationRep& rep, const Rational& lambda) {
  if (lambda <= 0) throw InvalidArgument("dilate: lambda must be positive");
  ValuationRep r(rep.n);
  Rational power = 1;
  for (int k = 0; k < rep.n; ++k) {
    for (const auto& f : rep.components[static_cast<std::size_t>(k)]) {
      r.components[static_cast<std::size_t>(k)].push_back(f.scaled(power));
    }
    power *= lambda;
  }
  r.c = rep.c.scaled(power);
  r.alpha = rep.alpha;
  return r;
}

}  // namespace valconv
