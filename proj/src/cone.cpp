#include "valconv/cone.hpp"

#include <algorithm>
#include <set>

#include "valconv/combinatorics.hpp"
#include "valconv/errors.hpp"

namespace valconv {

std::vector<QVector> unique_directions(std::vector<QVector> v) {
  std::vector<QVector> out;
  out.reserve(v.size());
  for (auto& x : v) {
    if (!is_zero(x)) out.push_back(primitive(x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::vector<QVector> primitive_all(std::vector<QVector> v) {
  for (auto& x : v) x = primitive(x);
  return v;
}

void check_dims(int n, const std::vector<QVector>& v, const char* what) {
  for (const auto& x : v) {
    if (static_cast<int>(x.size()) != n) throw DimensionMismatch(what);
  }
}

}  // namespace

Cone Cone::zero(int n) {
  Cone c;
  c.n_ = n;
  for (int i = 0; i < n; ++i) c.equations_.push_back(unit_vector(n, i));
  return c;
}

Cone Cone::whole_space(int n) {
  std::vector<QVector> gens;
  for (int i = 0; i < n; ++i) {
    gens.push_back(unit_vector(n, i));
    gens.push_back(-unit_vector(n, i));
  }
  return from_generators(n, gens);
}

Cone Cone::from_generators(int n, const std::vector<QVector>& generators) {
  check_dims(n, generators, "Cone::from_generators: generator dimension mismatch");
  std::vector<QVector> gens = unique_directions(generators);
  Cone c;
  c.n_ = n;
  c.span_ = rref(gens, n);
  c.equations_ = primitive_all(nullspace(c.span_.rows, n));
  const int s = c.span_.rank();
  if (s == 0) return c;

  std::set<QVector> facets;
  const int m = static_cast<int>(gens.size());
  for_each_combination(m, s - 1, [&](const std::vector<int>& subset) {
    std::vector<QVector> rows = c.equations_;
    for (int i : subset) rows.push_back(gens[static_cast<std::size_t>(i)]);
    auto normal = nullspace(rows, n);
    if (normal.size() != 1) return true;
    QVector a = normal[0];
    bool pos = false, neg = false;
    for (const auto& g : gens) {
      int sg = sign(dot(a, g));
      pos |= sg > 0;
      neg |= sg < 0;
    }
    if (pos && !neg) facets.insert(primitive(a));
    if (neg && !pos) facets.insert(primitive(-a));
    return true;
  });
  c.facets_.assign(facets.begin(), facets.end());

  std::vector<QVector> rows = c.equations_;
  rows.insert(rows.end(), c.facets_.begin(), c.facets_.end());
  c.lineality_ = primitive_all(nullspace(rows, n));

  std::vector<QVector> projected;
  for (const auto& g : gens) projected.push_back(g - project_onto_span(g, c.lineality_));
  for (const auto& r : unique_directions(std::move(projected))) {
    std::vector<QVector> tight = c.equations_;
    tight.insert(tight.end(), c.lineality_.begin(), c.lineality_.end());
    for (const auto& a : c.facets_) {
      if (dot(a, r) == 0) tight.push_back(a);
    }
    if (rank(tight, n) == n - 1) c.rays_.push_back(r);
  }
  return c;
}

Cone Cone::from_halfspaces(int n, const std::vector<QVector>& inequalities,
                           const std::vector<QVector>& equations) {
  check_dims(n, inequalities, "Cone::from_halfspaces: inequality dimension mismatch");
  check_dims(n, equations, "Cone::from_halfspaces: equation dimension mismatch");
  std::vector<QVector> ineqs = unique_directions(inequalities);
  std::vector<QVector> eqs = span_basis(equations, n);

  std::vector<QVector> all = eqs;
  all.insert(all.end(), ineqs.begin(), ineqs.end());
  std::vector<QVector> lin = nullspace(all, n);

  std::vector<QVector> base = eqs;
  base.insert(base.end(), lin.begin(), lin.end());
  const int d = n - rank(base, n);

  std::set<QVector> rays;
  if (d > 0) {
    for_each_combination(static_cast<int>(ineqs.size()), d - 1, [&](const std::vector<int>& subset) {
      std::vector<QVector> rows = base;
      for (int i : subset) rows.push_back(ineqs[static_cast<std::size_t>(i)]);
      auto ns = nullspace(rows, n);
      if (ns.size() != 1) return true;
      for (const QVector& cand : {ns[0], QVector(-ns[0])}) {
        bool ok = true;
        for (const auto& a : ineqs) {
          if (dot(a, cand) < 0) {
            ok = false;
            break;
          }
        }
        if (ok) rays.insert(primitive(cand));
      }
      return true;
    });
  }

  std::vector<QVector> gens(rays.begin(), rays.end());
  for (const auto& l : lin) {
    gens.push_back(l);
    gens.push_back(-l);
  }
  return from_generators(n, gens);
}

std::vector<QVector> Cone::generators() const {
  std::vector<QVector> g = rays_;
  for (const auto& l : lineality_) {
    g.push_back(l);
    g.push_back(-l);
  }
  return g;
}

std::vector<QVector> Cone::halfspaces() const {
  std::vector<QVector> h = facets_;
  for (const auto& e : equations_) {
    h.push_back(e);
    h.push_back(-e);
  }
  return h;
}

bool Cone::contains(const QVector& x) const {
  for (const auto& e : equations_) {
    if (dot(e, x) != 0) return false;
  }
  for (const auto& a : facets_) {
    if (dot(a, x) < 0) return false;
  }
  return true;
}

bool Cone::in_relative_interior(const QVector& x) const {
  for (const auto& e : equations_) {
    if (dot(e, x) != 0) return false;
  }
  for (const auto& a : facets_) {
    if (dot(a, x) <= 0) return false;
  }
  return true;
}

QVector Cone::relative_interior_point() const {
  QVector p = zero_vector(n_);
  for (const auto& r : rays_) p = p + r;
  if (rays_.empty() && !lineality_.empty()) p = lineality_[0];
  return p;
}

Cone Cone::negated() const {
  Cone c = *this;
  for (auto& r : c.rays_) r = -r;
  for (auto& a : c.facets_) a = -a;
  std::sort(c.rays_.begin(), c.rays_.end());
  std::sort(c.facets_.begin(), c.facets_.end());
  return c;
}

Cone Cone::facet_cone(std::size_t i) const {
  const QVector& a = facets_.at(i);
  std::vector<QVector> gens;
  for (const auto& r : rays_) {
    if (dot(a, r) == 0) gens.push_back(r);
  }
  for (const auto& l : lineality_) {
    gens.push_back(l);
    gens.push_back(-l);
  }
  return from_generators(n_, gens);
}

std::vector<int> Cone::tight_facets(const QVector& x) const {
  std::vector<int> t;
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (dot(facets_[i], x) == 0) t.push_back(static_cast<int>(i));
  }
  return t;
}

std::vector<Cone> Cone::faces() const {
  if (is_zero()) return {};
  // A face is identified by the subset of rays it contains; the lineality
  // space lies in every face.
  std::vector<Cone> out;
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  std::vector<int> all(rays_.size());
  for (std::size_t i = 0; i < rays_.size(); ++i) all[i] = static_cast<int>(i);
  queue.push_back(all);
  seen.insert(all);
  while (!queue.empty()) {
    std::vector<int> cur = std::move(queue.back());
    queue.pop_back();
    std::vector<QVector> gens;
    for (int i : cur) gens.push_back(rays_[static_cast<std::size_t>(i)]);
    for (const auto& l : lineality_) {
      gens.push_back(l);
      gens.push_back(-l);
    }
    out.push_back(from_generators(n_, gens));
    for (const auto& a : facets_) {
      std::vector<int> sub;
      bool cuts = false;
      for (int i : cur) {
        if (dot(a, rays_[static_cast<std::size_t>(i)]) == 0) {
          sub.push_back(i);
        } else {
          cuts = true;
        }
      }
      if (!cuts) continue;
      if (sub.empty() && lineality_.empty()) continue;
      if (seen.insert(sub).second) queue.push_back(sub);
    }
  }
  std::sort(out.begin(), out.end(), [](const Cone& x, const Cone& y) {
    if (x.lin_dim() != y.lin_dim()) return x.lin_dim() > y.lin_dim();
    return x.rays_ < y.rays_;
  });
  return out;
}

namespace {

void triangulate_pointed(const Cone& c, std::vector<std::vector<QVector>>& out) {
  if (c.is_zero()) {
    out.emplace_back();
    return;
  }
  if (c.lin_dim() == 1) {
    out.push_back({c.rays()[0]});
    return;
  }
  const QVector& apex = c.rays()[0];
  for (std::size_t i = 0; i < c.facets().size(); ++i) {
    if (dot(c.facets()[i], apex) == 0) continue;
    std::vector<std::vector<QVector>> sub;
    triangulate_pointed(c.facet_cone(i), sub);
    for (auto& s : sub) {
      s.insert(s.begin(), apex);
      out.push_back(std::move(s));
    }
  }
}

}  // namespace

std::vector<std::vector<QVector>> Cone::triangulation() const {
  std::vector<std::vector<QVector>> pointed;
  if (lineality_.empty()) {
    triangulate_pointed(*this, pointed);
  } else {
    triangulate_pointed(from_generators(n_, rays_), pointed);
  }
  if (lineality_.empty()) return pointed;
  std::vector<std::vector<QVector>> out;
  const std::size_t l = lineality_.size();
  for (const auto& s : pointed) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << l); ++mask) {
      std::vector<QVector> simplex = s;
      for (std::size_t j = 0; j < l; ++j) {
        simplex.push_back((mask >> j) & 1 ? QVector(-lineality_[j]) : lineality_[j]);
      }
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

bool Cone::operator==(const Cone& o) const {
  return n_ == o.n_ && span_.rows == o.span_.rows && facets_ == o.facets_;
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionMismatch("intersect: cones live in different dimensions");
  }
  std::vector<QVector> ineqs = a.facets();
  ineqs.insert(ineqs.end(), b.facets().begin(), b.facets().end());
  std::vector<QVector> eqs = a.equations();
  eqs.insert(eqs.end(), b.equations().begin(), b.equations().end());
  return Cone::from_halfspaces(a.ambient_dim(), ineqs, eqs);
}

}  // namespace valconv
