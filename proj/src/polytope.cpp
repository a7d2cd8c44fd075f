#include "valconv/polytope.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "valconv/combinatorics.hpp"
#include "valconv/errors.hpp"
#include "valconv/linalg.hpp"

namespace valconv {

namespace detail {

struct LatticeCache {
  std::once_flag once;
  std::vector<Face> faces;
};

}  // namespace detail

namespace {

// Affine frame of a point set: base point plus canonical RREF basis of the
// direction space. Coordinates of x are (x - base) at the pivot columns.
struct AffineFrame {
  QVector base;
  RowEchelon directions;

  QVector coords(const QVector& x) const { return rref_coordinates(directions, x - base); }
};

AffineFrame affine_frame(const std::vector<QVector>& pts) {
  AffineFrame f;
  f.base = pts.front();
  std::vector<QVector> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - f.base);
  f.directions = rref(std::move(diffs), static_cast<int>(f.base.size()));
  return f;
}

struct FacetData {
  std::vector<int> members;  // indices of points on the facet
  QVector normal;            // outward, in frame coordinates
};

// Facets of the full-dimensional hull of `y` (points in Q^d), by testing
// every affinely independent d-subset.
std::vector<FacetData> enumerate_facets(const std::vector<QVector>& y, int d) {
  std::map<std::vector<int>, QVector> found;
  const int m = static_cast<int>(y.size());
  for_each_combination(m, d, [&](const std::vector<int>& subset) {
    const QVector& p0 = y[static_cast<std::size_t>(subset[0])];
    std::vector<QVector> rows;
    for (std::size_t j = 1; j < subset.size(); ++j) {
      rows.push_back(y[static_cast<std::size_t>(subset[j])] - p0);
    }
    auto ns = nullspace(rows, d);
    if (ns.size() != 1) return true;
    const QVector& a = ns[0];
    const Rational b = dot(a, p0);
    int side = 0;
    std::vector<int> members;
    for (int i = 0; i < m; ++i) {
      int s = sign(dot(a, y[static_cast<std::size_t>(i)]) - b);
      if (s == 0) {
        members.push_back(i);
      } else if (side == 0) {
        side = s;
      } else if (s != side) {
        return true;
      }
    }
    if (side == 0) return true;  // cannot happen for a full-dimensional set
    if (!found.count(members)) found.emplace(members, side < 0 ? primitive(a) : primitive(-a));
    return true;
  });
  std::vector<FacetData> out;
  for (auto& [members, normal] : found) out.push_back({members, normal});
  return out;
}

std::vector<QVector> dedup_points(const std::vector<QVector>& pts) {
  std::vector<QVector> v = pts;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void build_lattice(const Polytope& p, std::vector<Face>& out) {
  const auto& verts = p.vertices();
  const int n = p.ambient_dim();
  const int d = p.dim();
  AffineFrame frame = affine_frame(verts);
  std::vector<QVector> y;
  for (const auto& v : verts) y.push_back(frame.coords(v));

  std::vector<FacetData> facets = d > 0 ? enumerate_facets(y, d) : std::vector<FacetData>{};

  // Outer facet normals as ambient vectors inside the direction space.
  std::vector<QVector> ambient_normals;
  for (const auto& f : facets) {
    QVector g = zero_vector(n);
    for (std::size_t i = 0; i < frame.directions.pivots.size(); ++i) {
      g[static_cast<std::size_t>(frame.directions.pivots[i])] = f.normal[i];
    }
    ambient_normals.push_back(primitive(project_onto_span(g, frame.directions.rows)));
  }
  std::vector<QVector> complement = nullspace(frame.directions.rows, n);

  // Faces: closure of facet vertex sets under intersection, plus P itself.
  std::set<std::vector<int>> sets;
  std::vector<int> all(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) all[i] = static_cast<int>(i);
  sets.insert(all);
  std::vector<std::vector<int>> queue;
  for (const auto& f : facets) {
    if (sets.insert(f.members).second) queue.push_back(f.members);
  }
  while (!queue.empty()) {
    std::vector<int> cur = std::move(queue.back());
    queue.pop_back();
    for (const auto& f : facets) {
      auto sub = intersect_sorted(cur, f.members);
      if (sub.empty() || sub.size() == cur.size()) continue;
      if (sets.insert(sub).second) queue.push_back(std::move(sub));
    }
  }

  std::vector<Face> faces;
  for (const auto& s : sets) {
    Face face;
    face.vertex_indices = s;
    std::vector<QVector> diffs;
    for (std::size_t i = 1; i < s.size(); ++i) {
      diffs.push_back(verts[static_cast<std::size_t>(s[i])] - verts[static_cast<std::size_t>(s[0])]);
    }
    face.dim = rank(diffs, n);
    faces.push_back(std::move(face));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertex_indices < b.vertex_indices;
  });

  // Triangulations, bottom-up: fan from the smallest vertex over the
  // subfacets not containing it.
  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    Face& f = faces[fi];
    if (f.dim == 0) {
      f.triangulation = {{f.vertex_indices[0]}};
      continue;
    }
    const int apex = f.vertex_indices[0];
    for (std::size_t gi = 0; gi < fi; ++gi) {
      const Face& g = faces[gi];
      if (g.dim != f.dim - 1) continue;
      if (std::binary_search(g.vertex_indices.begin(), g.vertex_indices.end(), apex)) continue;
      if (!std::includes(f.vertex_indices.begin(), f.vertex_indices.end(), g.vertex_indices.begin(),
                         g.vertex_indices.end())) {
        continue;
      }
      for (const auto& s : g.triangulation) {
        std::vector<int> simplex{apex};
        simplex.insert(simplex.end(), s.begin(), s.end());
        f.triangulation.push_back(std::move(simplex));
      }
    }
    std::sort(f.triangulation.begin(), f.triangulation.end());
  }

  for (auto& f : faces) {
    const int k = f.dim;
    if (k == 0) {
      f.v = KVector::scalar(n, 1);
    } else {
      const auto& first = f.triangulation.front();
      for (int j = 1; j <= k; ++j) {
        f.orientation_basis.push_back(verts[static_cast<std::size_t>(first[static_cast<std::size_t>(j)])] -
                                      verts[static_cast<std::size_t>(first[0])]);
      }
      KVector unit = simple_kvector_from_basis(f.orientation_basis, n);
      Rational measure = 0;
      for (const auto& s : f.triangulation) {
        std::vector<QVector> edges;
        for (int j = 1; j <= k; ++j) {
          edges.push_back(verts[static_cast<std::size_t>(s[static_cast<std::size_t>(j)])] -
                          verts[static_cast<std::size_t>(s[0])]);
        }
        auto ratio = simple_kvector_from_basis(edges, n).ratio_to(unit);
        if (!ratio) throw std::logic_error("face triangulation simplex is not parallel to the face");
        measure += abs(*ratio);
      }
      Rational factorial = 1;
      for (int j = 2; j <= k; ++j) factorial *= j;
      f.v = unit.scaled(measure / factorial);
    }

    if (k == n) {
      f.normal_cone = Cone::zero(n);
      continue;
    }
    std::vector<QVector> gens;
    for (std::size_t i = 0; i < facets.size(); ++i) {
      if (std::includes(facets[i].members.begin(), facets[i].members.end(), f.vertex_indices.begin(),
                        f.vertex_indices.end())) {
        gens.push_back(ambient_normals[i]);
      }
    }
    for (const auto& c : complement) {
      gens.push_back(c);
      gens.push_back(-c);
    }
    f.normal_cone = Cone::from_generators(n, gens);
  }
  out = std::move(faces);
}

}  // namespace

Polytope canonical_hull(const std::vector<QVector>& points) {
  if (points.empty()) throw InvalidArgument("canonical_hull: empty point set");
  const int n = static_cast<int>(points.front().size());
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != n) throw DimensionMismatch("canonical_hull: mixed dimensions");
  }
  std::vector<QVector> pts = dedup_points(points);
  AffineFrame frame = affine_frame(pts);
  const int d = frame.directions.rank();

  Polytope poly;
  poly.n_ = n;
  poly.dim_ = d;
  poly.cache_ = std::make_shared<detail::LatticeCache>();
  if (d == 0) {
    poly.vertices_ = {pts.front()};
    return poly;
  }
  std::vector<QVector> y;
  for (const auto& p : pts) y.push_back(frame.coords(p));
  auto facets = enumerate_facets(y, d);
  // A point is a vertex iff the normals of the facets through it span Q^d.
  std::vector<std::vector<QVector>> through(pts.size());
  for (const auto& f : facets) {
    for (int i : f.members) through[static_cast<std::size_t>(i)].push_back(f.normal);
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (rank(through[i], d) == d) poly.vertices_.push_back(pts[i]);
  }
  return poly;
}

const std::vector<Face>& Polytope::faces() const {
  if (!cache_) throw InvalidArgument("Polytope: default-constructed polytope has no faces");
  std::call_once(cache_->once, [this] { build_lattice(*this, cache_->faces); });
  return cache_->faces;
}

std::vector<const Face*> Polytope::faces_of_dim(int k) const {
  std::vector<const Face*> out;
  for (const auto& f : faces()) {
    if (f.dim == k) out.push_back(&f);
  }
  return out;
}

const Face& Polytope::self_face() const { return faces().back(); }

Polytope Polytope::translated(const QVector& t) const {
  std::vector<QVector> pts;
  for (const auto& v : vertices_) pts.push_back(v + t);
  return canonical_hull(pts);
}

Polytope Polytope::scaled(const Rational& s) const {
  std::vector<QVector> pts;
  for (const auto& v : vertices_) pts.push_back(s * v);
  return canonical_hull(pts);
}

Polytope Polytope::transformed(const std::vector<QVector>& rows) const {
  std::vector<QVector> pts;
  for (const auto& v : vertices_) {
    QVector w(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) w[i] = dot(rows[i], v);
    pts.push_back(std::move(w));
  }
  return canonical_hull(pts);
}

const std::vector<Face>& face_lattice(const Polytope& p) { return p.faces(); }

const KVector& face_kvector(const Face& f) { return f.v; }

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw DimensionMismatch("minkowski_sum: dimensions differ");
  std::vector<QVector> pts;
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) pts.push_back(a + b);
  }
  return canonical_hull(pts);
}

Rational volume(const Polytope& p) {
  if (p.dim() < p.ambient_dim()) return 0;
  return abs(top_coefficient(p.self_face().v));
}

const Cone& normal_cone(const Polytope& p, const Face& f) {
  if (f.dim == p.ambient_dim()) {
    throw InvalidArgument("normal_cone: the top face of a full-dimensional polytope has no normal cone");
  }
  return f.normal_cone;
}

}  // namespace valconv
