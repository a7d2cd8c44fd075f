#include "valconv/checks.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "valconv/combinatorics.hpp"
#include "valconv/convolution.hpp"
#include "valconv/errors.hpp"
#include "valconv/polytope_algebra.hpp"

namespace valconv {

namespace {

constexpr std::size_t kMaxNotes = 8;

std::string describe(const Polytope& p) { return to_json(p).dump(); }

bool same_t(const ValuationRep& a, const ValuationRep& b) {
  return a.alpha == b.alpha && canonical_form(a - b).empty();
}

double c_diff(const ValuationRep& a, const ValuationRep& b) {
  if (a.c.exact && b.c.exact) return std::abs(to_double(*a.c.exact - *b.c.exact));
  return std::abs(a.c.value - b.c.value);
}

Polytope point(int n) { return canonical_hull({zero_vector(n)}); }

Polytope axis_box(const QVector& lo, const QVector& hi) {
  const int n = static_cast<int>(lo.size());
  std::vector<QVector> pts;
  for (int mask = 0; mask < (1 << n); ++mask) {
    QVector x(lo.size());
    for (int i = 0; i < n; ++i) x[i] = (mask >> i & 1) ? hi[i] : lo[i];
    pts.push_back(x);
  }
  return canonical_hull(pts);
}

Rational positive_scale(std::mt19937_64& rng) {
  static const int nums[] = {1, 2, 3, 5, 7};
  static const int dens[] = {1, 2, 3};
  std::uniform_int_distribution<int> a(0, 4), b(0, 2);
  while (true) {
    Rational r(nums[a(rng)], dens[b(rng)]);
    r.canonicalize();
    if (r != 1) return r;
  }
}

KVector random_covector(std::mt19937_64& rng, int n, int k) {
  KVector xi(n, k);
  if (k == 0) {
    xi.add_term({}, random_rational(rng, 5, 2) + 6);
    return xi;
  }
  for_each_combination(n, k, [&](const std::vector<int>& idx) {
    xi.add_term(idx, random_rational(rng, 5, 2));
    return true;
  });
  return xi;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

}  // namespace

void SuiteResult::fail(const std::string& note) {
  ++failures;
  if (notes.size() < kMaxNotes) notes.push_back(note);
}

Json SuiteResult::to_json() const {
  return {{"name", name},        {"cases", cases},           {"failures", failures},
          {"max_error", fmt(max_error)}, {"passed", passed()}, {"notes", notes}};
}

std::vector<PairSpec> default_pair_specs(int n) {
  using K = PolytopeKind;
  if (n == 2) {
    return {{2, K::segment, K::triangle}, {2, K::triangle, K::triangle}, {2, K::triangle, K::box},
            {2, K::hull, K::triangle},    {2, K::segment, K::hull},       {2, K::box, K::hull},
            {2, K::segment, K::segment},  {2, K::hull, K::hull}};
  }
  if (n == 3) {
    return {{3, K::segment, K::simplex}, {3, K::triangle, K::simplex}, {3, K::simplex, K::simplex},
            {3, K::box, K::simplex},     {3, K::hull, K::segment},     {3, K::hull, K::simplex},
            {3, K::triangle, K::triangle}, {3, K::segment, K::segment}, {3, K::box, K::triangle}};
  }
  return {{n, K::segment, K::simplex}, {n, K::triangle, K::triangle}, {n, K::triangle, K::simplex}};
}

std::vector<std::pair<Polytope, Polytope>> general_position_pairs(std::uint64_t seed, const std::vector<PairSpec>& specs,
                                                                  std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Polytope, Polytope>> out;
  std::size_t attempts = 0;
  while (out.size() < count && attempts < 50 * count + 50) {
    const PairSpec& s = specs[attempts % specs.size()];
    ++attempts;
    Polytope p = random_polytope(rng, s.n, s.a);
    Polytope q = random_polytope(rng, s.n, s.b);
    if (general_position(p, q)) out.emplace_back(std::move(p), std::move(q));
  }
  return out;
}

ProductRuleResult check_product_rule(const std::vector<std::pair<Polytope, Polytope>>& pairs, const NumericConfig& cfg,
                                     double c_tol) {
  ProductRuleResult r;
  r.t_part.name = "product_rule_T";
  r.c_part.name = "product_rule_C";
  for (const auto& [p, q] : pairs) {
    ++r.t_part.cases;
    ++r.c_part.cases;
    try {
      VerificationReport v = verify_theorem(p, q, cfg);
      if (!v.t_equal) r.t_part.fail("T differs for " + describe(p) + " + " + describe(q));
      r.c_part.error(v.c_abs_err);
      if (!(v.c_abs_err <= c_tol)) {
        r.c_part.fail("C " + v.c_lhs + " vs " + v.c_rhs + " for " + describe(p) + " + " + describe(q));
      }
    } catch (const Error& e) {
      r.t_part.fail(e.what());
      r.c_part.fail(e.what());
    }
  }
  return r;
}

SuiteResult check_identity(const std::vector<std::pair<Polytope, Polytope>>& pairs, const NumericConfig& cfg) {
  SuiteResult r;
  r.name = "identity";
  for (const auto& pq : pairs) {
    for (const Polytope* p : {&pq.first, &pq.second}) {
      ++r.cases;
      try {
        const ValuationRep mp = represent(*p);
        const ValuationRep out = convolution(represent(point(p->ambient_dim())), mp, cfg);
        if (!same_t(out, mp)) r.fail("T differs for " + describe(*p));
        if (!out.c.exact || *out.c.exact != *mp.c.exact) r.fail("C is not exactly vol for " + describe(*p));
      } catch (const Error& e) {
        r.fail(e.what());
      }
    }
  }
  return r;
}

SuiteResult check_commutativity(const std::vector<std::pair<Polytope, Polytope>>& pairs, const NumericConfig& cfg) {
  SuiteResult r;
  r.name = "commutativity";
  for (const auto& [p, q] : pairs) {
    ++r.cases;
    try {
      const ValuationRep a = represent(p), b = represent(q);
      const ValuationRep ab = convolution(a, b, cfg);
      const ValuationRep ba = convolution(b, a, cfg);
      if (!same_t(ab, ba)) r.fail("T differs for " + describe(p) + " * " + describe(q));
      const double d = c_diff(ab, ba);
      r.error(d);
      if (d > 2 * (ab.c.error + ba.c.error) + 1e-12) r.fail("C differs for " + describe(p) + " * " + describe(q));
    } catch (const Error& e) {
      r.fail(e.what());
    }
  }
  return r;
}

SuiteResult check_associativity(std::uint64_t seed, int n, std::size_t count, const NumericConfig& cfg) {
  SuiteResult r;
  r.name = "associativity";
  std::mt19937_64 rng(seed);
  const PolytopeKind kinds[] = {PolytopeKind::segment, PolytopeKind::triangle};
  std::size_t attempts = 0;
  while (r.cases < count && attempts < 50 * count + 50) {
    Polytope p = random_polytope(rng, n, kinds[attempts % 2]);
    Polytope q = random_polytope(rng, n, kinds[(attempts / 2) % 2]);
    Polytope s = random_polytope(rng, n, PolytopeKind::segment);
    ++attempts;
    if (!general_position(p, q) || !general_position(q, s) || !general_position(minkowski_sum(p, q), s) ||
        !general_position(p, minkowski_sum(q, s))) {
      continue;
    }
    ++r.cases;
    try {
      const ValuationRep a = represent(p), b = represent(q), c = represent(s);
      const ValuationRep lhs = convolution(convolution(a, b, cfg), c, cfg);
      const ValuationRep rhs = convolution(a, convolution(b, c, cfg), cfg);
      if (!same_t(lhs, rhs)) r.fail("T differs for a triple");
      const double d = c_diff(lhs, rhs);
      r.error(d);
      if (d > 2 * (lhs.c.error + rhs.c.error) + cfg.tol) r.fail("C differs for a triple");
    } catch (const Error& e) {
      r.fail(e.what());
    }
  }
  return r;
}

SuiteResult check_convolution_grading(const std::vector<std::pair<Polytope, Polytope>>& pairs, std::uint64_t seed,
                                      const NumericConfig& cfg) {
  SuiteResult r;
  r.name = "convolution_grading";
  std::mt19937_64 rng(seed);
  for (const auto& [p, q] : pairs) {
    ++r.cases;
    try {
      const ValuationRep out = convolution(represent(p), represent(q), cfg);
      for (int k = 0; k < out.n; ++k) {
        for (const auto& f : out.components[static_cast<std::size_t>(k)]) {
          if (f.degree() != k || f.degree() + f.normal().dim() != out.n - 1) r.fail("term of the wrong bidegree");
        }
      }
      const Rational lambda = positive_scale(rng);
      const ValuationRep scaled = convolution(represent(p.scaled(lambda)), represent(q.scaled(lambda)), cfg);
      const ValuationRep expect = dilate(out, lambda);
      if (!same_t(scaled, expect)) r.fail("dilation does not commute with convolution (T)");
      const double d = c_diff(scaled, expect);
      const double rel = d / std::max(1.0, std::abs(expect.c.value));
      r.error(rel);
      if (d > 2 * (scaled.c.error + expect.c.error) + cfg.tol * std::max(1.0, std::abs(expect.c.value))) {
        r.fail("dilation does not commute with convolution (C)");
      }
    } catch (const Error& e) {
      r.fail(e.what());
    }
  }
  return r;
}

SuiteResult check_pi_identities(std::uint64_t seed, std::size_t count, const NumericConfig& cfg) {
  SuiteResult r;
  r.name = "pi_identities";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim(2, 3), len(1, 4);
  for (std::size_t i = 0; i < count; ++i) {
    const int n = dim(rng);
    PiElement x(n), y(n);
    std::string what;
    switch (i % 4) {
      case 0: {
        what = "translation";
        Polytope p = random_polytope(rng, n, PolytopeKind::hull);
        x = PiElement::of(p);
        y = PiElement::of(p.translated(random_point(rng, n)));
        break;
      }
      case 1:
      case 3: {
        what = i % 4 == 1 ? "box split" : "sheared box split";
        QVector lo = random_point(rng, n), hi = lo;
        for (auto& h : hi) h += len(rng);
        std::uniform_int_distribution<int> axis(0, n - 1);
        const int a = axis(rng);
        Rational t = lo[a] + (hi[a] - lo[a]) * Rational(1 + len(rng), 6);
        t.canonicalize();
        QVector mid_hi = hi, mid_lo = lo, face_lo = lo, face_hi = hi;
        mid_hi[a] = t;
        mid_lo[a] = t;
        face_lo[a] = t;
        face_hi[a] = t;
        std::vector<Polytope> parts = {axis_box(lo, hi), axis_box(lo, mid_hi), axis_box(mid_lo, hi),
                                       axis_box(face_lo, face_hi)};
        if (i % 4 == 3) {
          const auto g = random_unimodular(rng, n);
          for (auto& p : parts) p = p.transformed(g);
        }
        x = PiElement::of(parts[0]);
        y = PiElement::of(parts[1].translated(random_point(rng, n))) + PiElement::of(parts[2]) -
            PiElement::of(parts[3].translated(random_point(rng, n)));
        break;
      }
      case 2: {
        what = "triangle split";
        Polytope t = random_polytope(rng, n, PolytopeKind::triangle);
        const auto& v = t.vertices();
        Rational s(len(rng), 5);
        s.canonicalize();
        QVector d = v[1] + s * (v[2] - v[1]);
        x = PiElement::of(t);
        y = PiElement::of(canonical_hull({v[0], v[1], d})) + PiElement::of(canonical_hull({v[0], d, v[2]})) -
            PiElement::of(canonical_hull({v[0], d}));
        break;
      }
    }
    ++r.cases;
    try {
      if (!equal_in_pi(x, y, cfg)) r.fail(what + " identity not recognized: " + to_json(x).dump());
    } catch (const Error& e) {
      r.fail(e.what());
    }
  }
  return r;
}

SuiteResult check_pi_separation(std::uint64_t seed, std::size_t count, const NumericConfig& cfg) {
  SuiteResult r;
  r.name = "pi_separation";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim(2, 3), len(1, 4);
  for (std::size_t i = 0; i < count; ++i) {
    const int n = dim(rng);
    PiElement x(n), y(n);
    std::string what;
    switch (i % 5) {
      case 0: {
        what = "dilate";
        Polytope p = random_polytope(rng, n, PolytopeKind::hull);
        x = PiElement::of(p);
        y = PiElement::of(p.scaled(positive_scale(rng)));
        break;
      }
      case 1: {
        what = "reflection";
        Polytope t = random_polytope(rng, n, PolytopeKind::simplex);
        x = PiElement::of(t);
        y = PiElement::of(t.scaled(-1));
        break;
      }
      case 2: {
        what = "random pair";
        x = PiElement::of(random_polytope(rng, n, PolytopeKind::hull));
        y = PiElement::of(random_polytope(rng, n, PolytopeKind::hull));
        break;
      }
      case 3: {
        what = "split without the shared facet";
        QVector lo = random_point(rng, n), hi = lo;
        for (auto& h : hi) h += len(rng) + 1;
        QVector mid_hi = hi, mid_lo = lo;
        mid_hi[0] = lo[0] + 1;
        mid_lo[0] = lo[0] + 1;
        x = PiElement::of(axis_box(lo, hi));
        y = PiElement::of(axis_box(lo, mid_hi)) + PiElement::of(axis_box(mid_lo, hi));
        break;
      }
      case 4: {
        what = "multiplicity";
        Polytope p = random_polytope(rng, n, PolytopeKind::box);
        x = PiElement::of(p, 2);
        y = PiElement::of(p) + PiElement::of(p.translated(random_point(rng, n))) +
            PiElement::of(random_polytope(rng, n, PolytopeKind::segment));
        break;
      }
    }
    ++r.cases;
    try {
      if (equal_in_pi(x, y, cfg)) r.fail(what + " pair reported equal: " + to_json(x).dump());
    } catch (const Error& e) {
      r.fail(e.what());
    }
  }
  return r;
}

SuiteResult check_ring_laws(std::uint64_t seed, std::size_t count, const NumericConfig& cfg) {
  SuiteResult r;
  r.name = "ring_laws";
  std::mt19937_64 rng(seed);
  const PolytopeKind kinds[] = {PolytopeKind::segment, PolytopeKind::triangle, PolytopeKind::box};
  std::uniform_int_distribution<int> pick(0, 2);
  auto element = [&](int n) {
    PiElement x = PiElement::of(random_polytope(rng, n, kinds[pick(rng)]), random_rational(rng, 3, 2) + 4);
    x = x + PiElement::of(random_polytope(rng, n, PolytopeKind::segment), random_rational(rng, 3, 1));
    return x;
  };
  for (std::size_t i = 0; i < count; ++i) {
    const int n = 2;
    PiElement x = element(n), y = element(n), z = element(n);
    auto law = [&](const char* name, const PiElement& a, const PiElement& b) {
      ++r.cases;
      try {
        if (!equal_in_pi(a, b, cfg)) r.fail(std::string(name) + " fails");
      } catch (const Error& e) {
        r.fail(e.what());
      }
    };
    law("commutativity", product(x, y), product(y, x));
    law("associativity", product(product(x, y), z), product(x, product(y, z)));
    law("distributivity", product(x, y + z), product(x, y) + product(x, z));
    law("unit", product(PiElement::unit(n), x), x);
  }
  return r;
}

SuiteResult check_boundary_symmetry(std::uint64_t seed, int n, std::size_t count, const NumericConfig& cfg,
                                    double tol) {
  SuiteResult r;
  r.name = "boundary_symmetry";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> kd(0, n - 2), extra(0, 1);
  std::size_t attempts = 0;
  while (r.cases < count && attempts < 50 * count + 50) {
    ++attempts;
    const int k = kd(rng);
    SphericalPolytope i = random_spherical(rng, n, k, extra(rng));
    SphericalPolytope j = random_spherical(rng, n, n - 1 - k, extra(rng));
    if (!join_domain_strict(i, j)) continue;
    ++r.cases;
    try {
      VolumeEstimate lhs = join_volume(boundary(i), SphericalChain(j), cfg);
      VolumeEstimate rhs = join_volume(SphericalChain(i), boundary(j), cfg);
      const double d = std::abs(lhs.value - (k % 2 == 0 ? 1 : -1) * rhs.value);
      r.error(d);
      if (!(d <= tol)) r.fail("k = " + std::to_string(k) + ": |dA| = " + fmt(d));
    } catch (const Error& e) {
      r.fail(e.what());
    }
  }
  return r;
}

SuiteResult check_cancellation(std::uint64_t seed, int n, std::size_t count, const NumericConfig& cfg, double tol) {
  SuiteResult r;
  r.name = "cancellation";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> kd(0, n - 1), extra(0, 1);
  std::size_t attempts = 0;
  while (r.cases < count && attempts < 50 * count + 50) {
    ++attempts;
    const Polytope p = random_polytope(rng, n, attempts % 2 ? PolytopeKind::hull : PolytopeKind::box);
    const int k = kd(rng);
    const KVector xi = random_covector(rng, n, k);
    const SphericalPolytope j = random_spherical(rng, n, k, extra(rng));
    try {
      VolumeEstimate total;
      double scale = 0;
      for (const Face* f : p.faces_of_dim(k)) {
        const FaceCurrent fc = face_current(p, *f);
        const double w = to_double(pairing(fc.v(), xi));
        VolumeEstimate a = join_volume(antipode(boundary(fc.normal())), SphericalChain(j), cfg);
        total.value += w * a.value;
        scale += std::abs(w * a.value);
      }
      ++r.cases;
      const double d = std::abs(total.value);
      r.error(d);
      if (!(d <= tol)) r.fail("k = " + std::to_string(k) + ": |sum| = " + fmt(d) + " (terms up to " + fmt(scale) + ")");
    } catch (const PartialFunctionDomain&) {
      continue;
    } catch (const Error& e) {
      ++r.cases;
      r.fail(e.what());
    }
  }
  return r;
}

SuiteResult check_dilation(std::uint64_t seed, std::size_t count, const NumericConfig& cfg) {
  SuiteResult r;
  r.name = "dilation";
  std::mt19937_64 rng(seed);
  const PolytopeKind kinds[] = {PolytopeKind::segment, PolytopeKind::triangle, PolytopeKind::simplex,
                                PolytopeKind::box, PolytopeKind::hull};
  std::uniform_int_distribution<int> dim(2, 3);
  for (std::size_t i = 0; i < count; ++i) {
    const int n = dim(rng);
    const Polytope p = random_polytope(rng, n, kinds[i % 5]);
    const Rational lambda = positive_scale(rng);
    ++r.cases;
    try {
      const ValuationRep mp = represent(p);
      const ValuationRep ml = represent(p.scaled(lambda));
      if (!equals(dilate(mp, lambda), ml, cfg) || !ml.c.exact) r.fail("dilate(M(P)) != M(lP) for " + describe(p));
      Rational power = 1;
      for (int k = 0; k <= n; ++k) {
        if (!equals(weight_component(ml, k), weight_component(mp, k).scaled(power), cfg)) {
          r.fail("slice " + std::to_string(k) + " does not scale by l^k for " + describe(p));
        }
        power *= lambda;
      }
    } catch (const Error& e) {
      r.fail(e.what());
    }
  }
  return r;
}

SuiteResult check_gl_equivariance(std::uint64_t seed, std::size_t count, const NumericConfig& cfg) {
  SuiteResult r;
  r.name = "gl_equivariance";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim(2, 3);
  std::size_t passing = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const int n = dim(rng);
    const auto specs = default_pair_specs(n);
    const PairSpec& s = specs[i % specs.size()];
    Polytope p = random_polytope(rng, n, s.a);
    // every fourth pair is a polytope and its translate: never in general position
    Polytope q = i % 4 == 3 ? p.translated(random_point(rng, n)) : random_polytope(rng, n, s.b);
    const auto g = random_unimodular(rng, n);
    auto outcome = [&](const Polytope& a, const Polytope& b) {
      try {
        return verify_theorem(a, b, cfg).passed(cfg.tol);
      } catch (const NotTransversal&) {
        return false;
      }
    };
    ++r.cases;
    try {
      const bool before = outcome(p, q);
      const bool after = outcome(p.transformed(g), q.transformed(g));
      if (before != after) r.fail("outcome changes under g for " + describe(p) + " + " + describe(q));
      if (before) ++passing;
    } catch (const Error& e) {
      r.fail(e.what());
    }
  }
  r.notes.push_back(std::to_string(passing) + " of " + std::to_string(count) + " pairs pass before and after");
  return r;
}

Json run_selftest(const SelftestOptions& opt) {
  std::vector<int> dims = opt.dims.empty() ? std::vector<int>{2, 3} : opt.dims;
  Json suites = Json::array();
  bool all = true;
  auto add = [&](int n, const SuiteResult& s) {
    Json j = s.to_json();
    j["dim"] = n;
    suites.push_back(j);
    all = all && s.passed();
  };
  bool low_dim = false;
  for (int n : dims) {
    if (n < 2) throw InvalidArgument("selftest: dimension must be at least 2");
    NumericConfig cfg = NumericConfig::defaults_for(n);
    cfg.seed = opt.seed;
    cfg.mc_samples = opt.mc_samples;
    if (opt.tol > 0) cfg.tol = opt.tol;
    const std::uint64_t base = opt.seed * 1000 + static_cast<std::uint64_t>(n) * 10;
    const std::size_t small = n <= 3 ? opt.trials : std::max<std::size_t>(1, opt.trials / 4);
    add(n, check_boundary_symmetry(base + 1, n, small, cfg, cfg.tol));
    if (n <= 3) {
      low_dim = true;
      add(n, check_cancellation(base + 2, n, small, cfg, 1e-8));
    }
    const auto pairs = general_position_pairs(base + 3, default_pair_specs(n), small);
    ProductRuleResult pr = check_product_rule(pairs, cfg, cfg.tol);
    add(n, pr.t_part);
    add(n, pr.c_part);
    add(n, check_identity(pairs, cfg));
    add(n, check_commutativity(pairs, cfg));
    add(n, check_convolution_grading(pairs, base + 4, cfg));
    if (n == 3) add(n, check_associativity(base + 5, n, std::max<std::size_t>(1, opt.trials / 3), cfg));
  }
  if (low_dim) {
    NumericConfig cfg;
    cfg.seed = opt.seed;
    const std::uint64_t base = opt.seed * 1000 + 7;
    add(0, check_ring_laws(base + 1, std::max<std::size_t>(1, opt.trials / 4), cfg));
    add(0, check_pi_identities(base + 2, opt.trials, cfg));
    add(0, check_pi_separation(base + 3, opt.trials, cfg));
    add(0, check_dilation(base + 4, opt.trials, cfg));
  }
  Json dims_json = dims;
  return {{"seed", opt.seed},
          {"dims", dims_json},
          {"trials", opt.trials},
          {"mc_samples", opt.mc_samples},
          {"suites", suites},
          {"passed", all}};
}

}  // namespace valconv
