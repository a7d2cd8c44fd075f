#include "valconv/spherical.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>
#include <tuple>

#include "valconv/errors.hpp"
#include "valconv/linalg.hpp"

namespace valconv {

NumericConfig NumericConfig::defaults_for(int n) {
  NumericConfig cfg;
  cfg.tol = n <= 3 ? 1e-9 : 1e-3;
  return cfg;
}

int relative_orientation(const RowEchelon& span, const std::vector<QVector>& vectors) {
  if (static_cast<int>(vectors.size()) != span.rank()) {
    throw InvalidArgument("relative_orientation: basis size does not match the span");
  }
  std::vector<QVector> coords;
  coords.reserve(vectors.size());
  for (const auto& v : vectors) coords.push_back(rref_coordinates(span, v));
  return sign(determinant(coords));
}

SphericalPolytope::SphericalPolytope(Cone cone, const std::vector<QVector>& orientation_basis)
    : cone_(std::move(cone)) {
  if (cone_.is_zero()) throw InvalidArgument("SphericalPolytope: cone is {0}");
  sign_ = relative_orientation(cone_.span(), orientation_basis);
  if (sign_ == 0) throw InvalidArgument("SphericalPolytope: orientation vectors do not span the cone");
}

SphericalPolytope SphericalPolytope::with_sign(Cone cone, int sign) {
  if (cone.is_zero()) throw InvalidArgument("SphericalPolytope: cone is {0}");
  if (sign != 1 && sign != -1) throw InvalidArgument("SphericalPolytope: sign must be +1 or -1");
  SphericalPolytope p;
  p.cone_ = std::move(cone);
  p.sign_ = sign;
  return p;
}

SphericalPolytope SphericalPolytope::full_sphere(int n) { return with_sign(Cone::whole_space(n), 1); }

std::vector<QVector> SphericalPolytope::orientation_basis() const {
  std::vector<QVector> b = cone_.span().rows;
  if (sign_ < 0) b[0] = -b[0];
  return b;
}

int SphericalPolytope::point_sign() const {
  if (dim() != 0 || !cone_.is_pointed()) {
    throw InvalidArgument("point_sign: not an oriented point");
  }
  return sign_ * valconv::sign(dot(cone_.span().rows[0], cone_.rays()[0]));
}

SphericalChain& SphericalChain::operator+=(const SphericalChain& o) {
  terms.insert(terms.end(), o.terms.begin(), o.terms.end());
  scalar += o.scalar;
  return *this;
}

SphericalChain SphericalChain::scaled(const Rational& c) const {
  SphericalChain r = *this;
  for (auto& t : r.terms) t.first *= c;
  r.scalar *= c;
  return r;
}

namespace {

struct ConeKey {
  const Cone* cone;
  bool operator<(const ConeKey& o) const {
    const Cone& a = *cone;
    const Cone& b = *o.cone;
    return std::tie(a.span().rows, a.facets()) < std::tie(b.span().rows, b.facets());
  }
};

}  // namespace

SphericalChain SphericalChain::canonicalized() const {
  std::map<ConeKey, Rational> merged;
  for (const auto& [c, p] : terms) merged[ConeKey{&p.cone()}] += c * p.sign();
  SphericalChain r;
  r.scalar = scalar;
  for (const auto& [key, c] : merged) {
    if (c != 0) r.terms.emplace_back(c, SphericalPolytope::with_sign(*key.cone, 1));
  }
  return r;
}

bool SphericalChain::is_zero() const {
  SphericalChain c = canonicalized();
  return c.terms.empty() && c.scalar == 0;
}

std::optional<SphericalPolytope> cone_intersection(const SphericalPolytope& a, const SphericalPolytope& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("cone_intersection: dimensions differ");
  Cone d = intersect(a.cone(), b.cone());
  if (d.is_zero()) return std::nullopt;
  const auto& p1 = a.cone().equations();
  const auto& p2 = b.cone().equations();
  const auto& c = d.span().rows;
  int s = 1;
  if (p1.size() + p2.size() + c.size() == static_cast<std::size_t>(a.ambient_dim())) {
    const int s1 = orientation_sign({p1, a.orientation_basis()});
    const int s2 = orientation_sign({p2, b.orientation_basis()});
    const int s3 = orientation_sign({p1, p2, c});
    if (s3 != 0) s = s1 * s2 * s3;
  }
  return SphericalPolytope::with_sign(std::move(d), s);
}

SphericalChain boundary(const SphericalPolytope& p) {
  SphericalChain out;
  if (p.dim() == 0) {
    // Two antipodal points (a line) have boundary sign(r) + sign(-r) = 0.
    if (p.cone().is_pointed()) out.scalar = p.point_sign();
    return out;
  }
  const Cone& c = p.cone();
  for (std::size_t i = 0; i < c.facets().size(); ++i) {
    Cone f = c.facet_cone(i);
    // Facet orientation: (inward conormal, facet basis) is positive in span(p).
    std::vector<QVector> frame{c.facets()[i]};
    const auto& fb = f.span().rows;
    frame.insert(frame.end(), fb.begin(), fb.end());
    const int s = relative_orientation(c.span(), frame) * p.sign();
    out.terms.emplace_back(1, SphericalPolytope::with_sign(std::move(f), s));
  }
  return out;
}

SphericalChain boundary(const SphericalChain& c) {
  SphericalChain out;
  for (const auto& [coef, p] : c.terms) out += boundary(p).scaled(coef);
  return out;
}

SphericalPolytope antipode(const SphericalPolytope& p) {
  const int s = p.cone().lin_dim() % 2 == 0 ? p.sign() : -p.sign();
  return SphericalPolytope::with_sign(p.cone().negated(), s);
}

SphericalChain antipode(const SphericalChain& c) {
  SphericalChain out;
  out.scalar = c.scalar;
  for (const auto& [coef, p] : c.terms) out.terms.emplace_back(coef, antipode(p));
  return out;
}

bool transversal(const SphericalPolytope& a, const SphericalPolytope& b) {
  const int n = a.ambient_dim();
  if (b.ambient_dim() != n) throw DimensionMismatch("transversal: dimensions differ");
  if (intersect(a.cone(), b.cone()).is_zero()) return true;
  const auto fa = a.cone().faces();
  const auto fb = b.cone().faces();
  for (const auto& c1 : fa) {
    for (const auto& c2 : fb) {
      std::vector<QVector> both = c1.span().rows;
      both.insert(both.end(), c2.span().rows.begin(), c2.span().rows.end());
      if (rank(both, n) == n) continue;
      Cone d = intersect(c1, c2);
      if (d.is_zero()) continue;
      QVector x = d.relative_interior_point();
      if (c1.in_relative_interior(x) && c2.in_relative_interior(x)) return false;
    }
  }
  return true;
}

VolumeEstimate& VolumeEstimate::operator+=(const VolumeEstimate& o) {
  value += o.value;
  std_error = std::sqrt(std_error * std_error + o.std_error * o.std_error);
  warning = warning || o.warning;
  return *this;
}

double sphere_volume(int n) {
  return 2.0 * std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0);
}

namespace {

using Samples = std::shared_ptr<const std::vector<double>>;

// Standard Gaussian samples in R^n, shared by every cone volume computed with
// the same (seed, n, count).
Samples gaussian_samples(std::uint64_t seed, int n, long count) {
  static std::mutex mu;
  static std::map<std::tuple<std::uint64_t, int, long>, Samples> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(seed, n, count);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(n)));
  std::normal_distribution<double> normal;
  auto v = std::make_shared<std::vector<double>>(static_cast<std::size_t>(count) * static_cast<std::size_t>(n));
  for (auto& x : *v) x = normal(rng);
  if (cache.size() > 4) cache.clear();
  cache.emplace(key, v);
  return v;
}

std::vector<double> unit_double(const QVector& v) {
  std::vector<double> d = to_doubles(v);
  double norm = 0;
  for (double x : d) norm += x * x;
  norm = std::sqrt(norm);
  for (double& x : d) x /= norm;
  return d;
}

double ddot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Fraction of Gaussian mass in the cone, conditioning on the component along
// the cone's central axis u: for X = Y + t u with Y ⊥ u, the cone meets the
// line Y + R u in a half-line {t >= L(Y)}, whose mass is Phi(-L(Y)).
VolumeEstimate monte_carlo_volume(const std::vector<QVector>& gens, const NumericConfig& cfg) {
  const int n = static_cast<int>(gens.size());
  std::vector<QVector> m(static_cast<std::size_t>(n), QVector(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = gens[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }
  }
  std::vector<QVector> inv = inverse(m);  // rows a_i with <a_i, g_j> = delta_ij

  std::vector<double> u(static_cast<std::size_t>(n), 0.0);
  for (const auto& g : gens) {
    auto gu = unit_double(g);
    for (int i = 0; i < n; ++i) u[static_cast<std::size_t>(i)] += gu[static_cast<std::size_t>(i)];
  }
  {
    double norm = std::sqrt(ddot(u, u));
    for (double& x : u) x /= norm;
  }
  // c_i(Y) = <a_i, Z> - <Z, u> b_i and the half-line starts at max_i -c_i / b_i
  std::vector<double> a;
  std::vector<double> inv_b;
  for (const auto& row : inv) {
    auto d = to_doubles(row);
    a.insert(a.end(), d.begin(), d.end());
    inv_b.push_back(1.0 / ddot(d, u));
  }

  const long count = cfg.mc_samples;
  Samples samples = gaussian_samples(cfg.seed, n, count);
  const double* z = samples->data();
  double sum = 0, sum_sq = 0;
  for (long s = 0; s < count; ++s, z += n) {
    double zu = 0;
    for (int i = 0; i < n; ++i) zu += z[i] * u[static_cast<std::size_t>(i)];
    double lo = -INFINITY;
    const double* ai = a.data();
    for (int i = 0; i < n; ++i, ai += n) {
      double az = 0;
      for (int j = 0; j < n; ++j) az += ai[j] * z[j];
      lo = std::max(lo, zu - az * inv_b[static_cast<std::size_t>(i)]);
    }
    const double p = 0.5 * std::erfc(lo / std::numbers::sqrt2);
    sum += p;
    sum_sq += p * p;
  }
  const double mean = sum / static_cast<double>(count);
  const double var = std::max(0.0, sum_sq / static_cast<double>(count) - mean * mean);
  const double total = sphere_volume(n);
  VolumeEstimate est;
  est.value = mean * total;
  est.std_error = std::sqrt(var / static_cast<double>(count)) * total;
  est.warning = est.std_error > cfg.tol;
  return est;
}

// Fraction of R^4 covered by a simplicial cone, as the Gaussian orthant
// probability P(W >= 0) for W_i = <a_i, X> with correlation R. Along
// R(t) = I + t (R - I), dP/dr_ij = phi_2(0, 0; r_ij) * P(W_k, W_l >= 0 | W_i = W_j = 0),
// and the conditional bivariate orthant probability is 1/4 + asin(r)/(2 pi).
double orthant_fraction4(const std::vector<QVector>& gens) {
  constexpr int n = 4;
  std::vector<QVector> m(n, QVector(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = gens[j][i];
  }
  std::vector<QVector> a = inverse(m);
  double r[n][n];
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      r[i][j] = to_double(dot(a[i], a[j])) / std::sqrt(to_double(dot(a[i], a[i]) * dot(a[j], a[j])));
    }
  }
  const double pi = std::numbers::pi;
  auto rate = [&](double t) {
    double total = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        int k = -1, l = -1;
        for (int x = 0; x < n; ++x) {
          if (x == i || x == j) continue;
          (k < 0 ? k : l) = x;
        }
        const double rij = t * r[i][j];
        auto c = [&](int x, int y) { return x == y ? 1.0 : t * r[x][y]; };
        // covariance of (W_k, W_l) given W_i = W_j = 0
        const double det = 1 - rij * rij;
        auto cond = [&](int x, int y) {
          const double xi = c(x, i), xj = c(x, j), yi = c(y, i), yj = c(y, j);
          return c(x, y) - (xi * (yi - rij * yj) + xj * (yj - rij * yi)) / det;
        };
        const double rho = std::clamp(cond(k, l) / std::sqrt(cond(k, k) * cond(l, l)), -1.0, 1.0);
        const double density = 1 / (2 * pi * std::sqrt(det));
        total += r[i][j] * density * (0.25 + std::asin(rho) / (2 * pi));
      }
    }
    return total;
  };
  const double integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(rate, 0.0, 1.0, 15, 1e-14);
  return 1.0 / 16 + integral;
}

}  // namespace

VolumeEstimate simplex_volume(const std::vector<QVector>& generators, const NumericConfig& cfg) {
  const int n = static_cast<int>(generators.size());
  VolumeEstimate est;
  if (n == 1) {
    est.value = 1;
  } else if (n == 2) {
    auto a = to_doubles(generators[0]);
    auto b = to_doubles(generators[1]);
    est.value = std::atan2(std::abs(a[0] * b[1] - a[1] * b[0]), ddot(a, b));
  } else if (n == 3) {
    // Van Oosterom-Strackee solid angle of a trihedral cone.
    auto a = unit_double(generators[0]);
    auto b = unit_double(generators[1]);
    auto c = unit_double(generators[2]);
    const double det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
                       a[2] * (b[0] * c[1] - b[1] * c[0]);
    est.value = 2.0 * std::atan2(std::abs(det), 1.0 + ddot(a, b) + ddot(a, c) + ddot(b, c));
  } else if (n == 4) {
    est.value = orthant_fraction4(generators) * sphere_volume(4);
  } else {
    est = monte_carlo_volume(generators, cfg);
  }
  return est;
}

namespace {

// Angle of a simplicial cone inside its own span, for 1 to 3 generators,
// from the exact Gram matrix.
double low_dim_simplex_angle(const std::vector<QVector>& g) {
  const std::size_t m = g.size();
  if (m == 1) return 1;
  std::vector<QVector> gram(m, QVector(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) gram[i][j] = dot(g[i], g[j]);
  }
  const double det = std::sqrt(std::max(0.0, to_double(determinant(gram))));
  if (m == 2) return std::atan2(det, to_double(gram[0][1]));
  std::vector<double> len(m);
  for (std::size_t i = 0; i < m; ++i) len[i] = std::sqrt(to_double(gram[i][i]));
  auto c = [&](std::size_t i, std::size_t j) { return to_double(gram[i][j]) / (len[i] * len[j]); };
  return 2.0 * std::atan2(det / (len[0] * len[1] * len[2]), 1.0 + c(0, 1) + c(0, 2) + c(1, 2));
}

}  // namespace

VolumeEstimate cone_volume(const Cone& k, const NumericConfig& cfg) {
  const int n = k.ambient_dim();
  if (k.lin_dim() != n) throw DimensionMismatch("cone_volume: cone is not full-dimensional");
  const int m = n - k.lineality_dim();
  VolumeEstimate total;
  if (k.lineality_dim() == 0 || m > 3) {
    for (const auto& s : k.triangulation()) total += simplex_volume(s, cfg);
    return total;
  }
  if (m == 0) {
    total.value = sphere_volume(n);
    return total;
  }
  // K = L + K' with K' pointed in the complement of L: the fraction of the
  // sphere covered by K is the fraction K' covers in that complement.
  double angle = 0;
  for (const auto& s : Cone::from_generators(n, k.rays()).triangulation()) angle += low_dim_simplex_angle(s);
  total.value = angle / sphere_volume(m) * sphere_volume(n);
  return total;
}

VolumeEstimate spherical_volume(const SphericalPolytope& p, const NumericConfig& cfg) {
  const int n = p.ambient_dim();
  if (p.dim() != n - 1) throw DimensionMismatch("spherical_volume: polytope is not top-dimensional");
  return cone_volume(p.cone(), cfg);
}

namespace {

VolumeEstimate signed_top_volume(const SphericalPolytope& p, const NumericConfig& cfg) {
  VolumeEstimate v = spherical_volume(p, cfg);
  v.value *= orientation_sign({p.orientation_basis()});
  return v;
}

}  // namespace

VolumeEstimate join_volume(const SphericalPolytope& i, const SphericalPolytope& j, const NumericConfig& cfg) {
  const int n = i.ambient_dim();
  if (j.ambient_dim() != n) throw DimensionMismatch("join_volume: dimensions differ");
  if (i.dim() + j.dim() != n - 2) {
    throw PartialFunctionDomain("join_volume: dimensions of I and J must add up to n - 2");
  }
  if (!intersect(i.cone().negated(), j.cone()).is_zero()) {
    throw PartialFunctionDomain("join_volume: J meets the antipode of I");
  }
  std::vector<QVector> both = i.cone().span().rows;
  both.insert(both.end(), j.cone().span().rows.begin(), j.cone().span().rows.end());
  VolumeEstimate total;
  if (rank(both, n) < n) return total;
  const int s = orientation_sign({i.orientation_basis(), j.orientation_basis()});
  // the spans are complementary, so products of simplices of I and J tile I + J
  std::vector<QVector> gens = i.cone().generators();
  for (const auto& g : j.cone().generators()) gens.push_back(g);
  total = cone_volume(Cone::from_generators(n, gens), cfg);
  total.value *= s;
  return total;
}

VolumeEstimate join_volume(const SphericalChain& i, const SphericalChain& j, const NumericConfig& cfg) {
  VolumeEstimate total;
  auto add = [&](const Rational& c, VolumeEstimate v) {
    const double w = to_double(c);
    v.value *= w;
    v.std_error *= std::abs(w);
    total += v;
  };
  for (std::size_t a = 0; a < i.terms.size(); ++a) {
    for (std::size_t b = 0; b < j.terms.size(); ++b) {
      try {
        add(i.terms[a].first * j.terms[b].first, join_volume(i.terms[a].second, j.terms[b].second, cfg));
      } catch (const PartialFunctionDomain& e) {
        std::ostringstream msg;
        msg << e.what() << " (pair " << a << ", " << b << ")";
        throw PartialFunctionDomain(msg.str());
      }
    }
  }
  if (i.scalar != 0) {
    for (const auto& [c, p] : j.terms) add(i.scalar * c, signed_top_volume(p, cfg));
  }
  if (j.scalar != 0) {
    for (const auto& [c, p] : i.terms) add(j.scalar * c, signed_top_volume(p, cfg));
  }
  return total;
}

}  // namespace valconv
