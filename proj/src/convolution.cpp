#include "valconv/convolution.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "valconv/errors.hpp"
#include "valconv/linalg.hpp"
#include "valconv/parallel.hpp"

namespace valconv {

namespace {

std::vector<const FaceCurrent*> flatten(const ValuationRep& r) {
  std::vector<const FaceCurrent*> out;
  for (const auto& comp : r.components) {
    for (const auto& f : comp) out.push_back(&f);
  }
  return out;
}

// span(a) as a cone, for the strengthened general position condition
Cone span_cone(const Cone& a) { return Cone::from_halfspaces(a.ambient_dim(), {}, a.equations()); }

}  // namespace

GeneralPositionReport check_general_position(const Polytope& p, const Polytope& q) {
  const int n = p.ambient_dim();
  if (q.ambient_dim() != n) throw DimensionMismatch("general_position: dimensions differ");
  const auto& fp = p.faces();
  const auto& fq = q.faces();
  std::vector<std::pair<int, int>> jobs;
  for (std::size_t i = 0; i < fp.size(); ++i) {
    if (fp[i].dim >= n) continue;
    for (std::size_t j = 0; j < fq.size(); ++j) {
      if (fq[j].dim < n) jobs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  std::vector<char> bad(jobs.size(), 0);
  parallel_for(jobs.size(), [&](std::size_t t) {
    const Face& f = fp[static_cast<std::size_t>(jobs[t].first)];
    const Face& g = fq[static_cast<std::size_t>(jobs[t].second)];
    const Cone& nf = normal_cone(p, f);
    const Cone& ng = normal_cone(q, g);
    if (!transversal(SphericalPolytope::with_sign(nf, 1), SphericalPolytope::with_sign(ng, 1))) {
      bad[t] = 1;
      return;
    }
    if (f.dim + g.dim == n && f.dim >= 1 && g.dim >= 1) {
      if (!intersect(span_cone(nf), ng).is_zero()) bad[t] = 1;
    }
  });
  GeneralPositionReport report;
  for (std::size_t t = 0; t < jobs.size(); ++t) {
    if (bad[t]) report.witnesses.push_back(jobs[t]);
  }
  report.ok = report.witnesses.empty();
  return report;
}

bool general_position(const Polytope& p, const Polytope& q) { return check_general_position(p, q).ok; }

std::vector<std::pair<int, int>> non_transversal_pairs(const ValuationRep& a, const ValuationRep& b) {
  if (a.n != b.n) throw DimensionMismatch("transversal_reps: dimensions differ");
  const auto fa = flatten(a);
  const auto fb = flatten(b);
  std::vector<char> bad(fa.size() * fb.size(), 0);
  parallel_for(bad.size(), [&](std::size_t t) {
    const auto i = t / fb.size();
    const auto j = t % fb.size();
    if (!transversal(fa[i]->normal(), fb[j]->normal())) bad[t] = 1;
  });
  std::vector<std::pair<int, int>> out;
  for (std::size_t t = 0; t < bad.size(); ++t) {
    if (bad[t]) out.emplace_back(static_cast<int>(t / fb.size()), static_cast<int>(t % fb.size()));
  }
  return out;
}

bool transversal_reps(const ValuationRep& a, const ValuationRep& b) { return non_transversal_pairs(a, b).empty(); }

ConvolutionReport convolve(const ValuationRep& a, const ValuationRep& b, const NumericConfig& cfg) {
  const int n = a.n;
  if (b.n != n) throw DimensionMismatch("convolve: dimensions differ");
  ConvolutionReport report;
  report.failing_pairs = non_transversal_pairs(a, b);
  report.pairs_checked = a.term_count() * b.term_count();
  report.transversal = report.failing_pairs.empty();
  if (!report.transversal) return report;

  ValuationRep out(n);
  for (int k1 = 0; k1 < n; ++k1) {
    for (int k2 = 0; k2 < n; ++k2) {
      for (const auto& f1 : a.components[static_cast<std::size_t>(k1)]) {
        for (const auto& f2 : b.components[static_cast<std::size_t>(k2)]) {
          auto inter = cone_intersection(f1.normal(), f2.normal());
          if (k1 + k2 >= n) {
            if (inter) throw std::logic_error("convolve: transversal normal data meet in excess degree");
            continue;
          }
          if (!inter || inter->dim() != n - 1 - k1 - k2) continue;
          KVector w = wedge(f1.v(), f2.v());
          if (w.is_zero()) continue;
          out.components[static_cast<std::size_t>(k1 + k2)].emplace_back(std::move(w), std::move(*inter));
        }
      }
    }
  }

  out.alpha = a.alpha * b.alpha;
  const Rational alpha = compute_alpha(out);
  if (alpha != out.alpha) {
    throw NonConstantAlpha("convolve: degree-0 part of the product is " + to_string(alpha) + ", expected " +
                           to_string(out.alpha));
  }

  // join-volume part of C
  struct Job {
    int k;
    const FaceCurrent* f1;
    const FaceCurrent* f2;
  };
  std::vector<Job> jobs;
  for (int k = 1; k < n; ++k) {
    for (const auto& f1 : a.components[static_cast<std::size_t>(k)]) {
      for (const auto& f2 : b.components[static_cast<std::size_t>(n - k)]) jobs.push_back({k, &f1, &f2});
    }
  }
  std::vector<VolumeEstimate> parts(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t t) {
    const Job& job = jobs[t];
    const Rational top = top_coefficient(wedge(job.f1->v(), job.f2->v()));
    if (top == 0) return;
    VolumeEstimate v = join_volume(antipode(job.f1->normal()), job.f2->normal(), cfg);
    const double s = to_double(top) * ((n + job.k) % 2 == 0 ? 1.0 : -1.0);
    parts[t].value = s * v.value;
    parts[t].std_error = std::abs(s) * v.std_error;
    parts[t].warning = v.warning;
  });
  VolumeEstimate joins;
  for (const auto& p : parts) joins += p;

  CCoefficient c = b.c.scaled(a.alpha) + a.c.scaled(b.alpha);
  if (!jobs.empty()) {
    const double norm = sphere_volume(n);
    c = c + CCoefficient::from_double(joins.value / norm, joins.std_error / norm);
  }
  out.c = c;
  report.c_numeric_error = c.error;
  report.result = std::move(out);
  return report;
}

ValuationRep convolution(const ValuationRep& a, const ValuationRep& b, const NumericConfig& cfg) {
  ConvolutionReport r = convolve(a, b, cfg);
  if (!r.transversal) {
    std::ostringstream msg;
    msg << "convolve: " << r.failing_pairs.size() << " non-transversal face current pairs";
    throw NotTransversal(msg.str(), r.failing_pairs);
  }
  return std::move(*r.result);
}

VerificationReport verify_theorem(const Polytope& p, const Polytope& q, const NumericConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  GeneralPositionReport gp = check_general_position(p, q);
  if (!gp.ok) {
    std::ostringstream msg;
    msg << "verify: polytopes are not in general position (" << gp.witnesses.size() << " face pairs)";
    throw NotTransversal(msg.str(), gp.witnesses);
  }
  const ValuationRep ma = represent(p);
  const ValuationRep mb = represent(q);
  ConvolutionReport conv = convolve(ma, mb, cfg);
  if (!conv.transversal) throw NotTransversal("verify: face currents are not transversal", conv.failing_pairs);
  const ValuationRep& lhs = *conv.result;
  const ValuationRep rhs = represent(minkowski_sum(p, q));

  VerificationReport r;
  ValuationRep diff = lhs - rhs;
  r.t_equal = canonical_form(diff).empty() && lhs.alpha == rhs.alpha;
  r.c_lhs = lhs.c.to_string();
  r.c_rhs = rhs.c.to_string();
  if (lhs.c.exact && rhs.c.exact) {
    r.c_abs_err = std::abs(to_double(*lhs.c.exact - *rhs.c.exact));
  } else {
    r.c_abs_err = std::abs(lhs.c.value - rhs.c.value);
  }
  r.c_numeric_error = conv.c_numeric_error;
  r.pairs_checked = conv.pairs_checked;
  r.runtime_ms = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return r;
}

}  // namespace valconv
