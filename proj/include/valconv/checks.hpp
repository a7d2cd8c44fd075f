#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "valconv/corpus.hpp"
#include "valconv/io.hpp"
#include "valconv/spherical.hpp"

namespace valconv {

/// Outcome of one randomized property suite.
struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double max_error = 0;
  std::vector<std::string> notes;

  bool passed() const { return cases > 0 && failures == 0; }
  void fail(const std::string& note);
  void error(double e) {
    if (e > max_error) max_error = e;
  }
  Json to_json() const;
};

struct PairSpec {
  int n = 2;
  PolytopeKind a = PolytopeKind::triangle;
  PolytopeKind b = PolytopeKind::triangle;
};

/// Seeded pairs of random polytopes in general position, cycling through `specs`.
std::vector<std::pair<Polytope, Polytope>> general_position_pairs(std::uint64_t seed, const std::vector<PairSpec>& specs,
                                                                  std::size_t count);

/// Mixed kinds in R^2 and R^3.
std::vector<PairSpec> default_pair_specs(int n);

struct ProductRuleResult {
  SuiteResult t_part;
  SuiteResult c_part;
};

/// verify_theorem on every pair: exact T, |dC| <= c_tol.
ProductRuleResult check_product_rule(const std::vector<std::pair<Polytope, Polytope>>& pairs, const NumericConfig& cfg,
                                     double c_tol);

/// convolve(M(pt), M(P)) = M(P) exactly.
SuiteResult check_identity(const std::vector<std::pair<Polytope, Polytope>>& pairs, const NumericConfig& cfg);

/// convolve(a, b) against convolve(b, a).
SuiteResult check_commutativity(const std::vector<std::pair<Polytope, Polytope>>& pairs, const NumericConfig& cfg);

/// (a * b) * c against a * (b * c) for random segment/triangle triples in R^n.
SuiteResult check_associativity(std::uint64_t seed, int n, std::size_t count, const NumericConfig& cfg);

/// Every output term has grade(v) + dim(N) = n - 1 in the right component, and
/// convolution commutes with dilation: M(lP) * M(lQ) = dilate(M(P) * M(Q), l).
SuiteResult check_convolution_grading(const std::vector<std::pair<Polytope, Polytope>>& pairs, std::uint64_t seed,
                                      const NumericConfig& cfg);

/// equal_in_pi on translation / inclusion-exclusion identities (expected true).
SuiteResult check_pi_identities(std::uint64_t seed, std::size_t count, const NumericConfig& cfg);
/// equal_in_pi on pairs that are not equal (expected false).
SuiteResult check_pi_separation(std::uint64_t seed, std::size_t count, const NumericConfig& cfg);

/// Ring laws of the product under equal_in_pi.
SuiteResult check_ring_laws(std::uint64_t seed, std::size_t count, const NumericConfig& cfg);

/// A(dI, J) = (-1)^k A(I, dJ) on random admissible pairs on S^{n-1}.
SuiteResult check_boundary_symmetry(std::uint64_t seed, int n, std::size_t count, const NumericConfig& cfg,
                                    double tol);

/// sum_F <v_F, xi> A(-d n_F, J) = 0 for random P, k, xi, J in R^n.
SuiteResult check_cancellation(std::uint64_t seed, int n, std::size_t count, const NumericConfig& cfg, double tol);

/// dilate(M(P), l) = M(lP) and slice k scales by l^k.
SuiteResult check_dilation(std::uint64_t seed, std::size_t count, const NumericConfig& cfg);

/// verify_theorem(gP, gQ) passes iff verify_theorem(P, Q) does, for unimodular g.
SuiteResult check_gl_equivariance(std::uint64_t seed, std::size_t count, const NumericConfig& cfg);

struct SelftestOptions {
  std::uint64_t seed = 42;
  /// Empty: dimensions 2 and 3.
  std::vector<int> dims;
  std::size_t trials = 12;
  long mc_samples = 2'000'000;
  /// 0: per-dimension default.
  double tol = 0;
};

/// Runs the invariant suites; the report contains no timing so it is
/// byte-stable for fixed options.
Json run_selftest(const SelftestOptions& opt);

}  // namespace valconv
