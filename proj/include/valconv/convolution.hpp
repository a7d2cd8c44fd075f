#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "valconv/current_rep.hpp"
#include "valconv/polytope.hpp"
#include "valconv/spherical.hpp"

namespace valconv {

struct GeneralPositionReport {
  bool ok = true;
  /// (face of P, face of Q) index pairs into P.faces() and Q.faces().
  std::vector<std::pair<int, int>> witnesses;
};

GeneralPositionReport check_general_position(const Polytope& p, const Polytope& q);

/// Every pair of proper normal cones is transversal, and span(n(F,P)) meets
/// n(G,Q) only at 0 whenever dim F + dim G = n with both dimensions >= 1.
bool general_position(const Polytope& p, const Polytope& q);

/// Witness pairs index the face currents of a and b in degree-major order.
std::vector<std::pair<int, int>> non_transversal_pairs(const ValuationRep& a, const ValuationRep& b);
bool transversal_reps(const ValuationRep& a, const ValuationRep& b);

struct ConvolutionReport {
  bool transversal = false;
  std::optional<ValuationRep> result;
  std::vector<std::pair<int, int>> failing_pairs;
  double c_numeric_error = 0;
  std::size_t pairs_checked = 0;
};

/// Partial convolution of two reps. Not transversal is reported, not thrown.
ConvolutionReport convolve(const ValuationRep& a, const ValuationRep& b, const NumericConfig& cfg);

/// convolve(), throwing NotTransversal when it is undefined.
ValuationRep convolution(const ValuationRep& a, const ValuationRep& b, const NumericConfig& cfg);

struct VerificationReport {
  bool t_equal = false;
  std::string c_lhs;
  std::string c_rhs;
  double c_abs_err = 0;
  double c_numeric_error = 0;
  std::size_t pairs_checked = 0;
  long runtime_ms = 0;

  bool passed(double tol) const { return t_equal && c_abs_err <= tol; }
};

/// Compares convolve(M P, M Q) with M(P + Q). Throws NotTransversal with
/// face-pair witnesses if P and Q are not in general position.
VerificationReport verify_theorem(const Polytope& p, const Polytope& q, const NumericConfig& cfg);

}  // namespace valconv
