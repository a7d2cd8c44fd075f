#pragma once

#include <json.hpp>
#include <string>

#include "valconv/convolution.hpp"
#include "valconv/current_rep.hpp"
#include "valconv/polytope.hpp"
#include "valconv/polytope_algebra.hpp"
#include "valconv/spherical.hpp"

namespace valconv {

using Json = nlohmann::json;

/// Parses JSON text; syntax errors become ParseError with line and column.
Json parse_json(const std::string& text, const std::string& source = "<input>");
/// Reads and parses a file; a missing file is a ParseError too.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

// Rationals are "p/q" strings; plain integers (numbers or strings) are accepted.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const QVector& v);
QVector qvector_from_json(const Json& j, int n);

/// {"dim", "grade", "terms": [{"idx": [1-based indices], "coeff"}]}
Json to_json(const KVector& v);
KVector kvector_from_json(const Json& j);

/// {"dim", "rays", "lineality", "facets", "equations"}; read back from rays and lineality.
Json to_json(const Cone& c);
Cone cone_from_json(const Json& j);

/// {"cone", "sign", "orientation_basis"}
Json to_json(const SphericalPolytope& p);
SphericalPolytope spherical_from_json(const Json& j);

/// {"dim", "vertices"}
Json to_json(const Polytope& p);
Polytope polytope_from_json(const Json& j);

Json to_json(const FaceCurrent& f);
FaceCurrent face_current_from_json(const Json& j, int n);

Json to_json(const CCoefficient& c);
CCoefficient ccoefficient_from_json(const Json& j);

/// {"dim", "alpha", "c", "components": [[face current...] per degree]}
Json to_json(const ValuationRep& r);
ValuationRep valuation_rep_from_json(const Json& j);

Json to_json(const CanonicalRep& r);

/// {"dim", "terms": [{"coeff", "polytope"}]}
Json to_json(const PiElement& x);
PiElement pi_element_from_json(const Json& j);

/// {"tol", "mc_samples", "seed"}; missing keys keep the defaults.
Json to_json(const NumericConfig& c);
NumericConfig numeric_config_from_json(const Json& j, NumericConfig base = {});

Json to_json(const VerificationReport& r);
VerificationReport verification_report_from_json(const Json& j);

Json to_json(const RepDifference& d);

/// Face counts by dimension, v_F and normal cone generators.
Json faces_report(const Polytope& p);

}  // namespace valconv
