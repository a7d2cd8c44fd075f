#include "valconv/io.hpp"

#include <fstream>
#include <sstream>

#include "valconv/errors.hpp"

namespace valconv {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with key \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
  return *it;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  return v;
}

std::vector<QVector> vectors_from_json(const Json& j, int n) {
  if (!j.is_array()) throw ParseError("expected an array of vectors");
  std::vector<QVector> out;
  for (const auto& v : j) out.push_back(qvector_from_json(v, n));
  return out;
}

Json vectors_to_json(const std::vector<QVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  } catch (const Error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream msg;
    msg << source << ":" << line << ":" << col << ": malformed JSON (" << e.what() << ")";
    throw ParseError(msg.str());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument(path + ": cannot write file");
  out << j.dump(2) << "\n";
}

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string or an integer");
  return parse_rational(j.get<std::string>());
}

Json to_json(const QVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_to_json(x));
  return a;
}

QVector qvector_from_json(const Json& j, int n) {
  if (!j.is_array()) throw ParseError("vector must be an array");
  if (static_cast<int>(j.size()) != n) {
    throw ParseError("vector has " + std::to_string(j.size()) + " entries, expected " + std::to_string(n));
  }
  QVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json to_json(const KVector& v) {
  Json terms = Json::array();
  for (const auto& [idx, c] : v.terms()) {
    Json i = Json::array();
    for (int x : idx) i.push_back(x + 1);
    terms.push_back({{"idx", i}, {"coeff", rational_to_json(c)}});
  }
  return {{"dim", v.dim()}, {"grade", v.grade()}, {"terms", terms}};
}

KVector kvector_from_json(const Json& j) {
  return guarded("k-vector", [&] {
    const int n = int_field(j, "dim");
    const int k = int_field(j, "grade");
    if (n < 0 || k < 0 || k > n) throw ParseError("bad dim/grade");
    KVector v(n, k);
    for (const auto& t : array_field(j, "terms")) {
      const Json& idx = array_field(t, "idx");
      if (static_cast<int>(idx.size()) != k) throw ParseError("index length differs from grade");
      KVector::Index i;
      for (const auto& x : idx) {
        if (!x.is_number_integer()) throw ParseError("indices must be integers");
        const int a = x.get<int>() - 1;
        if (a < 0 || a >= n || (!i.empty() && a <= i.back())) {
          throw ParseError("indices must be strictly increasing in 1..dim");
        }
        i.push_back(a);
      }
      v.add_term(i, rational_from_json(field(t, "coeff")));
    }
    return v;
  });
}

Json to_json(const Cone& c) {
  return {{"dim", c.ambient_dim()},
          {"rays", vectors_to_json(c.rays())},
          {"lineality", vectors_to_json(c.lineality())},
          {"facets", vectors_to_json(c.facets())},
          {"equations", vectors_to_json(c.equations())}};
}

Cone cone_from_json(const Json& j) {
  return guarded("cone", [&] {
    const int n = int_field(j, "dim");
    if (n < 1) throw ParseError("dim must be positive");
    std::vector<QVector> gens = vectors_from_json(array_field(j, "rays"), n);
    for (const auto& l : vectors_from_json(array_field(j, "lineality"), n)) {
      gens.push_back(l);
      gens.push_back(-l);
    }
    return Cone::from_generators(n, gens);
  });
}

Json to_json(const SphericalPolytope& p) {
  return {{"cone", to_json(p.cone())},
          {"sign", p.sign()},
          {"orientation_basis", vectors_to_json(p.orientation_basis())}};
}

SphericalPolytope spherical_from_json(const Json& j) {
  return guarded("spherical polytope", [&] {
    Cone c = cone_from_json(field(j, "cone"));
    const int s = int_field(j, "sign");
    if (s != 1 && s != -1) throw ParseError("sign must be 1 or -1");
    return SphericalPolytope::with_sign(std::move(c), s);
  });
}

Json to_json(const Polytope& p) { return {{"dim", p.ambient_dim()}, {"vertices", vectors_to_json(p.vertices())}}; }

Polytope polytope_from_json(const Json& j) {
  return guarded("polytope", [&] {
    const int n = int_field(j, "dim");
    if (n < 1) throw ParseError("dim must be positive");
    std::vector<QVector> pts = vectors_from_json(array_field(j, "vertices"), n);
    if (pts.empty()) throw ParseError("no vertices");
    return canonical_hull(pts);
  });
}

Json to_json(const FaceCurrent& f) { return {{"v", to_json(f.v())}, {"normal", to_json(f.normal())}}; }

FaceCurrent face_current_from_json(const Json& j, int n) {
  return guarded("face current", [&] {
    KVector v = kvector_from_json(field(j, "v"));
    SphericalPolytope s = spherical_from_json(field(j, "normal"));
    if (v.dim() != n || s.ambient_dim() != n) throw ParseError("dimension differs from the rep");
    return FaceCurrent(std::move(v), std::move(s));
  });
}

Json to_json(const CCoefficient& c) {
  if (c.exact) return {{"exact", rational_to_json(*c.exact)}};
  return {{"value", c.value}, {"error", c.error}};
}

CCoefficient ccoefficient_from_json(const Json& j) {
  return guarded("C coefficient", [&] {
    if (j.is_object() && j.contains("exact")) return CCoefficient::from_exact(rational_from_json(j["exact"]));
    const Json& v = field(j, "value");
    const Json& e = field(j, "error");
    if (!v.is_number() || !e.is_number()) throw ParseError("value and error must be numbers");
    return CCoefficient::from_double(v.get<double>(), e.get<double>());
  });
}

Json to_json(const ValuationRep& r) {
  Json comps = Json::array();
  for (const auto& comp : r.components) {
    Json a = Json::array();
    for (const auto& f : comp) a.push_back(to_json(f));
    comps.push_back(a);
  }
  return {{"dim", r.n}, {"alpha", rational_to_json(r.alpha)}, {"c", to_json(r.c)}, {"components", comps}};
}

ValuationRep valuation_rep_from_json(const Json& j) {
  return guarded("valuation rep", [&] {
    const int n = int_field(j, "dim");
    if (n < 1) throw ParseError("dim must be positive");
    ValuationRep r(n);
    r.alpha = rational_from_json(field(j, "alpha"));
    r.c = ccoefficient_from_json(field(j, "c"));
    const Json& comps = array_field(j, "components");
    if (static_cast<int>(comps.size()) != n) throw ParseError("components must have one entry per degree 0..n-1");
    for (int k = 0; k < n; ++k) {
      if (!comps[k].is_array()) throw ParseError("component must be an array");
      for (const auto& f : comps[k]) {
        FaceCurrent fc = face_current_from_json(f, n);
        if (fc.degree() != k) throw ParseError("face current listed under the wrong degree");
        r.components[static_cast<std::size_t>(k)].push_back(std::move(fc));
      }
    }
    return r;
  });
}

Json to_json(const CanonicalRep& r) {
  Json groups = Json::array();
  for (const auto& g : r.groups) {
    Json cells = Json::array();
    for (const auto& c : g.cells) {
      cells.push_back({{"cone", to_json(c.cell)}, {"witness", to_json(c.witness)}, {"coeff", rational_to_json(c.coeff)}});
    }
    groups.push_back({{"degree", g.degree}, {"span", vectors_to_json(g.span)}, {"w", to_json(g.w)}, {"cells", cells}});
  }
  return {{"dim", r.n}, {"groups", groups}};
}

Json to_json(const PiElement& x) {
  Json terms = Json::array();
  for (const auto& [c, p] : x.terms()) terms.push_back({{"coeff", rational_to_json(c)}, {"polytope", to_json(p)}});
  return {{"dim", x.ambient_dim()}, {"terms", terms}};
}

PiElement pi_element_from_json(const Json& j) {
  return guarded("polytope algebra element", [&] {
    const int n = int_field(j, "dim");
    if (n < 1) throw ParseError("dim must be positive");
    PiElement x(n);
    for (const auto& t : array_field(j, "terms")) {
      Polytope p = polytope_from_json(field(t, "polytope"));
      if (p.ambient_dim() != n) throw ParseError("polytope dimension differs from the element");
      x.add_term(rational_from_json(field(t, "coeff")), p);
    }
    return x;
  });
}

Json to_json(const NumericConfig& c) { return {{"tol", c.tol}, {"mc_samples", c.mc_samples}, {"seed", c.seed}}; }

NumericConfig numeric_config_from_json(const Json& j, NumericConfig base) {
  return guarded("numeric config", [&] {
    if (!j.is_object()) throw ParseError("expected an object");
    if (j.contains("tol")) base.tol = j["tol"].get<double>();
    if (j.contains("mc_samples")) base.mc_samples = j["mc_samples"].get<long>();
    if (j.contains("seed")) base.seed = j["seed"].get<std::uint64_t>();
    if (!(base.tol > 0)) throw ParseError("tol must be positive");
    if (base.mc_samples < 1000) throw ParseError("mc_samples must be at least 1000");
    return base;
  });
}

Json to_json(const VerificationReport& r) {
  return {{"t_equal", r.t_equal},         {"c_lhs", r.c_lhs},
          {"c_rhs", r.c_rhs},             {"c_abs_err", r.c_abs_err},
          {"c_numeric_error", r.c_numeric_error}, {"pairs_checked", r.pairs_checked},
          {"runtime_ms", r.runtime_ms}};
}

VerificationReport verification_report_from_json(const Json& j) {
  return guarded("verification report", [&] {
    VerificationReport r;
    r.t_equal = field(j, "t_equal").get<bool>();
    r.c_lhs = field(j, "c_lhs").get<std::string>();
    r.c_rhs = field(j, "c_rhs").get<std::string>();
    r.c_abs_err = field(j, "c_abs_err").get<double>();
    if (j.contains("c_numeric_error")) r.c_numeric_error = j["c_numeric_error"].get<double>();
    r.pairs_checked = field(j, "pairs_checked").get<std::size_t>();
    r.runtime_ms = field(j, "runtime_ms").get<long>();
    return r;
  });
}

Json to_json(const RepDifference& d) {
  Json j = {{"what", d.what}, {"degree", d.degree}, {"coeff", rational_to_json(d.coeff)}};
  if (d.degree >= 0) {
    j["span"] = vectors_to_json(d.span);
    j["witness"] = to_json(d.witness);
  }
  return j;
}

Json faces_report(const Polytope& p) {
  Json counts = Json::object();
  for (int k = 0; k <= p.dim(); ++k) counts[std::to_string(k)] = p.faces_of_dim(k).size();
  Json faces = Json::array();
  for (const auto& f : p.faces()) {
    Json verts = Json::array();
    for (int i : f.vertex_indices) verts.push_back(i);
    Json entry = {{"dim", f.dim}, {"vertices", verts}, {"v", to_json(f.v)}};
    if (f.dim < p.ambient_dim()) entry["normal_cone"] = to_json(normal_cone(p, f));
    faces.push_back(entry);
  }
  return {{"dim", p.ambient_dim()}, {"polytope_dim", p.dim()}, {"counts", counts}, {"faces", faces}};
}

}  // namespace valconv
