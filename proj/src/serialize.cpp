#include "torsig/serialize.hpp"

#include "torsig/error.hpp"

namespace torsig {

Json to_json(const Rational& r) { return to_string(r); }
Json to_json(const Integer& z) { return to_string(z); }

namespace {

template <typename V>
Json vector_json(const V& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json counts_json(const std::vector<std::int64_t>& v) { return Json(v); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::InvalidInput, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw Error(ErrorCode::InvalidInput, std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw Error(ErrorCode::InvalidInput, std::string("field '") + key + "' must be an array");
  return v;
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw Error(ErrorCode::InvalidInput, "expected a rational string, got " + j.dump());
}

Integer integer_from_json(const Json& j) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  throw Error(ErrorCode::InvalidInput, "expected an integer string, got " + j.dump());
}

Json to_json(const Polytope& p) {
  Json facets = Json::array();
  for (const auto& f : p.facets()) facets.push_back({{"normal", vector_json(f.inner_normal)}, {"offset", to_json(f.offset)}});
  Json vertices = Json::array();
  for (const auto& v : p.vertices()) vertices.push_back(vector_json(v));
  return {{"dim", p.ambient_dim()}, {"vertices", vertices}, {"facets", facets}};
}

Polytope polytope_from_json(const Json& j) {
  const std::size_t dim = size_field(j, "dim");
  if (dim == 0) throw Error(ErrorCode::InvalidInput, "dim must be positive");
  std::vector<RatVector> vertices;
  for (const auto& row : array_field(j, "vertices")) {
    if (!row.is_array() || row.size() != dim) throw Error(ErrorCode::InvalidInput, "vertex with wrong length");
    RatVector v;
    for (const auto& x : row) v.push_back(rational_from_json(x));
    vertices.push_back(std::move(v));
  }
  if (vertices.empty()) throw Error(ErrorCode::InvalidInput, "no vertices");
  if (!j.contains("facets")) return Polytope::from_vertices(vertices);
  std::vector<Facet> facets;
  for (const auto& f : array_field(j, "facets")) {
    IntVector n;
    for (const auto& x : array_field(f, "normal")) n.push_back(integer_from_json(x));
    if (n.size() != dim) throw Error(ErrorCode::InvalidInput, "facet normal with wrong length");
    facets.push_back(Facet{std::move(n), rational_from_json(field(f, "offset"))});
  }
  return Polytope::from_vertices_and_facets(std::move(vertices), std::move(facets));
}

Json to_json(const Fan& f) {
  Json rays = Json::array();
  for (const auto& r : f.rays()) rays.push_back(vector_json(r));
  return {{"dim", f.dim()}, {"rays", rays}, {"max_cones", f.max_cones()}};
}

Fan fan_from_json(const Json& j) {
  const std::size_t dim = size_field(j, "dim");
  std::vector<IntVector> rays;
  for (const auto& row : array_field(j, "rays")) {
    if (!row.is_array() || row.size() != dim) throw Error(ErrorCode::InvalidInput, "ray with wrong length");
    IntVector v;
    for (const auto& x : row) v.push_back(integer_from_json(x));
    rays.push_back(std::move(v));
  }
  std::vector<Cone> cones;
  for (const auto& c : array_field(j, "max_cones")) {
    if (!c.is_array()) throw Error(ErrorCode::InvalidInput, "max_cones entries must be arrays");
    Cone cone;
    for (const auto& x : c) {
      if (!x.is_number_integer() || x.get<long long>() < 0) throw Error(ErrorCode::InvalidInput, "bad ray index");
      cone.push_back(x.get<std::size_t>());
    }
    cones.push_back(std::move(cone));
  }
  return Fan(dim, std::move(rays), std::move(cones));
}

Json to_json(const BoundReport& b) {
  return {{"theorem_case", std::string(to_string(b.theorem_case))},
          {"lhs", to_json(b.lhs)},
          {"rhs", to_json(b.rhs)},
          {"satisfied", b.satisfied},
          {"classification", std::string(to_string(b.classification))},
          {"m", to_json(b.m)}};
}

Json to_json(const MonomialTerm& t) {
  Json exps = Json::object();
  for (const auto& [ray, e] : t.monomial.exponents) exps[std::to_string(ray)] = e;
  return {{"monomial", exps}, {"coefficient", to_json(t.coefficient)}, {"value", to_json(t.value)}, {"sign_ok", t.sign_ok}};
}

Json to_json(const AnalysisReport& r) {
  Json j = {{"dim", r.dim},
            {"f", counts_json(r.f.counts)},
            {"h", vector_json(r.h.counts)},
            {"sigma", to_json(r.sigma)},
            {"dehn_sommerville", r.dehn_sommerville},
            {"simple", r.simple},
            {"angle_class", std::string(to_string(r.angle_class))}};
  if (r.convexity) j["convexity"] = std::string(to_string(*r.convexity));
  if (r.m) j["m"] = to_json(*r.m);
  if (r.flag) j["flag"] = *r.flag;
  if (r.bounds) j["bounds"] = to_json(*r.bounds);
  if (r.chow_sigma) j["chow_sigma"] = to_json(*r.chow_sigma);
  if (r.agreement) j["agreement"] = *r.agreement;
  if (!r.warnings.empty()) j["warnings"] = r.warnings;
  return j;
}

Json to_json(const ChowReport& r, bool with_terms) {
  Json j = {{"sigma", to_json(r.sigma)}, {"combinatorial_sigma", to_json(r.combinatorial_sigma)}, {"agreement", r.agreement}};
  if (with_terms) j["terms"] = vector_json(r.terms);
  return j;
}

Json to_json(const MirrorReport& r) { return {{"chi", to_json(r.chi)}, {"n", r.n}, {"d", r.d}}; }

Json to_json(const CriterionResult& c) {
  return {{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
}

Json to_json(const AcceptanceReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json row = {{"name", e.name},
                {"dim", e.dim},
                {"f", counts_json(e.f.counts)},
                {"sigma", to_json(e.sigma)},
                {"convexity", std::string(to_string(e.convexity))},
                {"m", to_json(e.m)},
                {"flag", e.flag},
                {"angle_class", std::string(to_string(e.angle))},
                {"expected_ok", e.expected_ok}};
    entries.push_back(std::move(row));
  }
  return {{"corpus", entries}, {"criteria", vector_json(r.criteria)}, {"passed", r.passed()}};
}

std::string dump(const Json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

}  // namespace torsig
