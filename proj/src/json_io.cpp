#include "grmds/json_io.hpp"

namespace grmds {

namespace {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

Json optional_bool(const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Literal literal_from_json(const Json& j) {
  if (j.is_number_integer()) return {j.get<std::int64_t>()};
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "element literal must be a list of integers");
  Literal out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, "element literal must be a list of integers");
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

Json ring_to_json(const Ring& ring) {
  return Json{{"p", ring->p()},
              {"s", ring->s()},
              {"m", ring->m()},
              {"modulus", ring->modulus()},
              {"sigma_exponent", ring->e()}};
}

Ring ring_from_json(const Json& j) {
  std::optional<std::vector<std::int64_t>> modulus;
  if (j.contains("modulus") && !j.at("modulus").is_null()) modulus = literal_from_json(j.at("modulus"));
  const unsigned e = j.contains("sigma_exponent") ? field<unsigned>(j, "sigma_exponent") : 0;
  return make_ring(field<std::uint64_t>(j, "p"), field<unsigned>(j, "s"), field<unsigned>(j, "m"), modulus, e);
}

Json element_to_json(const RingElement& x) { return Json(x.coeffs()); }

RingElement element_from_json(const Ring& ring, const Json& j) { return ring->element(literal_from_json(j)); }

Json poly_to_json(const SkewPoly& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(element_to_json(c));
  return Json{{"ring", ring_to_json(f.ring())}, {"coeffs", coeffs}};
}

SkewPoly poly_from_json(const Json& j) {
  Ring ring = ring_from_json(field<Json>(j, "ring"));
  std::vector<RingElement> coeffs;
  for (const auto& c : field<Json>(j, "coeffs")) coeffs.push_back(element_from_json(ring, c));
  return SkewPoly(ring, std::move(coeffs));
}

Json matrix_to_json(const GRMatrix& a) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(element_to_json(a.at(r, c)));
    rows.push_back(row);
  }
  return Json{{"ring", ring_to_json(a.ring())}, {"rows", a.rows()}, {"cols", a.cols()}, {"entries", rows}};
}

GRMatrix matrix_from_json(const Json& j) {
  Ring ring = ring_from_json(field<Json>(j, "ring"));
  const auto rows = field<std::size_t>(j, "rows");
  const auto cols = field<std::size_t>(j, "cols");
  const Json entries = field<Json>(j, "entries");
  if (!entries.is_array() || entries.size() != rows) throw Error(ErrorCode::ParseError, "entries must have 'rows' rows");
  std::vector<RingElement> flat;
  for (const auto& row : entries) {
    if (!row.is_array() || row.size() != cols) throw Error(ErrorCode::ParseError, "each row must have 'cols' entries");
    for (const auto& x : row) flat.push_back(element_from_json(ring, x));
  }
  return GRMatrix(ring, rows, cols, std::move(flat));
}

Json report_to_json(const VerificationReport& r) {
  Json j{{"mds", r.mds},
         {"witness", nullptr},
         {"quasi_involutory", optional_bool(r.quasi_involutory)},
         {"elapsed_ms", r.elapsed_ms}};
  if (r.witness) j["witness"] = Json{{"rows", r.witness->rows}, {"cols", r.witness->cols}};
  if (r.min_distance) j["min_distance"] = *r.min_distance;
  if (r.failing_column_subset) j["failing_column_subset"] = *r.failing_column_subset;
  return j;
}

VerificationReport report_from_json(const Json& j) {
  VerificationReport r;
  r.mds = field<bool>(j, "mds");
  if (j.contains("witness") && !j.at("witness").is_null()) {
    r.witness = MinorWitness{field<std::vector<std::size_t>>(j.at("witness"), "rows"),
                             field<std::vector<std::size_t>>(j.at("witness"), "cols")};
  }
  if (j.contains("quasi_involutory") && !j.at("quasi_involutory").is_null()) {
    r.quasi_involutory = j.at("quasi_involutory").get<bool>();
  }
  if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<double>();
  if (j.contains("min_distance")) r.min_distance = j.at("min_distance").get<unsigned>();
  if (j.contains("failing_column_subset")) {
    r.failing_column_subset = j.at("failing_column_subset").get<std::vector<unsigned>>();
  }
  return r;
}

Json spec_to_json(const ConstructionSpec& spec) {
  Json j{{"family", family_name(spec.family)},
         {"k", spec.k},
         {"t", spec.chain_length()},
         {"b", spec.b},
         {"xi_exponent", spec.xi_exponent}};
  if (spec.ring) j["ring"] = ring_to_json(spec.ring);
  if (spec.c) j["c"] = *spec.c;
  if (!spec.eta.empty()) j["eta"] = spec.eta;
  if (!spec.g.empty()) j["g"] = spec.g;
  if (spec.base_spec) j["base_spec"] = spec_to_json(*spec.base_spec);
  if (spec.check_involutory) j["check_involutory"] = true;
  return j;
}

ConstructionSpec spec_from_json(const Json& j, const Ring& fallback_ring) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "construction spec must be an object");
  ConstructionSpec spec;
  spec.family = parse_family(field<std::string>(j, "family"));
  spec.ring = j.contains("ring") ? ring_from_json(j.at("ring")) : fallback_ring;
  if (j.contains("k")) spec.k = field<unsigned>(j, "k");
  if (j.contains("t") && !j.at("t").is_null()) spec.t = field<unsigned>(j, "t");
  if (j.contains("b")) spec.b = field<std::int64_t>(j, "b");
  if (j.contains("xi_exponent")) spec.xi_exponent = field<std::uint64_t>(j, "xi_exponent");
  if (j.contains("c") && !j.at("c").is_null()) spec.c = literal_from_json(j.at("c"));
  if (j.contains("eta")) {
    for (const auto& x : j.at("eta")) spec.eta.push_back(literal_from_json(x));
  }
  if (j.contains("g")) {
    for (const auto& x : j.at("g")) spec.g.push_back(literal_from_json(x));
  }
  if (j.contains("base_spec") && !j.at("base_spec").is_null()) {
    spec.base_spec = std::make_shared<ConstructionSpec>(spec_from_json(j.at("base_spec"), spec.ring));
  }
  if (j.contains("check_involutory")) spec.check_involutory = field<bool>(j, "check_involutory");
  if (!spec.ring) throw Error(ErrorCode::ParseError, "construction spec has no ring");
  return spec;
}

Json result_to_json(const ConstructionResult& r) {
  Json roots = Json::array();
  for (const auto& x : r.roots) roots.push_back(element_to_json(x));
  Json j{{"ring", ring_to_json(r.ring)},
         {"g", poly_to_json(r.g)},
         {"g_text", r.g.to_string()},
         {"t", r.t},
         {"roots", roots},
         {"M", matrix_to_json(r.m)},
         {"report", report_to_json(r.report)},
         {"coeffs_in_base", r.coeffs_in_base},
         {"condition_holds", optional_bool(r.condition_holds)},
         {"xi", r.xi ? element_to_json(*r.xi) : Json(nullptr)}};
  if (r.embedding.base() && !r.embedding.is_identity()) {
    j["base_ring"] = ring_to_json(r.embedding.base());
    j["base_zeta_image"] = element_to_json(r.embedding.zeta_image());
  }
  return j;
}

}  // namespace grmds
