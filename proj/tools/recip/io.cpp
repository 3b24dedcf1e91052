#include "io.hpp"

#include <fstream>
#include <sstream>

#include "recip/errors.hpp"

namespace recip::io {

namespace {

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

[[noreturn]] void schema_error(const std::string& ptr, const std::string& what) {
  throw InputError(ptr.empty() ? "/" : ptr, what);
}

const json& array_at(const json& j, const std::string& key, const std::string& ptr) {
  if (!j.contains(key)) schema_error(ptr, "missing key \"" + key + "\"");
  const json& a = j.at(key);
  if (!a.is_array()) schema_error(ptr + "/" + key, "expected an array");
  return a;
}

std::int64_t read_int(const json& j, const std::string& ptr) {
  if (!j.is_number_integer()) schema_error(ptr, "expected an integer");
  return j.get<std::int64_t>();
}

std::size_t read_index(const json& j, const std::string& ptr) {
  if (!j.is_number_unsigned()) schema_error(ptr, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

Rational read_rational(const json& j, const std::string& ptr) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<std::int64_t>())));
  if (!j.is_string()) schema_error(ptr, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error&) {
    schema_error(ptr, "malformed rational \"" + j.get<std::string>() + "\"");
  }
}

std::vector<IntVector> read_int_rows(const json& a, const std::string& ptr) {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string p = ptr + "/" + std::to_string(i);
    if (!a[i].is_array()) schema_error(p, "expected an array");
    IntVector row;
    for (std::size_t k = 0; k < a[i].size(); ++k) row.push_back(read_int(a[i][k], p + "/" + std::to_string(k)));
    if (!out.empty() && row.size() != out.front().size()) schema_error(p, "row length differs from row 0");
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<RatVector> read_rat_rows(const json& a, const std::string& ptr) {
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string p = ptr + "/" + std::to_string(i);
    if (!a[i].is_array()) schema_error(p, "expected an array");
    RatVector row;
    for (std::size_t k = 0; k < a[i].size(); ++k) row.push_back(read_rational(a[i][k], p + "/" + std::to_string(k)));
    if (!out.empty() && row.size() != out.front().size()) schema_error(p, "row length differs from row 0");
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::vector<std::size_t>> read_index_rows(const json& a, const std::string& ptr, std::size_t limit) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string p = ptr + "/" + std::to_string(i);
    if (!a[i].is_array()) schema_error(p, "expected an array");
    std::vector<std::size_t> row;
    for (std::size_t k = 0; k < a[i].size(); ++k) {
      const std::string q = p + "/" + std::to_string(k);
      row.push_back(read_index(a[i][k], q));
      if (row.back() >= limit) schema_error(q, "vertex index out of range");
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    // nlohmann prefixes "[json.exception.parse_error.101] parse error at line L, column C: ".
    if (const auto colon = msg.find(": "); colon != std::string::npos) msg = msg.substr(colon + 2);
    throw InputError(line_column(text, e.byte), msg);
  }
}

json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json(ss.str());
  } catch (const InputError& e) {
    throw InputError(path + ":" + e.where(), std::string(e.what()).substr(e.where().size() + 2));
  }
}

Document parse_document(const json& j) {
  if (!j.is_object()) schema_error("", "expected an object");
  Document d;
  if (j.contains("rays")) {
    d.kind = Document::Kind::cone_rays;
    d.vectors = read_int_rows(array_at(j, "rays", ""), "/rays");
    if (!j.contains("dim")) schema_error("", "missing key \"dim\"");
    const auto dim = read_index(j.at("dim"), "/dim");
    for (std::size_t i = 0; i < d.vectors.size(); ++i)
      if (d.vectors[i].size() != dim) schema_error("/rays/" + std::to_string(i), "length differs from \"dim\"");
    d.dim = dim;
    if (d.vectors.empty()) schema_error("/rays", "no rays");
  } else if (j.contains("inequalities")) {
    d.kind = Document::Kind::cone_inequalities;
    d.vectors = read_int_rows(array_at(j, "inequalities", ""), "/inequalities");
    if (d.vectors.empty()) schema_error("/inequalities", "no inequalities");
    d.dim = d.vectors.front().size();
  } else if (j.contains("polytope")) {
    d.kind = Document::Kind::polytope;
    d.points = read_rat_rows(array_at(j, "polytope", ""), "/polytope");
    if (d.points.empty()) schema_error("/polytope", "no points");
    d.dim = d.points.front().size();
  } else if (j.contains("facets")) {
    d.points = read_rat_rows(array_at(j, "vertices", ""), "/vertices");
    d.facets = read_index_rows(array_at(j, "facets", ""), "/facets", d.points.size());
    if (j.contains("ambient_dim")) {
      d.kind = Document::Kind::embedded_complex;
      d.dim = read_index(j.at("ambient_dim"), "/ambient_dim");
      for (std::size_t i = 0; i < d.points.size(); ++i)
        if (d.points[i].size() != d.dim)
          schema_error("/vertices/" + std::to_string(i), "length differs from \"ambient_dim\"");
    } else {
      d.kind = Document::Kind::complex;
    }
  } else {
    schema_error("", "expected one of \"rays\", \"inequalities\", \"facets\", \"polytope\"");
  }
  return d;
}

json to_json(const Rational& q) { return to_string(q); }

json to_json(const RatVector& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_json(q));
  return a;
}

json to_json(const Document& d) {
  json j = json::object();
  auto rat_rows = [](const std::vector<RatVector>& rows) {
    json a = json::array();
    for (const auto& r : rows) a.push_back(to_json(r));
    return a;
  };
  switch (d.kind) {
    case Document::Kind::cone_rays:
      j["dim"] = d.dim;
      j["rays"] = d.vectors;
      break;
    case Document::Kind::cone_inequalities:
      j["inequalities"] = d.vectors;
      break;
    case Document::Kind::polytope:
      j["polytope"] = rat_rows(d.points);
      break;
    case Document::Kind::embedded_complex:
      j["ambient_dim"] = d.dim;
      [[fallthrough]];
    case Document::Kind::complex:
      j["vertices"] = rat_rows(d.points);
      j["facets"] = d.facets;
      break;
  }
  return j;
}

Cone to_cone(const Document& d) {
  if (d.kind == Document::Kind::cone_rays) return Cone::from_rays(d.vectors);
  if (d.kind == Document::Kind::cone_inequalities) return Cone::from_inequalities(d.vectors);
  throw InputError("/", "expected a cone (\"rays\" or \"inequalities\")");
}

SimplicialComplex to_simplicial(const Document& d) {
  if (d.kind != Document::Kind::complex && d.kind != Document::Kind::embedded_complex)
    throw InputError("/", "expected a complex (\"vertices\" and \"facets\")");
  std::vector<Simplex> facets;
  for (const auto& f : d.facets) facets.emplace_back(f.begin(), f.end());
  return SimplicialComplex(d.points.size(), std::move(facets));
}

EmbeddedComplex to_embedded(const Document& d) {
  if (d.kind != Document::Kind::embedded_complex)
    throw InputError("/", "expected an embedded complex (\"ambient_dim\", \"vertices\", \"facets\")");
  return {d.dim, PolyhedralComplex::from_polytopes(d.points, d.facets)};
}

Polytope to_polytope(const Document& d) {
  if (d.kind != Document::Kind::polytope) throw InputError("/", "expected a polytope (\"polytope\")");
  return Polytope::from_points(d.points);
}

json to_json(const EmbeddedComplex& k) {
  Document d;
  d.kind = Document::Kind::embedded_complex;
  d.dim = k.ambient_dim;
  d.points = k.complex.vertices();
  for (auto c : k.complex.maximal_cells()) d.facets.push_back(k.complex.cells()[c].vertices);
  return to_json(d);
}

}  // namespace recip::io
