#pragma once

// JSON ingestion and serialization for the recip command-line tool.
//
//   cone              {"dim": d, "rays": [[int, ...], ...]} or {"inequalities": [[int, ...], ...]}
//   complex           {"vertices": [["p/q", ...], ...], "facets": [[int, ...], ...]}
//   embedded complex  the complex schema plus {"ambient_dim": d}
//   polytope          {"polytope": [["p/q", ...], ...]}

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "recip/complex.hpp"
#include "recip/cone.hpp"
#include "recip/pl_lift.hpp"
#include "recip/polytope.hpp"

namespace recip::io {

using json = nlohmann::ordered_json;

/// Malformed or schema-violating input. `where` is "line:column" for syntax
/// errors and a JSON pointer for schema errors.
class InputError : public std::runtime_error {
 public:
  InputError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

json parse_json(const std::string& text);
json load_json(const std::string& path);

/// Parsed input file; exactly one of the kinds is filled.
struct Document {
  enum class Kind { cone_rays, cone_inequalities, complex, embedded_complex, polytope };
  Kind kind = Kind::cone_rays;
  std::size_t dim = 0;                             // cones, embedded complexes
  std::vector<IntVector> vectors;                  // rays or inequalities
  std::vector<RatVector> points;                   // vertices or polytope points
  std::vector<std::vector<std::size_t>> facets;    // complexes

  bool is_cone() const { return kind == Kind::cone_rays || kind == Kind::cone_inequalities; }
  friend bool operator==(const Document&, const Document&) = default;
};

Document parse_document(const json& j);
json to_json(const Document& d);

Cone to_cone(const Document& d);
SimplicialComplex to_simplicial(const Document& d);
EmbeddedComplex to_embedded(const Document& d);
Polytope to_polytope(const Document& d);

json to_json(const Rational& q);
json to_json(const RatVector& v);
json to_json(const EmbeddedComplex& k);

}  // namespace recip::io
