#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>

#include "criteria.hpp"
#include "io.hpp"
#include "recip/enumerator.hpp"
#include "recip/errors.hpp"
#include "recip/homology.hpp"
#include "recip/pl_lift.hpp"
#include "recip/reciprocity.hpp"
#include "recip/separation.hpp"
#include "recip/topology.hpp"

namespace recip::cli {

namespace {

using io::json;

struct Report {
  int status = Exit::ok;
  json body = json::object();
};

json integer(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json gf_json(const RationalGF& g) { return g.to_string(); }

IntVector grading_for(const RunConfig& cfg, const Cone& c) {
  if (!cfg.grading) return default_grading(c);
  if (cfg.grading->size() != c.dim())
    throw Error(ErrorKind::BadGrading, "grading has " + std::to_string(cfg.grading->size()) + " entries, cone has dimension " +
                                           std::to_string(c.dim()));
  check_grading(c, *cfg.grading);
  return *cfg.grading;
}

io::Document load(const RunConfig& cfg) {
  try {
    return io::parse_document(io::load_json(cfg.input));
  } catch (const io::InputError& e) {
    if (e.where().starts_with(cfg.input)) throw;
    throw io::InputError(cfg.input + ":" + e.where(), std::string(e.what()).substr(e.where().size() + 2));
  }
}

FacetSelection selection(const RunConfig& cfg, const Cone& c) { return FacetSelection(c, cfg.select); }

json failure_json(const CMCertificate& cert) {
  if (!cert.failure) return nullptr;
  return json{{"face", cert.failure->face}, {"degree", cert.failure->degree}, {"betti", cert.failure->betti}};
}

Report cmd_enumerate(const RunConfig& cfg) {
  const Cone c = io::to_cone(load(cfg));
  const FacetSelection sel = selection(cfg, c);
  const IntVector w = grading_for(cfg, c);
  Report r;
  r.body["grading"] = w;
  r.body["degree"] = cfg.degree;
  json domains = json::array();
  for (Side side : {Side::remove_delta, Side::remove_delta_prime}) {
    const DomainSpec spec{sel, side};
    const RationalGF g = domain_gf(spec);
    const TruncatedSeries direct = lattice_points(spec, w, cfg.degree);
    const TruncatedSeries series = expand(g, w, cfg.degree);
    json counts = json::array();
    const auto graded = direct.graded();
    for (std::int64_t n = 0; n <= cfg.degree; ++n) counts.push_back(graded.count(n) ? integer(graded.at(n)) : json(0));
    const bool agree = direct.coeffs == series.coeffs;
    if (!agree) r.status = Exit::verified_false;
    domains.push_back(json{{"domain", side == Side::remove_delta ? "C \\ D" : "C \\ D'"},
                           {"strict_facets", spec.strict_facets()},
                           {"gf", gf_json(g)},
                           {"counts", counts},
                           {"series_agrees", agree}});
  }
  r.body["domains"] = domains;
  return r;
}

Report cmd_reciprocity(const RunConfig& cfg) {
  const Cone c = io::to_cone(load(cfg));
  const FacetSelection sel = selection(cfg, c);
  ReciprocityOptions opts;
  opts.fields = cfg.fields;
  if (cfg.grading) opts.grading = grading_for(cfg, c);
  const ReciprocityReport rep = reciprocity_check(sel, opts);
  Report r;
  r.status = rep.holds ? Exit::ok : Exit::verified_false;
  r.body["holds"] = rep.holds;
  json cm = json::object();
  for (const auto& [field, cert] : rep.cm) cm[field.name()] = cert.is_cm;
  r.body["cm"] = cm;
  if (rep.first_disagreement) {
    const auto& d = *rep.first_disagreement;
    json fd{{"degree", d.degree}, {"lhs", integer(d.lhs)}, {"rhs", integer(d.rhs)}};
    if (d.exponent) fd["exponent"] = *d.exponent;
    r.body["first_disagreement"] = fd;
  } else {
    r.body["first_disagreement"] = nullptr;
  }
  r.body["grading"] = rep.grading;
  r.body["delta_gf"] = gf_json(rep.delta_gf);
  r.body["delta_prime_gf"] = gf_json(rep.delta_prime_gf);
  r.body["lhs"] = gf_json(rep.lhs);
  r.body["rhs"] = gf_json(rep.rhs);
  json failures = json::object();
  for (const auto& [field, cert] : rep.cm) failures[field.name()] = failure_json(cert);
  r.body["cm_failures"] = failures;
  return r;
}

Report cmd_cm(const RunConfig& cfg) {
  const io::Document doc = load(cfg);
  Report r;
  json fields = json::object();
  auto record = [&](const FieldSpec& f, const CMCertificate& cert, const HomologyProfile& h) {
    if (!cert.is_cm) r.status = Exit::verified_false;
    fields[f.name()] = json{{"cm", cert.is_cm}, {"pure", cert.pure}, {"betti", h.betti}, {"failure", failure_json(cert)}};
  };
  if (doc.is_cone()) {
    const Cone c = io::to_cone(doc);
    const PolyhedralComplex pc = boundary_subcomplex(selection(cfg, c));
    const SimplicialComplex sd = barycentric(pc);
    r.body["complex"] = "boundary subcomplex";
    r.body["rays"] = boundary_subcomplex_rays(selection(cfg, c));
    r.body["cells"] = pc.cells().size();
    for (const auto& f : cfg.fields) record(f, is_cohen_macaulay(pc, f), reduced_homology(sd, f));
  } else {
    const SimplicialComplex sc = io::to_simplicial(doc);
    r.body["complex"] = "simplicial";
    r.body["f_vector"] = sc.f_vector();
    for (const auto& f : cfg.fields) record(f, is_cohen_macaulay(sc, f), reduced_homology(sc, f));
  }
  r.body["fields"] = fields;
  return r;
}

Report cmd_separate(const RunConfig& cfg) {
  const Cone c = io::to_cone(load(cfg));
  const SeparationResult s = separation_witness(selection(cfg, c));
  Report r;
  r.status = s.separable ? Exit::ok : Exit::verified_false;
  r.body["separable"] = s.separable;
  r.body["witness"] = s.witness ? json(*s.witness) : json(nullptr);
  return r;
}

Report cmd_shell(const RunConfig& cfg) {
  const Cone c = io::to_cone(load(cfg));
  const FacetSelection sel = selection(cfg, c);
  Report r;
  RatVector p;
  if (cfg.point) {
    if (cfg.point->size() != c.dim()) throw Error(ErrorKind::InvalidInput, "point has the wrong dimension");
    p = *cfg.point;
  } else {
    const SeparationResult s = separation_witness(sel);
    r.body["separable"] = s.separable;
    if (!s.separable) {
      r.status = Exit::verified_false;
      r.body["order"] = nullptr;
      return r;
    }
    for (auto x : *s.witness) p.push_back(Rational(-x));
  }
  const ShellingOrder so = line_shelling_with_retry(c, p, cfg.seed);
  const bool prefix = is_shelling_prefix(sel, so);
  if (!prefix) r.status = Exit::verified_false;
  r.body["point"] = io::to_json(p);
  r.body["source_point"] = io::to_json(so.source_point);
  r.body["order"] = so.order;
  r.body["selection_is_prefix"] = prefix;
  return r;
}

Report cmd_colon(const RunConfig& cfg) {
  const Cone c = io::to_cone(load(cfg));
  const FacetSelection sel = selection(cfg, c);
  const ColonReport rep =
      verify_colon_identity(sel, cfg.degree, cfg.grading ? std::optional<IntVector>(grading_for(cfg, c)) : std::nullopt);
  Report r;
  r.status = rep.consistent() ? Exit::ok : Exit::verified_false;
  r.body["consistent"] = rep.consistent();
  r.body["grading"] = rep.grading;
  r.body["degree"] = rep.bound;
  r.body["points"] = rep.points;
  r.body["members"] = rep.members;
  r.body["pairs_checked"] = rep.pairs_checked;
  r.body["witnesses"] = rep.witnesses.size();
  json v = json::array();
  for (const auto& x : rep.violations) v.push_back(json{{"a", x.a}, {"b", x.b}});
  r.body["violations"] = v;
  return r;
}

Report cmd_lift(const RunConfig& cfg) {
  const EmbeddedComplex k = io::to_embedded(load(cfg));
  const LiftResult l = lift(k);
  constexpr std::size_t kPairs = 100;
  const std::size_t convex = midpoint_convexity_checks(l.arrangement, l.box_lo, l.box_hi, cfg.seed, kPairs);
  Report r;
  const bool ok = l.cells_are_faces && l.cells_on_lower_hull && l.projection_bijective && convex == kPairs;
  r.status = ok ? Exit::ok : Exit::verified_false;
  r.body["valid"] = ok;
  r.body["hyperplanes"] = l.arrangement.hyperplanes.size();
  r.body["subdivision"] = io::to_json(l.subdivision);
  json heights = json::array();
  for (const auto& h : l.heights) heights.push_back(io::to_json(h));
  r.body["heights"] = heights;
  r.body["max_height"] = io::to_json(l.max_height);
  r.body["margin"] = io::to_json(l.margin);
  json lifted = json::array();
  for (auto v : l.lifted_vertex) lifted.push_back(io::to_json(l.polytope.vertices()[v]));
  r.body["lifted_vertices"] = lifted;
  r.body["polytope_vertices"] = l.polytope.vertices().size();
  r.body["polytope_facets"] = l.polytope.facets().size();
  r.body["cells_are_faces"] = l.cells_are_faces;
  r.body["cells_on_lower_hull"] = l.cells_on_lower_hull;
  r.body["projection_bijective"] = l.projection_bijective;
  r.body["convexity_checks"] = std::to_string(convex) + "/" + std::to_string(kPairs);
  return r;
}

Report cmd_schlegel(const RunConfig& cfg) {
  const io::Document doc = load(cfg);
  if (!cfg.avoid) throw Error(ErrorKind::InvalidInput, "schlegel needs --avoid");
  if (cfg.select.empty()) throw Error(ErrorKind::InvalidInput, "schlegel needs --select");
  const EmbeddedComplex k =
      doc.is_cone() ? schlegel(io::to_cone(doc), cfg.select, *cfg.avoid) : schlegel(io::to_polytope(doc), cfg.select, *cfg.avoid);
  const bool ok = verify_embedding(k);
  Report r;
  r.status = ok ? Exit::ok : Exit::verified_false;
  r.body["embedding_valid"] = ok;
  r.body["complex"] = io::to_json(k);
  return r;
}

Report cmd_corpus(const RunConfig&) {
  Report r;
  json rows = json::array();
  for (const auto& c : acceptance::run_all()) {
    if (!c.pass) r.status = Exit::verified_false;
    rows.push_back(json{{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  r.body["criteria"] = rows;
  return r;
}

void write_text(const RunConfig& cfg, const json& body, std::ostream& out) {
  if (cfg.command == "corpus") {
    for (const auto& c : body["criteria"]) {
      acceptance::CriterionResult cr{c["id"].get<int>(), c["name"].get<std::string>(), c["pass"].get<bool>(),
                                     c["detail"].get<std::string>()};
      out << acceptance::format(cr) << '\n';
    }
    return;
  }
  for (const auto& [key, value] : body.items()) {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

const std::map<std::string, std::function<Report(const RunConfig&)>>& table() {
  static const std::map<std::string, std::function<Report(const RunConfig&)>> t{
      {"enumerate", cmd_enumerate}, {"reciprocity", cmd_reciprocity}, {"cm", cmd_cm},
      {"separate", cmd_separate},   {"shell", cmd_shell},             {"colon", cmd_colon},
      {"lift", cmd_lift},           {"schlegel", cmd_schlegel},       {"corpus", cmd_corpus}};
  return t;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"enumerate", "reciprocity", "cm",   "separate", "shell",
                                              "colon",     "lift",        "schlegel", "corpus"};
  return names;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto it = table().find(cfg.command);
  if (it == table().end()) {
    err << "error: unknown command '" << cfg.command << "'\n";
    return Exit::input_error;
  }
  if (cfg.degree < 1) {
    err << "error: --degree must be at least 1\n";
    return Exit::input_error;
  }
  if (cfg.fields.empty()) {
    err << "error: at least one --field is required\n";
    return Exit::input_error;
  }
  try {
    const Report r = it->second(cfg);
    if (cfg.format == Format::json)
      out << r.body.dump(2) << '\n';
    else
      write_text(cfg, r.body, out);
    return r.status;
  } catch (const io::InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return Exit::input_error;
}

}  // namespace recip::cli
