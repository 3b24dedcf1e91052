#include "recip/pl_lift.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "recip/errors.hpp"
#include "recip/separation.hpp"

namespace recip {

namespace {

using HyperplaneKey = std::pair<RatVector, Rational>;

// Primitive integer multiple with positive leading linear coefficient; false
// for a constant functional.
bool normalize(AffineFunctional& h) {
  RatVector all = h.coeffs;
  all.push_back(h.constant);
  auto lead = std::find_if(h.coeffs.begin(), h.coeffs.end(), [](const Rational& q) { return q != 0; });
  if (lead == h.coeffs.end()) return false;
  const bool flip = *lead < 0;
  const IntVector prim = primitive_integer(all);
  const std::size_t n = h.coeffs.size();
  for (std::size_t i = 0; i < n; ++i) h.coeffs[i] = static_cast<long>(flip ? -prim[i] : prim[i]);
  h.constant = static_cast<long>(flip ? -prim[n] : prim[n]);
  return true;
}

std::vector<RatVector> cell_points(const PolyhedralComplex& pc, const PolyhedralCell& cell) {
  std::vector<RatVector> pts;
  for (auto v : cell.vertices) pts.push_back(pc.vertices()[v]);
  return pts;
}

Polytope cell_polytope(const PolyhedralComplex& pc, const PolyhedralCell& cell) {
  return Polytope::from_points(cell_points(pc, cell));
}

int sign_of(const Rational& q) { return q > 0 ? 1 : q < 0 ? -1 : 0; }

// Cuts every piece along every hyperplane that passes through its interior.
std::vector<Polytope> slice(std::vector<Polytope> pieces, const Arrangement& a, std::size_t ambient) {
  for (const auto& h : a.hyperplanes) {
    std::vector<Polytope> next;
    for (auto& q : pieces) {
      bool pos = false, neg = false;
      for (const auto& v : q.vertices()) {
        const int s = sign_of(h(v));
        pos = pos || s > 0;
        neg = neg || s < 0;
      }
      if (!(pos && neg)) {
        next.push_back(std::move(q));
        continue;
      }
      std::vector<AffineFunctional> ineqs;
      for (const auto& f : q.facets()) ineqs.push_back(f.inequality);
      AffineFunctional minus{h.coeffs, -h.constant};
      for (auto& c : minus.coeffs) c = -c;
      for (const auto& side : {h, minus}) {
        auto with = ineqs;
        with.push_back(side);
        next.push_back(Polytope::from_constraints(ambient, with, q.equations()));
      }
    }
    pieces = std::move(next);
  }
  return pieces;
}

Polytope box_polytope(const RatVector& lo, const RatVector& hi) {
  const std::size_t d = lo.size();
  std::vector<AffineFunctional> ineqs;
  for (std::size_t j = 0; j < d; ++j) {
    AffineFunctional up{RatVector(d, Rational(0)), -lo[j]};
    up.coeffs[j] = 1;
    AffineFunctional down{RatVector(d, Rational(0)), hi[j]};
    down.coeffs[j] = -1;
    ineqs.push_back(std::move(up));
    ineqs.push_back(std::move(down));
  }
  return Polytope::from_constraints(d, ineqs);
}

void add_cell_constraints(const Polytope& p, std::vector<LinearConstraint>& out) {
  for (const auto& f : p.facets()) out.push_back({f.inequality.coeffs, f.inequality.constant, false});
  for (const auto& e : p.equations()) {
    out.push_back({e.coeffs, e.constant, false});
    RatVector neg = e.coeffs;
    for (auto& c : neg) c = -c;
    out.push_back({std::move(neg), -e.constant, false});
  }
}

std::vector<std::size_t> local_indices(const std::vector<std::size_t>& cell, const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> out;
  for (auto v : subset)
    out.push_back(static_cast<std::size_t>(std::lower_bound(cell.begin(), cell.end(), v) - cell.begin()));
  return out;
}

}  // namespace

Arrangement covering_arrangement(const EmbeddedComplex& k) {
  std::set<HyperplaneKey> keys;
  const auto& pc = k.complex;
  for (auto ci : pc.maximal_cells()) {
    const Polytope p = cell_polytope(pc, pc.cells()[ci]);
    std::vector<AffineFunctional> hs = p.equations();
    for (const auto& f : p.facets()) hs.push_back(f.inequality);
    for (auto& h : hs)
      if (normalize(h)) keys.emplace(h.coeffs, h.constant);
  }
  Arrangement a;
  for (const auto& [coeffs, constant] : keys) a.hyperplanes.push_back({coeffs, constant});
  return a;
}

bool covers(const Arrangement& a, const EmbeddedComplex& k) {
  const auto& pc = k.complex;
  for (auto ci : pc.maximal_cells()) {
    const auto& cell = pc.cells()[ci];
    const auto pts = cell_points(pc, cell);
    const Polytope p = Polytope::from_points(pts);

    RatMatrix through;
    for (const auto& h : a.hyperplanes)
      if (std::all_of(pts.begin(), pts.end(), [&](const RatVector& x) { return h(x) == 0; }))
        through.push_back(h.coeffs);
    if (rank(through) + p.dim() != k.ambient_dim) return false;

    for (const auto& f : p.facets()) {
      const bool cut = std::any_of(a.hyperplanes.begin(), a.hyperplanes.end(), [&](const AffineFunctional& h) {
        int side = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
          const int s = sign_of(h(pts[i]));
          const bool on = std::binary_search(f.incident.begin(), f.incident.end(), i);
          if (on != (s == 0)) return false;
          if (s != 0) {
            if (side != 0 && s != side) return false;
            side = s;
          }
        }
        return true;
      });
      if (!cut) return false;
    }
  }
  return true;
}

EmbeddedComplex induced_subdivision(const EmbeddedComplex& k, const Arrangement& a) {
  if (!covers(a, k)) throw Error(ErrorKind::ArrangementDoesNotCover, "some cell is not cut out by the arrangement");
  const auto& pc = k.complex;
  std::vector<RatVector> vertices = pc.vertices();
  std::map<RatVector, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);

  std::vector<std::vector<std::size_t>> maximal;
  for (auto ci : pc.maximal_cells()) {
    for (const auto& piece : slice({cell_polytope(pc, pc.cells()[ci])}, a, k.ambient_dim)) {
      std::vector<std::size_t> ids;
      for (const auto& v : piece.vertices()) {
        auto [it, inserted] = index.emplace(v, vertices.size());
        if (inserted) vertices.push_back(v);
        ids.push_back(it->second);
      }
      maximal.push_back(std::move(ids));
    }
  }
  return {k.ambient_dim, PolyhedralComplex::from_polytopes(std::move(vertices), maximal)};
}

Rational convex_function(const Arrangement& a, const RatVector& x) {
  Rational total = 0;
  for (const auto& h : a.hyperplanes) total += abs(h(x));
  return total;
}

LiftResult lift(const EmbeddedComplex& k) {
  const std::size_t d = k.ambient_dim;
  const auto& verts = k.complex.vertices();
  if (verts.empty()) throw Error(ErrorKind::InvalidInput, "cannot lift an empty complex");

  LiftResult r;
  r.arrangement = covering_arrangement(k);
  r.subdivision = induced_subdivision(k, r.arrangement);
  const auto& sub = r.subdivision.complex;
  for (const auto& v : sub.vertices()) r.heights.push_back(convex_function(r.arrangement, v));
  r.max_height = *std::max_element(r.heights.begin(), r.heights.end());
  r.margin = 1;

  r.box_lo = verts.front();
  r.box_hi = verts.front();
  for (const auto& v : verts)
    for (std::size_t j = 0; j < d; ++j) {
      r.box_lo[j] = std::min(r.box_lo[j], v[j]);
      r.box_hi[j] = std::max(r.box_hi[j], v[j]);
    }
  for (std::size_t j = 0; j < d; ++j) {
    r.box_lo[j] -= 1;
    r.box_hi[j] += 1;
  }

  // On each region of the arrangement inside the box, f agrees with the affine
  // function sum sign(h) h; f is the maximum of these.
  std::set<HyperplaneKey> pieces;
  if (d == 0) {
    pieces.emplace(RatVector{}, Rational(0));
  } else {
    for (const auto& region : slice({box_polytope(r.box_lo, r.box_hi)}, r.arrangement, d)) {
      const RatVector c = region.centroid();
      AffineFunctional g{RatVector(d, Rational(0)), Rational(0)};
      for (const auto& h : r.arrangement.hyperplanes) {
        const int s = sign_of(h(c));
        for (std::size_t j = 0; j < d; ++j) g.coeffs[j] += s * h.coeffs[j];
        g.constant += s * h.constant;
      }
      pieces.emplace(g.coeffs, g.constant);
    }
  }

  std::vector<AffineFunctional> ineqs;
  for (std::size_t j = 0; j < d; ++j) {
    AffineFunctional up{RatVector(d + 1, Rational(0)), -r.box_lo[j]};
    up.coeffs[j] = 1;
    AffineFunctional down{RatVector(d + 1, Rational(0)), r.box_hi[j]};
    down.coeffs[j] = -1;
    ineqs.push_back(std::move(up));
    ineqs.push_back(std::move(down));
  }
  AffineFunctional top{RatVector(d + 1, Rational(0)), r.max_height + r.margin};
  top.coeffs[d] = -1;
  ineqs.push_back(std::move(top));
  for (const auto& [coeffs, constant] : pieces) {
    AffineFunctional above{RatVector(d + 1, Rational(0)), -constant};
    for (std::size_t j = 0; j < d; ++j) above.coeffs[j] = -coeffs[j];
    above.coeffs[d] = 1;
    ineqs.push_back(std::move(above));
  }
  r.polytope = Polytope::from_constraints(d + 1, ineqs);

  const auto& pv = r.polytope.vertices();
  const std::size_t missing = pv.size();
  bool all_found = true;
  for (std::size_t i = 0; i < sub.vertices().size(); ++i) {
    RatVector x = sub.vertices()[i];
    x.push_back(r.heights[i]);
    const auto it = std::find(pv.begin(), pv.end(), x);
    r.lifted_vertex.push_back(it == pv.end() ? missing : static_cast<std::size_t>(it - pv.begin()));
    all_found = all_found && it != pv.end();
  }

  r.cells_are_faces = all_found;
  r.cells_on_lower_hull = all_found;
  r.projection_bijective = all_found;
  {
    auto distinct = r.lifted_vertex;
    std::sort(distinct.begin(), distinct.end());
    r.projection_bijective = r.projection_bijective && std::adjacent_find(distinct.begin(), distinct.end()) == distinct.end();
  }
  for (const auto& cell : sub.cells()) {
    std::vector<std::size_t> lifted;
    std::vector<RatVector> pts;
    for (auto v : cell.vertices) {
      lifted.push_back(r.lifted_vertex[v]);
      if (all_found) pts.push_back(pv[r.lifted_vertex[v]]);
    }
    std::sort(lifted.begin(), lifted.end());
    if (all_found) {
      if (r.polytope.minimal_face(lifted) != lifted) r.cells_are_faces = false;
      const auto containing = r.polytope.facets_containing(lifted);
      const bool lower = std::any_of(containing.begin(), containing.end(), [&](std::size_t f) {
        return r.polytope.facets()[f].inequality.coeffs[d] > 0;
      });
      if (!lower) r.cells_on_lower_hull = false;
      if (affine_dim(pts) != cell.dim) r.projection_bijective = false;
    }
    r.lifted_cells.push_back(std::move(lifted));
  }
  return r;
}

std::size_t midpoint_convexity_checks(const Arrangement& a, const RatVector& lo, const RatVector& hi,
                                      std::uint64_t seed, std::size_t pairs) {
  std::mt19937_64 rng(seed);
  auto sample = [&] {
    RatVector x(lo.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
      Rational t(static_cast<long>(rng() % 257), 256);
      t.canonicalize();
      x[j] = lo[j] + (hi[j] - lo[j]) * t;
    }
    return x;
  };
  std::size_t passed = 0;
  for (std::size_t i = 0; i < pairs; ++i) {
    const RatVector p = sample(), q = sample();
    RatVector mid(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) mid[j] = (p[j] + q[j]) / 2;
    if (2 * convex_function(a, mid) <= convex_function(a, p) + convex_function(a, q)) ++passed;
  }
  return passed;
}

Rational support_volume(const EmbeddedComplex& k) {
  Rational total = 0;
  const auto& pc = k.complex;
  for (const auto& cell : pc.cells())
    if (static_cast<std::size_t>(cell.dim) == k.ambient_dim) total += cell_polytope(pc, cell).volume();
  return total;
}

bool verify_embedding(const EmbeddedComplex& k) {
  const auto& pc = k.complex;
  {
    std::set<RatVector> seen;
    for (const auto& v : pc.vertices()) {
      if (v.size() != k.ambient_dim) return false;
      if (!seen.insert(v).second) return false;
    }
  }
  const auto maximal = pc.maximal_cells();
  std::vector<Polytope> polys;
  for (auto ci : maximal) {
    const auto& cell = pc.cells()[ci];
    Polytope p = cell_polytope(pc, cell);
    if (p.vertices().size() != cell.vertices.size()) return false;
    if (static_cast<int>(p.dim()) != cell.dim) return false;
    for (const auto& face : p.faces()) {
      std::vector<std::size_t> global;
      for (auto l : face) global.push_back(cell.vertices[l]);
      if (pc.find_cell(global) < 0) return false;
    }
    polys.push_back(std::move(p));
  }

  for (std::size_t i = 0; i < maximal.size(); ++i) {
    for (std::size_t j = i + 1; j < maximal.size(); ++j) {
      const auto& a = pc.cells()[maximal[i]].vertices;
      const auto& b = pc.cells()[maximal[j]].vertices;
      std::vector<std::size_t> shared;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));

      std::vector<LinearConstraint> cons;
      add_cell_constraints(polys[i], cons);
      add_cell_constraints(polys[j], cons);
      if (!shared.empty()) {
        const auto la = local_indices(a, shared), lb = local_indices(b, shared);
        if (polys[i].minimal_face(la) != la || polys[j].minimal_face(lb) != lb) return false;
        // Zero exactly on the shared face within the first cell.
        LinearConstraint beyond{RatVector(k.ambient_dim, Rational(0)), Rational(0), true};
        for (auto f : polys[i].facets_containing(la)) {
          const auto& ineq = polys[i].facets()[f].inequality;
          for (std::size_t t = 0; t < k.ambient_dim; ++t) beyond.coeffs[t] += ineq.coeffs[t];
          beyond.constant += ineq.constant;
        }
        cons.push_back(std::move(beyond));
      }
      if (fourier_motzkin(k.ambient_dim, cons)) return false;
    }
  }
  return true;
}

EmbeddedComplex schlegel(const Polytope& p, const std::vector<std::size_t>& facets, std::size_t avoid) {
  const std::size_t n = p.ambient_dim();
  if (p.dim() != n || n == 0) throw Error(ErrorKind::InvalidInput, "schlegel needs a full-dimensional polytope");
  const auto nf = p.facets().size();
  if (avoid >= nf) throw Error(ErrorKind::InvalidInput, "avoided facet out of range");
  for (auto f : facets) {
    if (f >= nf) throw Error(ErrorKind::InvalidInput, "facet index out of range");
    if (f == avoid) throw Error(ErrorKind::SubcomplexTouchesAvoidedFacet, "the avoided facet is selected");
  }

  const AffineFunctional& a = p.facets()[avoid].inequality;
  RatVector centre(n, Rational(0));
  const auto& inc = p.facets()[avoid].incident;
  for (auto v : inc)
    for (std::size_t j = 0; j < n; ++j) centre[j] += p.vertices()[v][j];
  for (auto& x : centre) x /= static_cast<long>(inc.size());

  // Step outwards from the facet centroid until only `avoid` is violated.
  RatVector eye;
  for (Rational t = 1;; t /= 2) {
    eye = centre;
    for (std::size_t j = 0; j < n; ++j) eye[j] -= t * a.coeffs[j];
    bool beyond = true;
    for (std::size_t f = 0; f < nf && beyond; ++f)
      if (f != avoid) beyond = p.facets()[f].inequality(eye) > 0;
    if (beyond) break;
  }

  std::size_t drop = 0;
  while (a.coeffs[drop] == 0) ++drop;
  std::set<std::size_t> used;
  for (auto f : facets) used.insert(p.facets()[f].incident.begin(), p.facets()[f].incident.end());
  std::map<std::size_t, std::size_t> index;
  std::vector<RatVector> coords;
  const Rational ay = a(eye);
  for (auto v : used) {
    const auto& x = p.vertices()[v];
    const Rational s = ay / (ay - a(x));
    RatVector img;
    for (std::size_t j = 0; j < n; ++j)
      if (j != drop) img.push_back(eye[j] + s * (x[j] - eye[j]));
    index[v] = coords.size();
    coords.push_back(std::move(img));
  }
  std::vector<std::vector<std::size_t>> cells;
  for (auto f : facets) {
    std::vector<std::size_t> ids;
    for (auto v : p.facets()[f].incident) ids.push_back(index[v]);
    cells.push_back(std::move(ids));
  }
  return {n - 1, PolyhedralComplex::from_polytopes(std::move(coords), cells)};
}

EmbeddedComplex schlegel(const Cone& c, const std::vector<std::size_t>& facets, std::size_t avoid) {
  const std::size_t d = c.dim();
  if (d < 2) throw Error(ErrorKind::InvalidInput, "cone has no proper boundary to project");
  IntVector w(d, 0);
  for (const auto& f : c.facets())
    for (std::size_t j = 0; j < d; ++j) w[j] += f.coeffs[j];
  std::size_t drop = 0;
  while (w[drop] == 0) ++drop;
  std::vector<RatVector> pts;
  for (const auto& r : c.rays()) {
    const Rational s(1, dot(w, r));
    RatVector x;
    for (std::size_t j = 0; j < d; ++j)
      if (j != drop) x.push_back(s * r[j]);
    pts.push_back(std::move(x));
  }
  const Polytope p = Polytope::from_points(pts);
  auto polytope_facet = [&](std::size_t i) {
    if (i >= c.facets().size()) throw Error(ErrorKind::InvalidInput, "facet index out of range");
    for (std::size_t f = 0; f < p.facets().size(); ++f)
      if (p.facets()[f].incident == c.facet(i).incident_rays) return f;
    throw std::logic_error("cone facet has no cross-section facet");
  };
  std::vector<std::size_t> mapped;
  for (auto f : facets) mapped.push_back(polytope_facet(f));
  return schlegel(p, mapped, polytope_facet(avoid));
}

}  // namespace recip
