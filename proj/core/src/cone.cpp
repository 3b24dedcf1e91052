#include "recip/cone.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "recip/errors.hpp"

namespace recip {

namespace {

void validate_vectors(const std::vector<IntVector>& vs, const char* what) {
  if (vs.empty()) throw Error(ErrorKind::InvalidInput, std::string("no ") + what + " given");
  const std::size_t d = vs.front().size();
  if (d == 0) throw Error(ErrorKind::InvalidInput, std::string(what) + " must have positive length");
  for (const auto& v : vs) {
    if (v.size() != d) throw Error(ErrorKind::InvalidInput, std::string(what) + " have inconsistent lengths");
    if (is_zero(v)) throw Error(ErrorKind::InvalidInput, std::string("zero vector among ") + what);
  }
  if (vs.size() > kMaxConeRays)
    throw Error(ErrorKind::InvalidInput,
                std::string("too many ") + what + " (" + std::to_string(vs.size()) + " > " +
                    std::to_string(kMaxConeRays) + ")");
}

RatMatrix as_rows(const std::vector<IntVector>& vs) {
  RatMatrix rows;
  rows.reserve(vs.size());
  for (const auto& v : vs) rows.push_back(to_rational(v));
  return rows;
}

// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::size_t rank_of(const std::vector<IntVector>& vs) { return vs.empty() ? 0 : rank(as_rows(vs)); }

}  // namespace

SpanHull span_hull(const std::vector<IntVector>& vectors) {
  SpanHull hull;
  if (vectors.empty()) return hull;
  const std::size_t m = vectors.front().size();
  const RatMatrix rows = as_rows(vectors);
  hull.span_dim = rank(rows);
  for (const auto& v : nullspace(rows, m)) hull.orthogonal.push_back(primitive_integer(v));
  if (hull.span_dim == 0) return hull;

  std::set<IntVector> seen;
  for_each_subset(vectors.size(), hull.span_dim - 1, [&](const std::vector<std::size_t>& subset) {
    RatMatrix sys;
    for (auto i : subset) sys.push_back(rows[i]);
    if (rank(sys) != subset.size()) return;
    for (const auto& o : hull.orthogonal) sys.push_back(to_rational(o));
    const RatMatrix ns = nullspace(sys, m);
    if (ns.size() != 1) return;
    IntVector normal = primitive_integer(ns.front());
    bool pos = false, neg = false;
    for (const auto& v : vectors) {
      const auto s = dot(normal, v);
      pos |= s > 0;
      neg |= s < 0;
    }
    if (pos && neg) return;
    if (neg) for (auto& x : normal) x = -x;
    if (!seen.insert(normal).second) return;
    SpanFacet facet{normal, {}};
    for (std::size_t i = 0; i < vectors.size(); ++i)
      if (dot(normal, vectors[i]) == 0) facet.incident.push_back(i);
    hull.facets.push_back(std::move(facet));
  });

  // Pointed iff the facet normals together with the orthogonal complement span
  // the ambient space (no line survives all facet inequalities).
  std::vector<IntVector> all = hull.orthogonal;
  for (const auto& f : hull.facets) all.push_back(f.normal);
  hull.pointed = !hull.facets.empty() && rank_of(all) == m;
  return hull;
}

Cone Cone::from_rays(const std::vector<IntVector>& generators) {
  validate_vectors(generators, "rays");
  const std::size_t d = generators.front().size();
  std::vector<IntVector> rays;
  for (const auto& g : generators) {
    IntVector p = primitive(g);
    if (std::find(rays.begin(), rays.end(), p) == rays.end()) rays.push_back(std::move(p));
  }

  const SpanHull hull = span_hull(rays);
  if (hull.span_dim < d) throw Error(ErrorKind::NotFullDimensional, "rays span a proper subspace");
  if (!hull.pointed) throw Error(ErrorKind::NotPointed, "cone contains a line");

  // Keep extreme rays only: those lying on d-1 independent facets.
  std::vector<IntVector> extreme;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    std::vector<IntVector> tight;
    for (const auto& f : hull.facets)
      if (dot(f.normal, rays[i]) == 0) tight.push_back(f.normal);
    if (rank_of(tight) == d - 1) extreme.push_back(rays[i]);
  }

  std::vector<FacetFunctional> facets;
  for (const auto& f : hull.facets) {
    FacetFunctional ff{f.normal, {}};
    for (std::size_t i = 0; i < extreme.size(); ++i)
      if (dot(f.normal, extreme[i]) == 0) ff.incident_rays.push_back(i);
    facets.push_back(std::move(ff));
  }
  std::sort(facets.begin(), facets.end(),
            [](const FacetFunctional& a, const FacetFunctional& b) { return a.coeffs < b.coeffs; });
  return Cone(d, std::move(extreme), std::move(facets));
}

Cone Cone::from_inequalities(const std::vector<IntVector>& inequalities) {
  validate_vectors(inequalities, "inequalities");
  const std::size_t d = inequalities.front().size();
  std::vector<IntVector> ineqs;
  for (const auto& v : inequalities) {
    IntVector p = primitive(v);
    if (std::find(ineqs.begin(), ineqs.end(), p) != ineqs.end())
      throw Error(ErrorKind::InvalidInput, "duplicate inequality");
    ineqs.push_back(std::move(p));
  }

  // Rays of C are the facet normals of the dual cone generated by the inequalities.
  const SpanHull dual = span_hull(ineqs);
  if (dual.span_dim < d) throw Error(ErrorKind::NotPointed, "inequalities leave a line in the cone");
  if (!dual.pointed) throw Error(ErrorKind::NotFullDimensional, "inequalities cut out a lower-dimensional cone");

  std::vector<IntVector> rays;
  for (const auto& f : dual.facets) rays.push_back(f.normal);
  std::sort(rays.begin(), rays.end());

  std::vector<FacetFunctional> facets;
  for (std::size_t k = 0; k < ineqs.size(); ++k) {
    FacetFunctional ff{ineqs[k], {}};
    std::vector<IntVector> tight;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (dot(ineqs[k], rays[i]) == 0) {
        ff.incident_rays.push_back(i);
        tight.push_back(rays[i]);
      }
    }
    if (rank_of(tight) != d - 1)
      throw Error(ErrorKind::InvalidInput, "inequality " + std::to_string(k) + " does not define a facet");
    facets.push_back(std::move(ff));
  }
  return Cone(d, std::move(rays), std::move(facets));
}

bool Cone::contains(const IntVector& x) const {
  return std::all_of(facets_.begin(), facets_.end(), [&](const FacetFunctional& f) { return f(x) >= 0; });
}

Cone dual_description(const std::vector<IntVector>& rays) { return Cone::from_rays(rays); }

std::vector<std::size_t> rays_on_facets(const Cone& c, const std::vector<std::size_t>& facets) {
  std::vector<std::size_t> rays(c.rays().size());
  for (std::size_t i = 0; i < rays.size(); ++i) rays[i] = i;
  for (auto f : facets) {
    const auto& inc = c.facet(f).incident_rays;
    std::vector<std::size_t> next;
    std::set_intersection(rays.begin(), rays.end(), inc.begin(), inc.end(), std::back_inserter(next));
    rays = std::move(next);
  }
  return rays;
}

std::vector<Face> faces_of(const Cone& c) {
  std::vector<std::size_t> all(c.rays().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  std::set<std::vector<std::size_t>> seen{all};
  std::deque<std::vector<std::size_t>> queue{all};
  while (!queue.empty()) {
    const auto face = queue.front();
    queue.pop_front();
    for (const auto& f : c.facets()) {
      std::vector<std::size_t> next;
      std::set_intersection(face.begin(), face.end(), f.incident_rays.begin(), f.incident_rays.end(),
                            std::back_inserter(next));
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }

  std::vector<Face> faces;
  for (const auto& rays : seen) {
    Face face;
    face.rays = rays;
    for (std::size_t k = 0; k < c.facets().size(); ++k) {
      const auto& inc = c.facet(k).incident_rays;
      if (std::includes(inc.begin(), inc.end(), rays.begin(), rays.end())) face.tight_facets.push_back(k);
    }
    std::vector<IntVector> span;
    for (auto r : rays) span.push_back(c.rays()[r]);
    face.dim = rank_of(span);
    faces.push_back(std::move(face));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return a.rays < b.rays;
  });
  return faces;
}

}  // namespace recip
