#include "recip/topology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "recip/errors.hpp"

namespace recip {

namespace {

std::vector<Face> selected_faces(const FacetSelection& sel) {
  std::vector<Face> out;
  for (auto& f : faces_of(sel.cone())) {
    if (f.dim == 0) continue;
    const bool inside = std::any_of(f.tight_facets.begin(), f.tight_facets.end(),
                                    [&](std::size_t i) { return sel.is_selected(i); });
    if (inside) out.push_back(std::move(f));
  }
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

bool connected(const SimplicialComplex& sc) {
  const auto used = sc.used_vertices();
  if (used.empty()) return false;
  UnionFind uf(sc.vertex_count());
  for (const auto& f : sc.facets())
    for (std::size_t i = 1; i < f.size(); ++i) uf.unite(f[0], f[i]);
  const auto root = uf.find(used.front());
  return std::all_of(used.begin(), used.end(), [&](Vertex v) { return uf.find(v) == root; });
}

BallSphere recognize_graph(const SimplicialComplex& sc) {
  if (!sc.is_pure() || !connected(sc)) return BallSphere::other;
  std::map<Vertex, int> degree;
  for (const auto& e : sc.facets()) {
    ++degree[e[0]];
    ++degree[e[1]];
  }
  int ends = 0;
  for (const auto& [v, d] : degree) {
    if (d > 2) return BallSphere::other;
    if (d == 1) ++ends;
  }
  if (ends == 0) return BallSphere::sphere;
  return ends == 2 ? BallSphere::ball : BallSphere::other;
}

BallSphere recognize_surface(const SimplicialComplex& sc) {
  if (!sc.is_pure() || !connected(sc)) return BallSphere::other;
  std::map<Simplex, int> edge_use;
  for (const auto& t : sc.facets())
    for (std::size_t j = 0; j < 3; ++j) {
      Simplex e = t;
      e.erase(e.begin() + static_cast<std::ptrdiff_t>(j));
      ++edge_use[e];
    }
  std::vector<Simplex> boundary_edges;
  for (const auto& [e, n] : edge_use) {
    if (n > 2) return BallSphere::other;
    if (n == 1) boundary_edges.push_back(e);
  }
  for (auto v : sc.used_vertices()) {
    const auto r = recognize_graph(link(sc, {v}));
    if (r != BallSphere::ball && r != BallSphere::sphere) return BallSphere::other;
  }
  const std::int64_t chi = sc.reduced_euler_characteristic() + 1;
  if (boundary_edges.empty()) return chi == 2 ? BallSphere::sphere : BallSphere::other;
  const SimplicialComplex rim(sc.vertex_count(), boundary_edges);
  if (recognize_graph(rim) != BallSphere::sphere) return BallSphere::other;
  return chi == 1 ? BallSphere::ball : BallSphere::other;
}

CMCertificate reisner_scan(const SimplicialComplex& sc, const FieldSpec& field) {
  CMCertificate cert;
  cert.pure = sc.is_pure();
  const int top = sc.dim();
  const auto& faces = sc.faces();
  for (std::size_t k = 0; k < faces.size(); ++k) {
    const int bound = top - static_cast<int>(k);
    for (const auto& s : faces[k]) {
      const auto h = reduced_homology(k == 0 ? sc : link(sc, s), field);
      for (int i = -1; i < bound; ++i) {
        if (h[i] != 0) {
          cert.failure = CMFailure{s, i, h[i]};
          return cert;
        }
      }
    }
  }
  cert.is_cm = !sc.is_void();
  return cert;
}

}  // namespace

PolyhedralComplex boundary_subcomplex(const FacetSelection& sel) {
  const Cone& c = sel.cone();
  const IntVector w = default_grading(c);
  const auto faces = selected_faces(sel);
  const auto used = boundary_subcomplex_rays(sel);
  std::vector<std::size_t> index(c.rays().size(), 0);
  std::vector<RatVector> vertices;
  for (std::size_t i = 0; i < used.size(); ++i) {
    index[used[i]] = i;
    const auto& r = c.rays()[used[i]];
    RatVector v = to_rational(r);
    const Rational scale(1, dot(w, r));
    for (auto& x : v) x *= scale;
    vertices.push_back(std::move(v));
  }
  std::vector<PolyhedralCell> cells;
  for (const auto& f : faces) {
    PolyhedralCell cell;
    for (auto r : f.rays) cell.vertices.push_back(index[r]);
    cell.dim = static_cast<int>(f.dim) - 1;
    cells.push_back(std::move(cell));
  }
  return PolyhedralComplex(std::move(vertices), std::move(cells));
}

std::vector<std::size_t> boundary_subcomplex_rays(const FacetSelection& sel) {
  std::set<std::size_t> used;
  for (const auto& f : selected_faces(sel)) used.insert(f.rays.begin(), f.rays.end());
  return {used.begin(), used.end()};
}

CMCertificate is_cohen_macaulay(const SimplicialComplex& sc, const FieldSpec& field) {
  return reisner_scan(sc, field);
}

CMCertificate is_cohen_macaulay(const PolyhedralComplex& pc, const FieldSpec& field) {
  return reisner_scan(barycentric(pc), field);
}

BallSphere recognize_ball_sphere(const SimplicialComplex& sc) {
  if (sc.is_void()) return BallSphere::other;
  switch (sc.dim()) {
    case -1:
      return BallSphere::sphere;
    case 0: {
      const auto n = sc.used_vertices().size();
      return n == 1 ? BallSphere::ball : n == 2 ? BallSphere::sphere : BallSphere::other;
    }
    case 1:
      return recognize_graph(sc);
    case 2:
      return recognize_surface(sc);
    default:
      return BallSphere::unknown;
  }
}

ManifoldReport is_manifold_with_boundary(const SimplicialComplex& sc) {
  const int d = sc.dim();
  if (d > 3) throw Error(ErrorKind::DimensionTooHigh, "manifold recognition needs dimension <= 3");
  ManifoldReport report;
  if (sc.is_void() || d < 0) return report;
  std::vector<Simplex> rim;
  const auto& faces = sc.faces();
  for (std::size_t k = 1; k < faces.size(); ++k) {
    for (const auto& s : faces[k]) {
      const auto l = link(sc, s);
      if (l.dim() != d - static_cast<int>(k)) return report;
      const auto kind = recognize_ball_sphere(l);
      if (kind == BallSphere::ball) {
        if (static_cast<int>(k) == d) rim.push_back(s);
      } else if (kind != BallSphere::sphere) {
        return report;
      }
    }
  }
  report.is_manifold = true;
  if (!rim.empty()) report.boundary = SimplicialComplex(sc.vertex_count(), std::move(rim));
  return report;
}

BoundaryInequality boundary_inequality_check(const SimplicialComplex& sc, const FieldSpec& field) {
  if (sc.dim() != 3) throw Error(ErrorKind::NotAManifold, "expected a 3-dimensional complex");
  const auto m = is_manifold_with_boundary(sc);
  if (!m.is_manifold) throw Error(ErrorKind::NotAManifold, "some link is neither a ball nor a sphere");
  BoundaryInequality out;
  out.h1 = reduced_homology(sc, field)[1];
  out.h1_boundary = reduced_homology(m.boundary, field)[1];
  out.holds = 2 * out.h1 >= out.h1_boundary;
  return out;
}

}  // namespace recip
