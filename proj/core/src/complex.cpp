#include "recip/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "recip/errors.hpp"
#include "recip/polytope.hpp"

namespace recip {

SimplicialComplex::SimplicialComplex(std::size_t vertex_count, std::vector<Simplex> facets)
    : vertex_count_(vertex_count) {
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw Error(ErrorKind::InvalidInput, "simplex repeats a vertex");
    if (!f.empty() && f.back() >= vertex_count)
      throw Error(ErrorKind::InvalidInput, "vertex " + std::to_string(f.back()) + " out of range");
  }
  std::sort(facets.begin(), facets.end(), [](const Simplex& a, const Simplex& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (auto& f : facets) {
    const bool covered = std::any_of(facets_.begin(), facets_.end(), [&](const Simplex& g) {
      return std::includes(g.begin(), g.end(), f.begin(), f.end());
    });
    if (!covered) facets_.push_back(std::move(f));
  }
  std::sort(facets_.begin(), facets_.end());
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Simplex& f) { return f.size() == facets_.front().size(); });
}

const std::vector<std::vector<Simplex>>& SimplicialComplex::faces() const {
  if (faces_ready_) return faces_;
  std::vector<std::set<Simplex>> by_size;
  if (!facets_.empty()) by_size.resize(static_cast<std::size_t>(dim()) + 2);
  for (const auto& f : facets_) {
    const std::size_t n = f.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) s.push_back(f[i]);
      by_size[s.size()].insert(std::move(s));
    }
  }
  faces_.clear();
  for (auto& level : by_size) faces_.emplace_back(level.begin(), level.end());
  faces_ready_ = true;
  return faces_;
}

bool SimplicialComplex::contains(const Simplex& face) const {
  Simplex s = face;
  std::sort(s.begin(), s.end());
  const auto& all = faces();
  if (s.size() >= all.size()) return false;
  return std::binary_search(all[s.size()].begin(), all[s.size()].end(), s);
}

std::vector<Vertex> SimplicialComplex::used_vertices() const {
  std::set<Vertex> vs;
  for (const auto& f : facets_) vs.insert(f.begin(), f.end());
  return {vs.begin(), vs.end()};
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& level : faces()) f.push_back(level.size());
  return f;
}

std::int64_t SimplicialComplex::reduced_euler_characteristic() const {
  std::int64_t chi = 0;
  const auto f = f_vector();
  for (std::size_t k = 0; k < f.size(); ++k) {
    // f[k] counts faces of dimension k-1.
    const auto n = static_cast<std::int64_t>(f[k]);
    chi += (k % 2 == 1) ? n : -n;
  }
  return chi;
}

SimplicialComplex link(const SimplicialComplex& sc, const Simplex& face) {
  Simplex s = face;
  std::sort(s.begin(), s.end());
  if (!sc.contains(s)) throw Error(ErrorKind::FaceNotPresent, "face is not in the complex");
  std::vector<Simplex> facets;
  for (const auto& f : sc.facets()) {
    if (!std::includes(f.begin(), f.end(), s.begin(), s.end())) continue;
    Simplex rest;
    std::set_difference(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(rest));
    facets.push_back(std::move(rest));
  }
  return SimplicialComplex(sc.vertex_count(), std::move(facets));
}

PolyhedralComplex::PolyhedralComplex(std::vector<RatVector> vertices, std::vector<PolyhedralCell> cells)
    : vertices_(std::move(vertices)), cells_(std::move(cells)) {
  for (auto& c : cells_) {
    std::sort(c.vertices.begin(), c.vertices.end());
    if (c.vertices.empty()) throw Error(ErrorKind::InvalidInput, "cell without vertices");
    if (c.vertices.back() >= vertices_.size()) throw Error(ErrorKind::InvalidInput, "cell vertex out of range");
  }
  std::sort(cells_.begin(), cells_.end(), [](const PolyhedralCell& a, const PolyhedralCell& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.vertices < b.vertices;
  });
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

PolyhedralComplex PolyhedralComplex::from_polytopes(std::vector<RatVector> vertices,
                                                    const std::vector<std::vector<std::size_t>>& maximal_cells) {
  std::set<std::vector<std::size_t>> seen;
  std::vector<PolyhedralCell> cells;
  for (const auto& mc : maximal_cells) {
    std::vector<std::size_t> ids = mc;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<RatVector> pts;
    for (auto i : ids) {
      if (i >= vertices.size()) throw Error(ErrorKind::InvalidInput, "cell vertex out of range");
      pts.push_back(vertices[i]);
    }
    const Polytope p = Polytope::from_points(pts);
    if (p.vertices().size() != ids.size())
      throw Error(ErrorKind::InvalidInput, "cell lists a point that is not a vertex of its convex hull");
    for (const auto& local : p.faces()) {
      std::vector<std::size_t> global;
      std::vector<RatVector> fp;
      for (auto l : local) {
        global.push_back(ids[l]);
        fp.push_back(pts[l]);
      }
      std::sort(global.begin(), global.end());
      if (seen.insert(global).second) cells.push_back({global, affine_dim(fp)});
    }
  }
  return PolyhedralComplex(std::move(vertices), std::move(cells));
}

PolyhedralComplex PolyhedralComplex::from_simplicial(const SimplicialComplex& sc, std::vector<RatVector> coordinates) {
  if (coordinates.size() < sc.vertex_count()) throw Error(ErrorKind::InvalidInput, "missing vertex coordinates");
  std::vector<PolyhedralCell> cells;
  const auto& faces = sc.faces();
  for (std::size_t k = 1; k < faces.size(); ++k)
    for (const auto& s : faces[k]) cells.push_back({std::vector<std::size_t>(s.begin(), s.end()), static_cast<int>(k) - 1});
  return PolyhedralComplex(std::move(coordinates), std::move(cells));
}

int PolyhedralComplex::dim() const { return cells_.empty() ? -1 : cells_.back().dim; }

std::vector<std::size_t> PolyhedralComplex::maximal_cells() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    bool covered = false;
    for (std::size_t j = i + 1; j < cells_.size() && !covered; ++j) {
      if (cells_[j].dim <= cells_[i].dim) continue;
      covered = std::includes(cells_[j].vertices.begin(), cells_[j].vertices.end(), cells_[i].vertices.begin(),
                              cells_[i].vertices.end());
    }
    if (!covered) out.push_back(i);
  }
  return out;
}

std::ptrdiff_t PolyhedralComplex::find_cell(const std::vector<std::size_t>& vertex_set) const {
  std::vector<std::size_t> s = vertex_set;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].vertices == s) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

SimplicialComplex barycentric(const PolyhedralComplex& pc) {
  const auto& cells = pc.cells();
  // covers[i]: cells of dimension dim(i) - 1 contained in cell i.
  std::vector<std::vector<std::size_t>> covers(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = 0; j < cells.size(); ++j) {
      if (cells[j].dim + 1 != cells[i].dim) continue;
      if (std::includes(cells[i].vertices.begin(), cells[i].vertices.end(), cells[j].vertices.begin(),
                        cells[j].vertices.end()))
        covers[i].push_back(j);
    }
  }

  std::vector<Simplex> chains;
  Simplex chain;
  auto descend = [&](auto&& self, std::size_t cell) -> void {
    chain.push_back(static_cast<Vertex>(cell));
    if (covers[cell].empty()) {
      chains.push_back(chain);
    } else {
      for (auto sub : covers[cell]) self(self, sub);
    }
    chain.pop_back();
  };
  for (auto top : pc.maximal_cells()) descend(descend, top);
  return SimplicialComplex(cells.size(), std::move(chains));
}

std::vector<RatVector> barycenters(const PolyhedralComplex& pc) {
  std::vector<RatVector> out;
  const std::size_t n = pc.ambient_dim();
  for (const auto& c : pc.cells()) {
    RatVector b(n, Rational(0));
    for (auto v : c.vertices)
      for (std::size_t i = 0; i < n; ++i) b[i] += pc.vertices()[v][i];
    for (auto& x : b) x /= static_cast<long>(c.vertices.size());
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace recip
