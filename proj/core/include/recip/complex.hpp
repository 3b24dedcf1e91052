#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "recip/arith.hpp"

namespace recip {

using Vertex = std::uint32_t;
using Simplex = std::vector<Vertex>;  // sorted, distinct

/// Abstract simplicial complex given by its facets. Two degenerate cases are
/// distinguished: the void complex (no faces at all) and {∅} (only the empty
/// face, dimension -1), which is what the link of a facet looks like.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;  // void
  /// Sorts each facet, drops duplicates and faces contained in others.
  SimplicialComplex(std::size_t vertex_count, std::vector<Simplex> facets);

  static SimplicialComplex empty_face_only() { return SimplicialComplex(0, {Simplex{}}); }

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Simplex>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  /// -1 for {∅} and for the void complex.
  int dim() const;
  bool is_pure() const;

  /// faces()[i+1] holds the sorted i-dimensional faces, i = -1..dim().
  const std::vector<std::vector<Simplex>>& faces() const;
  bool contains(const Simplex& face) const;
  /// Vertices that occur in some facet.
  std::vector<Vertex> used_vertices() const;
  /// f_{-1}, f_0, ..., f_dim
  std::vector<std::size_t> f_vector() const;
  /// -f_{-1} + f_0 - f_1 + ...
  std::int64_t reduced_euler_characteristic() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertex_count_ == b.vertex_count_ && a.facets_ == b.facets_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Simplex> facets_;
  mutable std::vector<std::vector<Simplex>> faces_;  // lazily filled
  mutable bool faces_ready_ = false;
};

/// {σ : σ ∩ face = ∅, σ ∪ face ∈ sc}; Error(FaceNotPresent) if face ∉ sc.
SimplicialComplex link(const SimplicialComplex& sc, const Simplex& face);

/// Finite polyhedral complex: every cell is the convex hull of its vertices,
/// the collection is closed under faces, and face-of is vertex-set inclusion.
struct PolyhedralCell {
  std::vector<std::size_t> vertices;  // sorted
  int dim = 0;
  friend bool operator==(const PolyhedralCell&, const PolyhedralCell&) = default;
};

class PolyhedralComplex {
 public:
  PolyhedralComplex() = default;
  /// Cells must be closed under faces; they are sorted by (dim, vertices).
  PolyhedralComplex(std::vector<RatVector> vertices, std::vector<PolyhedralCell> cells);
  /// Takes the convex hull of each listed vertex set and adds all faces.
  static PolyhedralComplex from_polytopes(std::vector<RatVector> vertices,
                                          const std::vector<std::vector<std::size_t>>& maximal_cells);
  /// Geometric realization of a simplicial complex (all faces as cells).
  static PolyhedralComplex from_simplicial(const SimplicialComplex& sc, std::vector<RatVector> coordinates);

  const std::vector<RatVector>& vertices() const { return vertices_; }
  const std::vector<PolyhedralCell>& cells() const { return cells_; }
  std::size_t ambient_dim() const { return vertices_.empty() ? 0 : vertices_.front().size(); }
  int dim() const;
  /// Cells not contained in another cell.
  std::vector<std::size_t> maximal_cells() const;
  /// Index of the cell with exactly this vertex set, or -1.
  std::ptrdiff_t find_cell(const std::vector<std::size_t>& vertex_set) const;

 private:
  std::vector<RatVector> vertices_;
  std::vector<PolyhedralCell> cells_;
};

/// Vertices are the cells of pc (vertex i = cell i), facets are the maximal
/// chains of the face poset.
SimplicialComplex barycentric(const PolyhedralComplex& pc);
/// Vertex averages of the cells, indexed like barycentric(pc)'s vertices.
std::vector<RatVector> barycenters(const PolyhedralComplex& pc);

}  // namespace recip
