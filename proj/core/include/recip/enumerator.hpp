#pragma once

// Lattice-point enumerators of the reciprocal domains C \ Delta and
// C \ Delta', by direct enumeration and as rational generating functions.

#include <cstddef>
#include <vector>

#include "recip/cone.hpp"
#include "recip/laurent.hpp"

namespace recip {

/// A nonempty proper subset G of the facets of a cone. Delta is the boundary
/// subcomplex generated by G, Delta' the one generated by the complement.
class FacetSelection {
 public:
  /// Throws Error(InvalidInput) for empty, full, or out-of-range selections.
  FacetSelection(Cone cone, std::vector<std::size_t> selected);

  const Cone& cone() const { return cone_; }
  const std::vector<std::size_t>& selected() const { return selected_; }
  std::vector<std::size_t> complement() const;
  bool is_selected(std::size_t facet) const;

 private:
  Cone cone_;
  std::vector<std::size_t> selected_;  // sorted, distinct
};

enum class Side { remove_delta, remove_delta_prime };

/// Lattice points of C, strictly inside the facets of G (remove_delta) or of
/// F \ G (remove_delta_prime).
struct DomainSpec {
  FacetSelection selection;
  Side side = Side::remove_delta;

  std::vector<std::size_t> strict_facets() const;
  bool contains(const IntVector& a) const;
};

/// w = sum of all facet functionals; positive on every nonzero point of C.
IntVector default_grading(const Cone& c);
/// Throws Error(BadGrading) unless w . r > 0 for every ray.
void check_grading(const Cone& c, const IntVector& w);

/// All lattice points a of C with w . a <= bound, each with coefficient 1.
TruncatedSeries cone_lattice_points(const Cone& c, const IntVector& w, std::int64_t bound);
/// All points a of the domain with w . a <= bound, each with coefficient 1.
TruncatedSeries lattice_points(const DomainSpec& spec, const IntVector& w, std::int64_t bound);

/// A simplicial cone of a triangulation with its half-open flags; open[i]
/// means the facet opposite generators[i] is removed.
struct SimplicialPiece {
  std::vector<IntVector> generators;
  std::vector<bool> open;
  friend bool operator==(const SimplicialPiece&, const SimplicialPiece&) = default;
};

/// Placing triangulation of the cone spanned by `rays` (extreme rays of a
/// pointed cone of any dimension, in placing order), with half-open flags
/// that make the pieces partition the lattice points of the cone.
std::vector<SimplicialPiece> triangulate_rays(const std::vector<IntVector>& rays);
std::vector<SimplicialPiece> triangulate(const Cone& c);

/// Generating function of the half-open simplicial cone: numerator sums the
/// lattice points of the half-open fundamental parallelepiped.
RationalGF simplicial_gf(const std::vector<IntVector>& generators, const std::vector<bool>& open);

/// Generating function of the lattice points of the closed face spanned by
/// the given rays of c (1 for the origin face).
RationalGF face_gf(const Cone& c, const std::vector<std::size_t>& face_rays);

/// Enumerator of the domain by inclusion-exclusion over the faces cut out by
/// subsets of the strict facets; canonical (sorted primitive denominator).
RationalGF domain_gf(const DomainSpec& spec);

}  // namespace recip
