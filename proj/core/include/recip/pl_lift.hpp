#pragma once

// Piecewise-linear constructions on polyhedral complexes embedded in Q^d:
// Schlegel projection of boundary pieces, subdivision by a hyperplane
// arrangement, and the lift of an embedded complex onto the lower hull of a
// (d+1)-polytope.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "recip/complex.hpp"
#include "recip/cone.hpp"
#include "recip/polytope.hpp"

namespace recip {

struct EmbeddedComplex {
  std::size_t ambient_dim = 0;
  PolyhedralComplex complex;
};

/// Affine hyperplanes {h = 0}, each h with primitive integer coefficients
/// whose first nonzero linear coefficient is positive; sorted, distinct.
struct Arrangement {
  std::vector<AffineFunctional> hyperplanes;
};

/// Facet hyperplanes and affine-hull equations of every cell.
Arrangement covering_arrangement(const EmbeddedComplex& k);
/// Every maximal cell is its affine hull (an intersection of hyperplanes of a)
/// cut by halfspaces of a.
bool covers(const Arrangement& a, const EmbeddedComplex& k);

/// Cells of k cut along every hyperplane of a. Vertices of k keep their
/// indices, new vertices are appended. Error(ArrangementDoesNotCover).
EmbeddedComplex induced_subdivision(const EmbeddedComplex& k, const Arrangement& a);

/// f(x) = sum |h(x)|, convex and affine on each cell of the arrangement.
Rational convex_function(const Arrangement& a, const RatVector& x);

struct LiftResult {
  Arrangement arrangement;
  EmbeddedComplex subdivision;           // K'
  std::vector<Rational> heights;         // f at the vertices of K'
  Rational max_height;                   // M
  Rational margin;                       // epsilon
  RatVector box_lo, box_hi;              // bounding box of K enlarged by 1
  Polytope polytope;                     // {x in box, f(x) <= t <= M + epsilon}
  std::vector<std::size_t> lifted_vertex;            // K' vertex -> polytope vertex
  std::vector<std::vector<std::size_t>> lifted_cells;  // per K' cell, sorted polytope vertices

  // Certificates, recomputed by lift() itself.
  bool cells_are_faces = false;      // every lifted cell is a face of the polytope
  bool cells_on_lower_hull = false;  // ... lying in a facet whose normal points up
  bool projection_bijective = false; // lifted cells project onto K' cell by cell
};

LiftResult lift(const EmbeddedComplex& k);

/// Seeded midpoint-convexity checks f((a+b)/2) <= (f(a)+f(b))/2 on random
/// pairs of points in the box; returns how many pairs passed.
std::size_t midpoint_convexity_checks(const Arrangement& a, const RatVector& lo, const RatVector& hi,
                                      std::uint64_t seed, std::size_t pairs);

/// Sum of the volumes of the cells of full dimension.
Rational support_volume(const EmbeddedComplex& k);

/// Every pair of maximal cells meets in a common face (possibly empty), every
/// face of a cell is a cell, and no two vertices coincide.
bool verify_embedding(const EmbeddedComplex& k);

/// Central projection of the selected facets of a full-dimensional polytope
/// in Q^(d+1) from a point just beyond facet `avoid`, onto that facet's
/// hyperplane, written in d coordinates. Error(SubcomplexTouchesAvoidedFacet)
/// when `avoid` is selected.
EmbeddedComplex schlegel(const Polytope& p, const std::vector<std::size_t>& facets, std::size_t avoid);
/// Same for the cross-section polytope of a cone ({w . x = 1}, default
/// grading); facet indices are those of the cone.
EmbeddedComplex schlegel(const Cone& c, const std::vector<std::size_t>& facets, std::size_t avoid);

}  // namespace recip
