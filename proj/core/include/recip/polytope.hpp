#pragma once

#include <cstddef>
#include <vector>

#include "recip/arith.hpp"

namespace recip {

/// x |-> coeffs . x + constant
struct AffineFunctional {
  RatVector coeffs;
  Rational constant;

  Rational operator()(const RatVector& x) const { return dot(coeffs, x) + constant; }
  friend bool operator==(const AffineFunctional&, const AffineFunctional&) = default;
};

struct PolytopeFacet {
  AffineFunctional inequality;       // >= 0 on the polytope, integer coefficients
  std::vector<std::size_t> incident; // vertices where it vanishes
};

/// Convex polytope of any dimension inside Q^n, held in both descriptions:
/// vertices, and facet inequalities relative to the affine hull (whose
/// equations are kept separately).
class Polytope {
 public:
  /// Convex hull of the points; duplicates and non-extreme points are dropped,
  /// surviving points keep their relative order.
  static Polytope from_points(const std::vector<RatVector>& points);
  /// {x : eq(x) = 0, ineq(x) >= 0}, which must be bounded and nonempty.
  /// Vertices come from brute-force basis enumeration.
  static Polytope from_constraints(std::size_t ambient_dim, const std::vector<AffineFunctional>& inequalities,
                                   const std::vector<AffineFunctional>& equations = {});

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return dim_; }
  const std::vector<RatVector>& vertices() const { return vertices_; }
  const std::vector<PolytopeFacet>& facets() const { return facets_; }
  const std::vector<AffineFunctional>& equations() const { return equations_; }

  bool contains(const RatVector& x) const;
  RatVector centroid() const;

  /// All nonempty faces as sorted vertex-index sets, the polytope included.
  std::vector<std::vector<std::size_t>> faces() const;
  /// Smallest face containing the given vertices.
  std::vector<std::size_t> minimal_face(const std::vector<std::size_t>& vertex_subset) const;
  /// Facets (indices into facets()) vanishing on every given vertex.
  std::vector<std::size_t> facets_containing(const std::vector<std::size_t>& vertex_subset) const;

  /// Pulling triangulation; each simplex lists dim()+1 vertex indices.
  std::vector<std::vector<std::size_t>> triangulate() const;
  /// Euclidean volume; requires dim() == ambient_dim().
  Rational volume() const;

 private:
  std::size_t ambient_ = 0;
  std::size_t dim_ = 0;
  std::vector<RatVector> vertices_;
  std::vector<PolytopeFacet> facets_;
  std::vector<AffineFunctional> equations_;
};

/// Dimension of the affine hull of a point set (-1 for the empty set).
int affine_dim(const std::vector<RatVector>& points);

}  // namespace recip
