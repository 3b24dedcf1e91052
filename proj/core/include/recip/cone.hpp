#pragma once

#include <cstddef>
#include <vector>

#include "recip/arith.hpp"

namespace recip {

/// Inputs above this size are rejected: facet enumeration is brute force over
/// (d-1)-subsets of rays.
inline constexpr std::size_t kMaxConeRays = 12;

/// Facet inequality l_F(x) = coeffs . x >= 0 of a cone.
struct FacetFunctional {
  IntVector coeffs;                         // primitive
  std::vector<std::size_t> incident_rays;   // sorted; rays with l_F(r) = 0

  std::int64_t operator()(const IntVector& x) const { return dot(coeffs, x); }
  Rational operator()(const RatVector& x) const { return dot(coeffs, x); }
};

/// Pointed, full-dimensional rational cone carried both by its extreme rays
/// and by its facet functionals.
class Cone {
 public:
  /// Converts generators to the dual description; non-extreme generators are
  /// dropped, the remaining rays keep their input order, and facets are sorted
  /// lexicographically by coefficient vector.
  static Cone from_rays(const std::vector<IntVector>& generators);
  /// Builds a cone from facet inequalities. Facets keep the given order (so
  /// user-facing facet indices refer to the input); rays come out sorted.
  static Cone from_inequalities(const std::vector<IntVector>& inequalities);

  std::size_t dim() const { return dim_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<FacetFunctional>& facets() const { return facets_; }
  const FacetFunctional& facet(std::size_t i) const { return facets_.at(i); }

  /// l_F(x) >= 0 for all facets.
  bool contains(const IntVector& x) const;

  friend bool operator==(const Cone&, const Cone&) = default;

 private:
  Cone(std::size_t dim, std::vector<IntVector> rays, std::vector<FacetFunctional> facets)
      : dim_(dim), rays_(std::move(rays)), facets_(std::move(facets)) {}

  std::size_t dim_ = 0;
  std::vector<IntVector> rays_;
  std::vector<FacetFunctional> facets_;
};

/// Same as Cone::from_rays.
Cone dual_description(const std::vector<IntVector>& rays);

/// A face of a cone: the facets containing it, the rays spanning it, and its
/// dimension (rank of the spanning rays).
struct Face {
  std::vector<std::size_t> tight_facets;
  std::vector<std::size_t> rays;
  std::size_t dim = 0;

  friend bool operator==(const Face&, const Face&) = default;
};

/// Every face exactly once, from C itself down to the origin; ordered by
/// decreasing dimension, then by ray index set.
std::vector<Face> faces_of(const Cone& c);

/// The face cut out by a set of facets (rays incident to all of them).
std::vector<std::size_t> rays_on_facets(const Cone& c, const std::vector<std::size_t>& facets);

/// Facets of the cone generated by `vectors` inside their own linear span.
/// Each normal lies in the span, is nonnegative on all vectors, and vanishes
/// exactly on `incident`. Used for cones of any dimension and (after
/// homogenization) for polytopes.
struct SpanFacet {
  IntVector normal;
  std::vector<std::size_t> incident;
};
struct SpanHull {
  std::size_t span_dim = 0;
  std::vector<SpanFacet> facets;       // unordered
  std::vector<IntVector> orthogonal;   // basis of the span's orthogonal complement
  bool pointed = true;                 // false when some line lies in the cone
};
SpanHull span_hull(const std::vector<IntVector>& vectors);

}  // namespace recip
