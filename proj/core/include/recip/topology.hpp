#pragma once

// Topological side of the reciprocity question: the cross-sectional boundary
// complex of a facet selection, Cohen-Macaulayness via links, and
// ball/sphere/manifold recognition in low dimensions.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "recip/complex.hpp"
#include "recip/enumerator.hpp"
#include "recip/homology.hpp"

namespace recip {

/// The complex generated by the selected facets, cut with {w . x = 1} for the
/// default grading. Vertices are the used rays scaled onto the hyperplane, in
/// ray order.
PolyhedralComplex boundary_subcomplex(const FacetSelection& sel);
/// Indices of the rays that became vertices of boundary_subcomplex(sel).
std::vector<std::size_t> boundary_subcomplex_rays(const FacetSelection& sel);

struct CMFailure {
  Simplex face;
  int degree = 0;         // i with b~_i(link face) != 0
  std::size_t betti = 0;  // that Betti number
};

struct CMCertificate {
  bool is_cm = false;
  bool pure = true;
  std::optional<CMFailure> failure;  // present iff !is_cm
};

/// Reisner's criterion: b~_i(link s) = 0 for every face s (the empty face
/// first) and every i < dim(sc) - |s|. For a pure complex that bound is
/// dim(link s); a non-pure complex fails at the latest at a facet of less
/// than full size, whose link {∅} has b~_{-1} = 1.
CMCertificate is_cohen_macaulay(const SimplicialComplex& sc, const FieldSpec& field);
/// Decided on the barycentric subdivision; a failing face lists cell indices.
CMCertificate is_cohen_macaulay(const PolyhedralComplex& pc, const FieldSpec& field);

enum class BallSphere { ball, sphere, other, unknown };
constexpr std::string_view to_string(BallSphere t) {
  switch (t) {
    case BallSphere::ball: return "ball";
    case BallSphere::sphere: return "sphere";
    case BallSphere::other: return "other";
    case BallSphere::unknown: return "unknown";
  }
  return "unknown";
}

/// Decisive up to dimension 2; unknown from dimension 3 on. {∅} is the
/// (-1)-sphere, the void complex is other.
BallSphere recognize_ball_sphere(const SimplicialComplex& sc);

struct ManifoldReport {
  bool is_manifold = false;
  SimplicialComplex boundary;  // faces whose link is a ball; void when closed
};

/// Every nonempty face's link must be a ball or sphere of dimension
/// dim(sc) - |face|. Error(DimensionTooHigh) for dim > 3.
ManifoldReport is_manifold_with_boundary(const SimplicialComplex& sc);

struct BoundaryInequality {
  std::size_t h1 = 0;           // dim H_1(K)
  std::size_t h1_boundary = 0;  // dim H_1(dK)
  bool holds = false;           // 2 h1 >= h1_boundary
};

/// Error(NotAManifold) unless sc is a 3-manifold with boundary.
BoundaryInequality boundary_inequality_check(const SimplicialComplex& sc, const FieldSpec& field);

}  // namespace recip
