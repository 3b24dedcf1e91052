#pragma once

// Linear separation of Delta from Delta' by exact Fourier-Motzkin
// elimination, and Bruggesser-Mani line shellings of the cross-section.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "recip/enumerator.hpp"

namespace recip {

/// coeffs . x + constant > 0 (strict) or >= 0.
struct LinearConstraint {
  RatVector coeffs;
  Rational constant;
  bool strict = false;
};

/// A point satisfying every constraint, or nullopt when the system is
/// infeasible. Variables are eliminated from the last one down; the point is
/// rebuilt by back-substitution (midpoint of a bounded interval, bound +- 1 of
/// a half-line, 0 when unconstrained).
std::optional<RatVector> fourier_motzkin(std::size_t nvars, const std::vector<LinearConstraint>& constraints);

struct SeparationResult {
  bool separable = false;
  std::optional<IntVector> witness;  // l_F(p) > 0 on G, < 0 on F \ G
};

SeparationResult separation_witness(const FacetSelection& sel);

struct ShellingOrder {
  std::vector<std::size_t> order;  // facet indices
  RatVector source_point;
};

/// Facets of the cross-section {w . x = 1} (default grading) in the order in
/// which the line from the vertex centroid towards p crosses their
/// hyperplanes: forward crossings by increasing parameter, then, after
/// passing through infinity, the backward ones by increasing parameter. The
/// facets {F : l_F(p) < 0} form an initial segment. p is homogeneous (any
/// nonzero vector; points with w . p <= 0 sit at or beyond infinity).
/// Error(DegeneratePoint) when p lies on a facet hyperplane, the line is
/// parallel to one, or two crossings coincide.
ShellingOrder line_shelling(const Cone& c, const RatVector& p);

/// line_shelling at p, or, on Error(DegeneratePoint), at p plus a small
/// seeded offset that keeps every sign l_F(p) != 0; gives up after `attempts`.
ShellingOrder line_shelling_with_retry(const Cone& c, const RatVector& p, std::uint64_t seed, int attempts = 32);

/// sel.selected() equals the first |G| entries of so.order as a set.
bool is_shelling_prefix(const FacetSelection& sel, const ShellingOrder& so);

}  // namespace recip
