#pragma once

// Named inputs shared by the acceptance runner, the unit tests and the
// `recip corpus` subcommand.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "recip/cone.hpp"
#include "recip/complex.hpp"
#include "recip/pl_lift.hpp"

namespace recip::corpus {

struct NamedCone {
  std::string name;
  Cone cone;
};

struct NamedComplex {
  std::string name;
  SimplicialComplex complex;
};

Cone quadrant();
/// Facets in the order x, z - x, y, z - y, so {0, 2} is an adjacent pair and
/// {0, 1} an opposite pair.
Cone square_cone();
Cone pentagon_cone();
Cone hexagon_cone();
/// Pointed 3-dimensional cone with at least 5 extreme rays, drawn from at most 8 random rays (x, y, z) with
/// |x|, |y| <= 3 and 1 <= z <= 3.
Cone random_cone(std::uint64_t seed);

/// quadrant, square, pentagon, hexagon, two seeded random cones.
std::vector<NamedCone> cones();

SimplicialComplex hollow_triangle();
SimplicialComplex two_points();
SimplicialComplex path2();
SimplicialComplex two_disjoint_edges();
SimplicialComplex tetrahedron_boundary();
SimplicialComplex tetrahedron();
SimplicialComplex two_triangles();
SimplicialComplex three_triangles_on_edge();
SimplicialComplex projective_plane();
/// 3 x 3 ring of squares (center removed), two triangles each.
SimplicialComplex annulus();
/// Ring of unit cubes in a rows x cols x 1 grid with the given cells removed,
/// each cube split into the 6 simplices of its Kuhn triangulation.
SimplicialComplex cube_ring(int rows, int cols, const std::vector<std::pair<int, int>>& holes);
SimplicialComplex solid_torus();
SimplicialComplex genus2_handlebody();

std::vector<NamedComplex> complexes();

EmbeddedComplex two_segments();   // {[0,1], [2,3]} in R^1
EmbeddedComplex two_triangles_plane();  // unit square split along a diagonal

}  // namespace recip::corpus
