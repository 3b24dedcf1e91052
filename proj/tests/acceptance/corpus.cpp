#include "corpus.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "recip/errors.hpp"

namespace recip::corpus {

Cone quadrant() { return Cone::from_rays({{1, 0}, {0, 1}}); }

Cone square_cone() { return Cone::from_inequalities({{1, 0, 0}, {-1, 0, 1}, {0, 1, 0}, {0, -1, 1}}); }

Cone pentagon_cone() { return Cone::from_rays({{1, 0, 1}, {1, 1, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}}); }

Cone hexagon_cone() {
  return Cone::from_rays({{1, 0, 1}, {1, 1, 1}, {0, 1, 1}, {-1, 0, 1}, {-1, -1, 1}, {0, -1, 1}});
}

Cone random_cone(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  while (true) {
    const std::size_t n = 5 + rng() % 4;
    std::vector<IntVector> rays;
    for (std::size_t i = 0; i < n; ++i) {
      const auto x = static_cast<std::int64_t>(rng() % 7) - 3;
      const auto y = static_cast<std::int64_t>(rng() % 7) - 3;
      const auto z = static_cast<std::int64_t>(1 + rng() % 3);
      rays.push_back({x, y, z});
    }
    try {
      Cone c = Cone::from_rays(rays);
      if (c.rays().size() >= 5) return c;
    } catch (const Error&) {
    }
  }
}

std::vector<NamedCone> cones() {
  return {{"quadrant", quadrant()},       {"square", square_cone()},
          {"pentagon", pentagon_cone()},  {"hexagon", hexagon_cone()},
          {"random-1", random_cone(1)},   {"random-2", random_cone(2)}};
}

SimplicialComplex hollow_triangle() { return SimplicialComplex(3, {{0, 1}, {1, 2}, {0, 2}}); }
SimplicialComplex two_points() { return SimplicialComplex(2, {{0}, {1}}); }
SimplicialComplex path2() { return SimplicialComplex(3, {{0, 1}, {1, 2}}); }
SimplicialComplex two_disjoint_edges() { return SimplicialComplex(4, {{0, 1}, {2, 3}}); }
SimplicialComplex tetrahedron_boundary() {
  return SimplicialComplex(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}
SimplicialComplex tetrahedron() { return SimplicialComplex(4, {{0, 1, 2, 3}}); }
SimplicialComplex two_triangles() { return SimplicialComplex(4, {{0, 1, 2}, {1, 2, 3}}); }
SimplicialComplex three_triangles_on_edge() { return SimplicialComplex(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}); }

SimplicialComplex projective_plane() {
  return SimplicialComplex(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                               {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}});
}

SimplicialComplex annulus() {
  auto v = [](int x, int y) { return static_cast<Vertex>(x * 4 + y); };
  std::vector<Simplex> tris;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == 1 && j == 1) continue;
      tris.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
      tris.push_back({v(i, j), v(i, j + 1), v(i + 1, j + 1)});
    }
  return SimplicialComplex(16, tris);
}

SimplicialComplex cube_ring(int rows, int cols, const std::vector<std::pair<int, int>>& holes) {
  auto v = [&](int x, int y, int z) { return static_cast<Vertex>((x * (cols + 1) + y) * 2 + z); };
  std::vector<Simplex> tets;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (std::find(holes.begin(), holes.end(), std::make_pair(i, j)) != holes.end()) continue;
      std::array<int, 3> axes{0, 1, 2};
      do {
        std::array<int, 3> p{i, j, 0};
        Simplex t{v(p[0], p[1], p[2])};
        for (int a : axes) {
          ++p[static_cast<std::size_t>(a)];
          t.push_back(v(p[0], p[1], p[2]));
        }
        tets.push_back(std::move(t));
      } while (std::next_permutation(axes.begin(), axes.end()));
    }
  return SimplicialComplex(static_cast<std::size_t>((rows + 1) * (cols + 1) * 2), tets);
}

SimplicialComplex solid_torus() { return cube_ring(3, 3, {{1, 1}}); }
SimplicialComplex genus2_handlebody() { return cube_ring(3, 5, {{1, 1}, {1, 3}}); }

std::vector<NamedComplex> complexes() {
  return {{"hollow-triangle", hollow_triangle()},
          {"two-points", two_points()},
          {"path", path2()},
          {"two-edges", two_disjoint_edges()},
          {"tetrahedron-boundary", tetrahedron_boundary()},
          {"tetrahedron", tetrahedron()},
          {"two-triangles", two_triangles()},
          {"three-triangles", three_triangles_on_edge()},
          {"projective-plane", projective_plane()},
          {"annulus", annulus()},
          {"solid-torus", solid_torus()},
          {"genus-2", genus2_handlebody()}};
}

EmbeddedComplex two_segments() {
  return {1, PolyhedralComplex::from_polytopes({{0}, {1}, {2}, {3}}, {{0, 1}, {2, 3}})};
}

EmbeddedComplex two_triangles_plane() {
  return {2, PolyhedralComplex::from_polytopes({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {{0, 1, 2}, {1, 2, 3}})};
}

}  // namespace recip::corpus
