#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "corpus.hpp"
#include "recip/errors.hpp"
#include "recip/separation.hpp"
#include "recip/topology.hpp"

using namespace recip;

namespace {

LinearConstraint con(RatVector a, Rational b, bool strict) { return {std::move(a), std::move(b), strict}; }

bool satisfies(const std::vector<LinearConstraint>& cs, const RatVector& x) {
  for (const auto& c : cs) {
    const Rational v = dot(c.coeffs, x) + c.constant;
    if (c.strict ? v <= 0 : v < 0) return false;
  }
  return true;
}

// Some integer point of [-r, r]^d with l_F > 0 on G and < 0 elsewhere.
bool box_has_witness(const FacetSelection& sel, std::int64_t r) {
  const Cone& c = sel.cone();
  IntVector p(c.dim(), -r);
  while (true) {
    bool ok = true;
    for (std::size_t f = 0; f < c.facets().size() && ok; ++f) {
      const auto v = c.facet(f)(p);
      ok = sel.is_selected(f) ? v > 0 : v < 0;
    }
    if (ok) return true;
    std::size_t i = 0;
    while (i < p.size() && p[i] == r) p[i++] = -r;
    if (i == p.size()) return false;
    ++p[i];
  }
}

Cone cube_cone() {
  std::vector<IntVector> rays;
  for (int m = 0; m < 8; ++m) rays.push_back({m & 1, (m >> 1) & 1, (m >> 2) & 1, 1});
  return Cone::from_rays(rays);
}

}  // namespace

TEST_CASE("Fourier-Motzkin feasibility") {
  const std::vector<LinearConstraint> open_interval{con({1}, 0, true), con({-1}, 1, true)};
  const auto x = fourier_motzkin(1, open_interval);
  REQUIRE(x);
  CHECK(satisfies(open_interval, *x));
  CHECK((*x)[0] == Rational(1, 2));

  CHECK_FALSE(fourier_motzkin(1, {con({1}, 0, true), con({-1}, 0, true)}));
  const auto point = fourier_motzkin(1, {con({1}, 0, false), con({-1}, 0, false)});
  REQUIRE(point);
  CHECK((*point)[0] == 0);

  // Open triangle x > 0, y > 0, x + y < 1.
  const std::vector<LinearConstraint> tri{con({1, 0}, 0, true), con({0, 1}, 0, true), con({-1, -1}, 1, true)};
  const auto t = fourier_motzkin(2, tri);
  REQUIRE(t);
  CHECK(satisfies(tri, *t));
  // x + y > 1 as well: empty.
  auto empty = tri;
  empty.push_back(con({1, 1}, -1, true));
  CHECK_FALSE(fourier_motzkin(2, empty));
  // Unconstrained variable.
  CHECK(fourier_motzkin(3, {con({1, 0, 0}, -5, false)}));
  CHECK_THROWS_AS(fourier_motzkin(2, {con({1}, 0, true)}), Error);
}

TEST_CASE("square cone separation") {
  const Cone sq = corpus::square_cone();
  const auto adj = separation_witness(FacetSelection(sq, {0, 2}));
  REQUIRE(adj.separable);
  CHECK(*adj.witness == IntVector{1, 1, 0});
  // Opposite pair: x > 0, z > x, y < 0, z < y has no solution.
  CHECK_FALSE(separation_witness(FacetSelection(sq, {0, 1})).separable);
}

TEST_CASE("separation witnesses agree with a box search") {
  for (const auto& [name, c] : corpus::cones()) {
    const std::size_t nf = c.facets().size();
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << nf); ++mask) {
      std::vector<std::size_t> g;
      for (std::size_t f = 0; f < nf; ++f)
        if (mask >> f & 1u) g.push_back(f);
      const FacetSelection sel(c, g);
      const auto r = separation_witness(sel);
      INFO(name << " mask " << mask);
      if (box_has_witness(sel, 4)) CHECK(r.separable);
      if (r.separable) {
        for (std::size_t f = 0; f < nf; ++f) CHECK((c.facet(f)(*r.witness) > 0) == sel.is_selected(f));
      }
    }
  }
}

TEST_CASE("line shellings: prefixes are balls") {
  for (const Cone& c : {corpus::pentagon_cone(), corpus::hexagon_cone(), corpus::random_cone(1), cube_cone()}) {
    const std::size_t nf = c.facets().size();
    RatVector p(c.dim(), 0);
    for (std::size_t i = 0; i < c.dim(); ++i) p[i] = Rational(static_cast<long>(3 * i + 1), 7) - Rational(1, 3);
    const ShellingOrder so = line_shelling_with_retry(c, p, 11);
    std::vector<std::size_t> sorted = so.order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> all(nf);
    std::iota(all.begin(), all.end(), 0);
    REQUIRE(sorted == all);
    for (std::size_t k = 1; k < nf; ++k) {
      const FacetSelection prefix(c, std::vector<std::size_t>(so.order.begin(), so.order.begin() + static_cast<long>(k)));
      CHECK(recognize_ball_sphere(barycentric(boundary_subcomplex(prefix))) == BallSphere::ball);
      CHECK(is_shelling_prefix(prefix, so));
    }
  }
}

TEST_CASE("separable selections are shelling prefixes") {
  for (const auto& [name, c] : corpus::cones()) {
    if (c.dim() != 3) continue;
    const std::size_t nf = c.facets().size();
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << nf); ++mask) {
      std::vector<std::size_t> g;
      for (std::size_t f = 0; f < nf; ++f)
        if (mask >> f & 1u) g.push_back(f);
      const FacetSelection sel(c, g);
      const auto r = separation_witness(sel);
      if (!r.separable) continue;
      RatVector p;
      for (auto x : *r.witness) p.push_back(-x);
      INFO(name << " mask " << mask);
      CHECK(is_shelling_prefix(sel, line_shelling_with_retry(c, p, 0)));
    }
  }
}

TEST_CASE("degenerate shelling points") {
  const Cone sq = corpus::square_cone();
  CHECK_THROWS_AS(line_shelling(sq, {0, 1, 3}), Error);  // on the hyperplane x = 0
  CHECK_THROWS_AS(line_shelling(sq, {1, 2}), Error);
  // (1, 1, 2) is a multiple of the centroid, so the line is undefined until perturbed.
  CHECK_NOTHROW(line_shelling_with_retry(sq, {1, 1, 2}, 5));
}
