#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "oracles.hpp"
#include "recip/enumerator.hpp"
#include "recip/errors.hpp"
#include "recip/laurent.hpp"

using namespace recip;

namespace {

RationalGF univariate(const std::vector<std::pair<std::int64_t, long>>& terms, int k) {
  RationalGF g{LaurentPolynomial(1), {}};
  for (const auto& [e, c] : terms) g.numerator.add_term({e}, c);
  for (int i = 0; i < k; ++i) g.denominator.push_back({1});
  return g;
}

// Exponents of the brute-force box scan, for comparison with a TruncatedSeries.
std::map<Exponent, Integer> loop_points(const Cone& c, const std::vector<std::size_t>& strict, const IntVector& w,
                                        long bound) {
  std::vector<std::vector<long>> ineqs;
  std::vector<bool> is_strict;
  for (std::size_t f = 0; f < c.facets().size(); ++f) {
    ineqs.emplace_back(c.facet(f).coeffs.begin(), c.facet(f).coeffs.end());
    is_strict.push_back(std::find(strict.begin(), strict.end(), f) != strict.end());
  }
  long radius = 1;
  for (const auto& r : c.rays())
    for (auto x : r) radius = std::max(radius, bound * std::abs(x));
  std::map<Exponent, Integer> out;
  for (const auto& a : oracle::lattice_loop(ineqs, is_strict, std::vector<long>(w.begin(), w.end()), bound, radius))
    out[Exponent(a.begin(), a.end())] = 1;
  return out;
}

}  // namespace

TEST_CASE("laurent polynomial arithmetic") {
  const auto x = LaurentPolynomial::monomial({1});
  const auto one = LaurentPolynomial::constant(1, 1);
  const auto p = (one - x) * (one + x);
  CHECK(p == one - LaurentPolynomial::monomial({2}));
  CHECK(p.inverted() == one - LaurentPolynomial::monomial({-2}));
  CHECK(p.shifted({2}).coefficient({2}) == 1);
  CHECK(p.evaluate({Rational(1, 2)}) == Rational(3, 4));
  CHECK(LaurentPolynomial::monomial({-1}).evaluate({0}) == std::nullopt);
  CHECK((LaurentPolynomial::monomial({1, 2}) * Integer(-3)).to_string() == "-3*x0*x1^2");
}

TEST_CASE("simplicial generating functions") {
  const RationalGF closed = simplicial_gf({{1, 0}, {0, 1}}, {false, false});
  CHECK(gf_equal(closed, RationalGF{LaurentPolynomial::constant(2, 1), {{1, 0}, {0, 1}}}));
  const RationalGF half = simplicial_gf({{1, 0}, {0, 1}}, {true, false});
  CHECK(gf_equal(half, RationalGF{LaurentPolynomial::monomial({1, 0}), {{1, 0}, {0, 1}}}));

  // Parallelepiped of (1,0), (1,2) contains 0 and (1,1).
  const RationalGF g = simplicial_gf({{1, 0}, {1, 2}}, {false, false});
  LaurentPolynomial num = LaurentPolynomial::constant(2, 1);
  num.add_term({1, 1}, 1);
  CHECK(gf_equal(g, RationalGF{num, {{1, 0}, {1, 2}}}));

  const Cone c = Cone::from_rays({{1, 0}, {1, 2}});
  const IntVector w = default_grading(c);
  CHECK(expand(g, w, 12).coeffs == loop_points(c, {}, w, 12));
  CHECK_THROWS_AS(simplicial_gf({{1, 0}, {2, 0}}, {false, false}), Error);
}

TEST_CASE("lattice_points matches a brute-force box scan") {
  for (const auto& [name, c] : corpus::cones()) {
    const IntVector w = default_grading(c);
    for (std::size_t f = 0; f < c.facets().size(); ++f) {
      const FacetSelection sel(c, {f});
      for (Side side : {Side::remove_delta, Side::remove_delta_prime}) {
        const DomainSpec spec{sel, side};
        INFO(name << " facet " << f);
        CHECK(lattice_points(spec, w, 6).coeffs == loop_points(c, spec.strict_facets(), w, 6));
      }
    }
  }
}

TEST_CASE("domain_gf expands to lattice_points on every pair selection") {
  for (const auto& [name, c] : corpus::cones()) {
    const IntVector w = default_grading(c);
    const std::size_t nf = c.facets().size();
    for (std::size_t i = 0; i < nf; ++i)
      for (std::size_t j = i + 1; j < nf; ++j) {
        if (nf == 2) continue;
        const FacetSelection sel(c, {i, j});
        for (Side side : {Side::remove_delta, Side::remove_delta_prime}) {
          const DomainSpec spec{sel, side};
          INFO(name << " {" << i << "," << j << "}");
          CHECK(expand(domain_gf(spec), w, 6) == lattice_points(spec, w, 6));
        }
      }
  }
}

TEST_CASE("domain_gf does not depend on the triangulation") {
  const std::vector<IntVector> rays{{1, 0, 1}, {1, 1, 1}, {0, 1, 1}, {-1, 0, 1}, {-1, -1, 1}, {0, -1, 1}};
  const Cone base = Cone::from_rays(rays);
  std::vector<IntVector> rotated(rays.begin() + 2, rays.end());
  rotated.insert(rotated.end(), rays.begin(), rays.begin() + 2);
  std::vector<IntVector> reversed(rays.rbegin(), rays.rend());
  for (const auto& order : {rotated, reversed}) {
    const Cone other = Cone::from_rays(order);
    REQUIRE(other.facets().size() == base.facets().size());
    for (std::size_t f = 0; f < base.facets().size(); ++f) REQUIRE(other.facet(f).coeffs == base.facet(f).coeffs);
    CHECK(triangulate(other) != triangulate(base));
    for (const auto& sel : std::vector<std::vector<std::size_t>>{{0}, {1, 3}, {0, 2, 4}}) {
      for (Side side : {Side::remove_delta, Side::remove_delta_prime}) {
        const RationalGF a = domain_gf({FacetSelection(base, sel), side});
        const RationalGF b = domain_gf({FacetSelection(other, sel), side});
        CHECK(gf_equal(a, b));
      }
    }
  }
}

TEST_CASE("triangulation pieces partition the cone") {
  const Cone c = corpus::hexagon_cone();
  const IntVector w = default_grading(c);
  std::vector<std::pair<Integer, RationalGF>> parts;
  for (const auto& p : triangulate(c)) parts.emplace_back(1, simplicial_gf(p.generators, p.open));
  CHECK(expand(linear_combination(3, parts), w, 8).coeffs == loop_points(c, {}, w, 8));
}

TEST_CASE("variable inversion is an involution") {
  for (const auto& [name, c] : corpus::cones()) {
    const RationalGF g = domain_gf({FacetSelection(c, {0}), Side::remove_delta});
    CHECK(gf_equal(invert_variables(invert_variables(g)), g));
    CHECK(invert_variables(g).denominator == g.denominator);
  }
}

TEST_CASE("gf_equal") {
  const RationalGF a = univariate({{0, 1}}, 1);
  RationalGF b{LaurentPolynomial(1), {{1}, {1}}};
  b.numerator.add_term({0}, 1);
  b.numerator.add_term({1}, -1);
  CHECK(gf_equal(a, b));  // (1 - t) / (1 - t)^2
  RationalGF c{LaurentPolynomial(1), {{2}}};
  c.numerator.add_term({0}, 1);
  c.numerator.add_term({1}, 1);
  CHECK(gf_equal(a, c));  // (1 + t) / (1 - t^2)
  CHECK_FALSE(gf_equal(a, univariate({{1, 1}}, 1)));
  CHECK(cross_difference(a, c).is_zero());
}

TEST_CASE("specialization of the square cone") {
  const Cone sq = corpus::square_cone();
  const RationalGF g = domain_gf({FacetSelection(sq, {0, 2}), Side::remove_delta});
  CHECK(gf_equal(specialize(g, {0, 0, 1}), univariate({{1, 1}, {2, 1}}, 3)));
}

TEST_CASE("grading checks") {
  const Cone sq = corpus::square_cone();
  CHECK(default_grading(sq) == IntVector{0, 0, 2});
  CHECK_NOTHROW(check_grading(sq, {0, 0, 1}));
  CHECK_THROWS_AS(check_grading(sq, {1, 0, 0}), Error);
  CHECK_THROWS_AS(check_grading(sq, {0, 1}), Error);
  CHECK_THROWS_AS(expand(univariate({{0, 1}}, 1), {-1}, 3), Error);
}

TEST_CASE("facet selections") {
  const Cone sq = corpus::square_cone();
  CHECK_THROWS_AS(FacetSelection(sq, {}), Error);
  CHECK_THROWS_AS(FacetSelection(sq, {0, 1, 2, 3}), Error);
  CHECK_THROWS_AS(FacetSelection(sq, {4}), Error);
  const FacetSelection s(sq, {2, 0, 2});
  CHECK(s.selected() == std::vector<std::size_t>{0, 2});
  CHECK(s.complement() == std::vector<std::size_t>{1, 3});
}
