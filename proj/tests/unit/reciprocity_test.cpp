#include <doctest.h>

#include "corpus.hpp"
#include "recip/reciprocity.hpp"
#include "recip/separation.hpp"

using namespace recip;

TEST_CASE("quadrant with one facet removed") {
  const Cone q = corpus::quadrant();
  for (std::size_t f = 0; f < 2; ++f) {
    const auto r = reciprocity_check(FacetSelection(q, {f}));
    CHECK(r.holds);
    REQUIRE(r.certificate);
    const RationalGF common{r.certificate->numerator, r.certificate->denominator};
    CHECK(gf_equal(common, r.lhs));
    CHECK(gf_equal(common, r.rhs));
    CHECK_FALSE(r.first_disagreement);
  }
}

TEST_CASE("square cone, adjacent and opposite pairs") {
  const Cone sq = corpus::square_cone();
  const auto adj = reciprocity_check(FacetSelection(sq, {0, 2}));
  CHECK(adj.holds);
  CHECK(adj.grading == IntVector{0, 0, 2});
  REQUIRE(adj.cm.size() == 2);
  for (const auto& [field, cert] : adj.cm) CHECK(cert.is_cm);

  const auto opp = reciprocity_check(FacetSelection(sq, {0, 1}));
  CHECK_FALSE(opp.holds);
  REQUIRE(opp.first_disagreement);
  CHECK(opp.first_disagreement->degree == 0);
  CHECK(opp.first_disagreement->lhs == 1);
  CHECK(opp.first_disagreement->rhs == 0);
  CHECK_FALSE(opp.certificate);
}

TEST_CASE("custom grading and fields") {
  ReciprocityOptions opts;
  opts.grading = IntVector{0, 0, 1};
  opts.fields = {FieldSpec::prime(3)};
  const auto r = reciprocity_check(FacetSelection(corpus::square_cone(), {0, 1}), opts);
  CHECK(r.grading == IntVector{0, 0, 1});
  REQUIRE(r.cm.size() == 1);
  CHECK(r.cm.front().first == FieldSpec::prime(3));
  REQUIRE(r.first_disagreement);
  CHECK(r.first_disagreement->degree == 0);
}

TEST_CASE("separable selections satisfy reciprocity") {
  for (const auto& [name, c] : corpus::cones()) {
    const std::size_t nf = c.facets().size();
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << nf); ++mask) {
      std::vector<std::size_t> sel;
      for (std::size_t f = 0; f < nf; ++f)
        if (mask >> f & 1u) sel.push_back(f);
      const FacetSelection s(c, sel);
      if (!separation_witness(s).separable) continue;
      INFO(name << " mask " << mask);
      CHECK(reciprocity_check(s).holds);
    }
  }
}

TEST_CASE("colon identity scan") {
  for (const auto& [name, c] : corpus::cones()) {
    if (c.facets().size() > 5) continue;
    const auto rep = verify_colon_identity(FacetSelection(c, {0}), 4);
    INFO(name);
    CHECK(rep.consistent());
    CHECK(rep.points > 0);
    for (const auto& w : rep.witnesses) {
      CHECK(c.facet(w.facet)(w.a) == 0);
      CHECK(c.facet(w.facet)(w.b) == 0);
    }
  }
  const auto opp = verify_colon_identity(FacetSelection(corpus::square_cone(), {0, 1}), 4);
  CHECK(opp.violations.empty());
  CHECK(opp.witnesses.size() + opp.members == opp.points);
}
