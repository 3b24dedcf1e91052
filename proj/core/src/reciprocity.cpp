#include "recip/reciprocity.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "recip/errors.hpp"

namespace recip {

namespace {

IdentityCertificate common_form(const RationalGF& a, const RationalGF& b) {
  std::map<IntVector, int> ma, mb, common;
  for (const auto& v : a.denominator) ++ma[v];
  for (const auto& v : b.denominator) ++mb[v];
  common = ma;
  for (const auto& [v, k] : mb) common[v] = std::max(common[v], k);
  IdentityCertificate cert;
  std::vector<IntVector> extra;
  for (const auto& [v, k] : common) {
    for (int i = 0; i < k; ++i) cert.denominator.push_back(v);
    const auto it = ma.find(v);
    for (int i = it == ma.end() ? 0 : it->second; i < k; ++i) extra.push_back(v);
  }
  cert.numerator = a.numerator * binomial_product(a.nvars(), extra);
  return cert;
}

Integer coefficient_at(const TruncatedSeries& s, std::int64_t degree) {
  const auto g = s.graded();
  const auto it = g.find(degree);
  return it == g.end() ? Integer(0) : it->second;
}

Disagreement first_disagreement(const RationalGF& lhs, const RationalGF& rhs, const IntVector& w) {
  Disagreement out;
  const auto graded = cross_difference(specialize(lhs, w), specialize(rhs, w));
  if (!graded.is_zero()) {
    // The difference series starts with the lowest term of its numerator.
    out.degree = graded.terms().begin()->first[0];
    out.lhs = coefficient_at(expand(lhs, w, out.degree), out.degree);
    out.rhs = coefficient_at(expand(rhs, w, out.degree), out.degree);
    return out;
  }
  const auto diff = cross_difference(lhs, rhs);
  std::optional<Exponent> best;
  for (const auto& [e, c] : diff.terms()) {
    const std::int64_t deg = dot(w, e);
    if (!best || deg < out.degree) {
      best = e;
      out.degree = deg;
    }
  }
  out.exponent = best;
  out.lhs = expand(lhs, w, out.degree).coeffs[*best];
  out.rhs = expand(rhs, w, out.degree).coeffs[*best];
  return out;
}

}  // namespace

ReciprocityReport reciprocity_check(const FacetSelection& sel, const ReciprocityOptions& opts) {
  const Cone& c = sel.cone();
  ReciprocityReport r;
  r.grading = opts.grading ? *opts.grading : default_grading(c);
  check_grading(c, r.grading);

  r.delta_gf = domain_gf({sel, Side::remove_delta});
  r.delta_prime_gf = domain_gf({sel, Side::remove_delta_prime});
  r.lhs = invert_variables(r.delta_prime_gf);
  r.rhs = r.delta_gf;
  if (c.dim() % 2 == 1) r.rhs.numerator *= Integer(-1);
  r.holds = gf_equal(r.lhs, r.rhs);
  if (r.holds) {
    r.certificate = common_form(r.lhs, r.rhs);
  } else {
    r.first_disagreement = first_disagreement(r.lhs, r.rhs, r.grading);
  }

  const auto complex = boundary_subcomplex(sel);
  for (const auto& f : opts.fields) r.cm.emplace_back(f, is_cohen_macaulay(complex, f));
  return r;
}

ColonReport verify_colon_identity(const FacetSelection& sel, std::int64_t bound,
                                  const std::optional<IntVector>& grading) {
  const Cone& c = sel.cone();
  ColonReport rep;
  rep.grading = grading ? *grading : default_grading(c);
  rep.bound = bound;
  const IntVector& w = rep.grading;
  const DomainSpec member{sel, Side::remove_delta_prime};

  std::vector<IntVector> ideal;
  for (const auto& [b, coeff] : lattice_points({sel, Side::remove_delta}, w, bound).coeffs) ideal.push_back(b);

  auto interior = [&](const IntVector& x) {
    return std::all_of(c.facets().begin(), c.facets().end(), [&](const FacetFunctional& f) { return f(x) > 0; });
  };

  // Lattice points in the relative interior of a facet, by degree then
  // lexicographically, up to degree 3 * bound. The sum of a facet's rays is
  // such a point, so the limit is raised to the largest of those degrees.
  std::int64_t limit = 3 * bound;
  for (const auto& f : c.facets()) {
    std::int64_t deg = 0;
    for (auto r : f.incident_rays) deg += dot(w, c.rays()[r]);
    limit = std::max(limit, deg);
  }
  std::map<std::size_t, std::vector<IntVector>> relint;
  const auto search = cone_lattice_points(c, w, limit);
  auto relint_points = [&](std::size_t facet) -> const std::vector<IntVector>& {
    auto it = relint.find(facet);
    if (it != relint.end()) return it->second;
    std::vector<IntVector> pts;
    for (const auto& [b, coeff] : search.coeffs) {
      bool ok = true;
      for (std::size_t i = 0; i < c.facets().size() && ok; ++i)
        ok = (i == facet) ? c.facet(i)(b) == 0 : c.facet(i)(b) > 0;
      if (ok) pts.push_back(b);
    }
    std::stable_sort(pts.begin(), pts.end(),
                     [&](const IntVector& x, const IntVector& y) { return dot(w, x) < dot(w, y); });
    return relint.emplace(facet, std::move(pts)).first->second;
  };

  for (const auto& [a, coeff] : cone_lattice_points(c, w, bound).coeffs) {
    ++rep.points;
    if (member.contains(a)) {
      ++rep.members;
      for (const auto& b : ideal) {
        ++rep.pairs_checked;
        IntVector sum(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
        if (!interior(sum)) rep.violations.push_back({a, b});
      }
      continue;
    }
    std::optional<ColonWitness> found;
    for (auto f : sel.complement()) {
      if (c.facet(f)(a) != 0) continue;
      const auto& pts = relint_points(f);
      if (!pts.empty()) {
        found = ColonWitness{a, pts.front(), f};
        break;
      }
    }
    if (!found)
      throw Error(ErrorKind::WitnessSearchExhausted,
                  "no relative-interior facet point up to degree " + std::to_string(limit));
    rep.witnesses.push_back(std::move(*found));
  }
  return rep;
}

}  // namespace recip
