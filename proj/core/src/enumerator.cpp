#include "recip/enumerator.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "recip/errors.hpp"

namespace recip {

namespace {

// Integer dual basis of independent vectors g_0..g_{k-1} within their span:
// rows[i] . x = den * lambda_i(x) for x in the span, lambda_i(g_j) = [i == j].
struct DualBasis {
  std::vector<IntVector> rows;
  std::int64_t den = 1;

  std::int64_t scaled_coordinate(std::size_t i, const IntVector& x) const { return dot(rows[i], x); }
};

DualBasis dual_basis(const std::vector<IntVector>& gens) {
  const std::size_t k = gens.size();
  const std::size_t d = gens.front().size();
  RatMatrix gram(k, RatVector(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = static_cast<long>(dot(gens[i], gens[j]));

  // D = gram^{-1} G, built one row at a time.
  RatMatrix rows(k, RatVector(d, Rational(0)));
  for (std::size_t i = 0; i < k; ++i) {
    RatVector e(k, Rational(0));
    e[i] = 1;
    auto c = solve_unique(gram, e);
    if (!c) throw Error(ErrorKind::InvalidInput, "generators are not linearly independent");
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t t = 0; t < d; ++t) rows[i][t] += (*c)[j] * static_cast<long>(gens[j][t]);
  }

  Integer l = 1;
  for (const auto& r : rows)
    for (const auto& x : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  DualBasis db;
  db.den = to_int64(l);
  for (const auto& r : rows) {
    IntVector ir;
    for (const auto& x : r) ir.push_back(to_int64(x.get_num() * (l / x.get_den())));
    db.rows.push_back(std::move(ir));
  }
  return db;
}

// Calls f(point) for every integer point of the box [lo, hi].
template <typename F>
void for_each_box_point(const IntVector& lo, const IntVector& hi, F&& f) {
  const std::size_t d = lo.size();
  for (std::size_t i = 0; i < d; ++i)
    if (lo[i] > hi[i]) return;
  IntVector p = lo;
  while (true) {
    f(p);
    std::size_t i = 0;
    while (i < d && p[i] == hi[i]) {
      p[i] = lo[i];
      ++i;
    }
    if (i == d) return;
    ++p[i];
  }
}

std::int64_t floor_div(const Rational& q) {
  Integer z;
  mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return to_int64(z);
}

std::int64_t ceil_div(const Rational& q) {
  Integer z;
  mpz_cdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return to_int64(z);
}

// Sign of lambda(y) for the symbolic reference point
// y = sum(rays) + eps*rays[0] + eps^2*rays[1] + ... (eps -> 0+).
int perturbed_sign(const IntVector& functional, const std::vector<IntVector>& rays) {
  IntVector total(rays.front().size(), 0);
  for (const auto& r : rays)
    for (std::size_t i = 0; i < r.size(); ++i) total[i] += r[i];
  if (auto s = dot(functional, total); s != 0) return s > 0 ? 1 : -1;
  for (const auto& r : rays)
    if (auto s = dot(functional, r); s != 0) return s > 0 ? 1 : -1;
  return 0;
}

}  // namespace

FacetSelection::FacetSelection(Cone cone, std::vector<std::size_t> selected)
    : cone_(std::move(cone)), selected_(std::move(selected)) {
  std::sort(selected_.begin(), selected_.end());
  selected_.erase(std::unique(selected_.begin(), selected_.end()), selected_.end());
  const std::size_t nf = cone_.facets().size();
  if (selected_.empty()) throw Error(ErrorKind::InvalidInput, "facet selection is empty");
  if (selected_.back() >= nf)
    throw Error(ErrorKind::InvalidInput, "facet index " + std::to_string(selected_.back()) + " out of range");
  if (selected_.size() == nf) throw Error(ErrorKind::InvalidInput, "facet selection must be a proper subset");
}

std::vector<std::size_t> FacetSelection::complement() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cone_.facets().size(); ++i)
    if (!is_selected(i)) out.push_back(i);
  return out;
}

bool FacetSelection::is_selected(std::size_t facet) const {
  return std::binary_search(selected_.begin(), selected_.end(), facet);
}

std::vector<std::size_t> DomainSpec::strict_facets() const {
  return side == Side::remove_delta ? selection.selected() : selection.complement();
}

bool DomainSpec::contains(const IntVector& a) const {
  const Cone& c = selection.cone();
  if (!c.contains(a)) return false;
  for (auto f : strict_facets())
    if (c.facet(f)(a) <= 0) return false;
  return true;
}

IntVector default_grading(const Cone& c) {
  IntVector w(c.dim(), 0);
  for (const auto& f : c.facets())
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += f.coeffs[i];
  return w;
}

void check_grading(const Cone& c, const IntVector& w) {
  if (w.size() != c.dim()) throw Error(ErrorKind::BadGrading, "grading has wrong length");
  for (const auto& r : c.rays())
    if (dot(w, r) <= 0) throw Error(ErrorKind::BadGrading, "grading is not positive on every ray");
}

TruncatedSeries cone_lattice_points(const Cone& c, const IntVector& w, std::int64_t bound) {
  check_grading(c, w);
  TruncatedSeries s{w, bound, {}};
  if (bound < 0) return s;

  // C intersected with {w.a <= bound} is the convex hull of 0 and the points
  // bound * r / (w.r); enumerate its bounding box.
  const std::size_t d = c.dim();
  IntVector lo(d, 0), hi(d, 0);
  for (const auto& r : c.rays()) {
    const std::int64_t wr = dot(w, r);
    for (std::size_t i = 0; i < d; ++i) {
      const Rational t(static_cast<long>(bound * r[i]), static_cast<long>(wr));
      lo[i] = std::min(lo[i], floor_div(t));
      hi[i] = std::max(hi[i], ceil_div(t));
    }
  }
  for_each_box_point(lo, hi, [&](const IntVector& a) {
    if (dot(w, a) <= bound && c.contains(a)) s.coeffs.emplace(a, 1);
  });
  return s;
}

TruncatedSeries lattice_points(const DomainSpec& spec, const IntVector& w, std::int64_t bound) {
  TruncatedSeries s = cone_lattice_points(spec.selection.cone(), w, bound);
  std::erase_if(s.coeffs, [&](const auto& term) { return !spec.contains(term.first); });
  return s;
}

std::vector<SimplicialPiece> triangulate_rays(const std::vector<IntVector>& rays) {
  if (rays.empty()) return {};
  RatMatrix rows;
  for (const auto& r : rays) rows.push_back(to_rational(r));
  const std::size_t k = rank(rows);

  // Initial simplex: greedy independent prefix.
  std::vector<std::size_t> first;
  RatMatrix acc;
  std::vector<bool> used(rays.size(), false);
  for (std::size_t i = 0; i < rays.size() && first.size() < k; ++i) {
    acc.push_back(rows[i]);
    if (rank(acc) == first.size() + 1) {
      first.push_back(i);
      used[i] = true;
    } else {
      acc.pop_back();
    }
  }

  using Simplex = std::vector<std::size_t>;
  std::vector<Simplex> simplices{first};
  std::vector<DualBasis> duals;
  auto gens_of = [&](const Simplex& s) {
    std::vector<IntVector> g;
    for (auto i : s) g.push_back(rays[i]);
    return g;
  };
  duals.push_back(dual_basis(gens_of(first)));

  for (std::size_t r = 0; r < rays.size(); ++r) {
    if (used[r]) continue;
    // Boundary facets: (k-1)-subsets lying in exactly one simplex.
    std::map<Simplex, std::vector<std::pair<std::size_t, std::size_t>>> owners;  // facet -> (simplex, apex slot)
    for (std::size_t s = 0; s < simplices.size(); ++s) {
      for (std::size_t drop = 0; drop < k; ++drop) {
        Simplex f;
        for (std::size_t j = 0; j < k; ++j)
          if (j != drop) f.push_back(simplices[s][j]);
        owners[f].emplace_back(s, drop);
      }
    }
    std::vector<Simplex> added;
    for (const auto& [f, own] : owners) {
      if (own.size() != 1) continue;
      const auto [s, drop] = own.front();
      if (duals[s].scaled_coordinate(drop, rays[r]) < 0) {
        Simplex t = f;
        t.insert(std::lower_bound(t.begin(), t.end(), r), r);
        added.push_back(std::move(t));
      }
    }
    for (auto& t : added) {
      duals.push_back(dual_basis(gens_of(t)));
      simplices.push_back(std::move(t));
    }
    used[r] = true;
  }

  std::vector<SimplicialPiece> pieces;
  for (std::size_t s = 0; s < simplices.size(); ++s) {
    SimplicialPiece p;
    p.generators = gens_of(simplices[s]);
    for (std::size_t i = 0; i < k; ++i) p.open.push_back(perturbed_sign(duals[s].rows[i], rays) < 0);
    pieces.push_back(std::move(p));
  }
  return pieces;
}

std::vector<SimplicialPiece> triangulate(const Cone& c) { return triangulate_rays(c.rays()); }

RationalGF simplicial_gf(const std::vector<IntVector>& generators, const std::vector<bool>& open) {
  if (generators.empty()) throw Error(ErrorKind::InvalidInput, "simplicial cone needs generators");
  const std::size_t k = generators.size();
  const std::size_t d = generators.front().size();
  if (open.size() != k) throw Error(ErrorKind::InvalidInput, "one open flag per generator required");
  const DualBasis db = dual_basis(generators);

  IntVector lo(d, 0), hi(d, 0);
  for (const auto& g : generators)
    for (std::size_t i = 0; i < d; ++i) (g[i] < 0 ? lo[i] : hi[i]) += g[i];

  RationalGF gf{LaurentPolynomial(d), generators};
  for_each_box_point(lo, hi, [&](const IntVector& a) {
    IntVector lam(k);
    for (std::size_t i = 0; i < k; ++i) {
      lam[i] = db.scaled_coordinate(i, a);
      // lambda_i in [0,1) for closed facets, (0,1] for open ones.
      if (open[i] ? (lam[i] <= 0 || lam[i] > db.den) : (lam[i] < 0 || lam[i] >= db.den)) return;
    }
    if (k < d) {
      for (std::size_t t = 0; t < d; ++t) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < k; ++i) s += lam[i] * generators[i][t];
        if (s != a[t] * db.den) return;  // not in the span
      }
    }
    gf.numerator.add_term(a, 1);
  });
  return gf.canonicalize();
}

RationalGF face_gf(const Cone& c, const std::vector<std::size_t>& face_rays) {
  const std::size_t d = c.dim();
  if (face_rays.empty()) return RationalGF{LaurentPolynomial::constant(d, 1), {}};
  std::vector<IntVector> rays;
  for (auto i : face_rays) rays.push_back(c.rays()[i]);
  std::vector<std::pair<Integer, RationalGF>> parts;
  for (const auto& p : triangulate_rays(rays)) parts.emplace_back(1, simplicial_gf(p.generators, p.open));
  return linear_combination(d, parts);
}

RationalGF domain_gf(const DomainSpec& spec) {
  const Cone& c = spec.selection.cone();
  const auto strict = spec.strict_facets();

  // Lattice points strictly inside every facet in S:
  //   sum over T subset of S of (-1)^|T| * [points of the face cut out by T].
  std::map<std::vector<std::size_t>, Integer> weight;
  const std::size_t subsets = std::size_t{1} << strict.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::vector<std::size_t> t;
    for (std::size_t i = 0; i < strict.size(); ++i)
      if (mask & (std::size_t{1} << i)) t.push_back(strict[i]);
    weight[rays_on_facets(c, t)] += (std::popcount(mask) % 2 == 0) ? 1 : -1;
  }

  std::vector<std::pair<Integer, RationalGF>> parts;
  for (const auto& [rays, w] : weight)
    if (w != 0) parts.emplace_back(w, face_gf(c, rays));
  return linear_combination(c.dim(), parts);
}

}  // namespace recip
