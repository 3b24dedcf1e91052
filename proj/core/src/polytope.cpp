#include "recip/polytope.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "recip/cone.hpp"
#include "recip/errors.hpp"

namespace recip {

namespace {

IntVector homogenize(const RatVector& p) {
  RatVector h = p;
  h.emplace_back(1);
  return primitive_integer(h);
}

AffineFunctional split_normal(const IntVector& normal) {
  AffineFunctional f;
  const std::size_t n = normal.size() - 1;
  for (std::size_t i = 0; i < n; ++i) f.coeffs.emplace_back(static_cast<long>(normal[i]));
  f.constant = static_cast<long>(normal[n]);
  return f;
}

template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Rational abs_det(RatMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) std::swap(m[p], m[c]);
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return abs(det);
}

}  // namespace

int affine_dim(const std::vector<RatVector>& points) {
  if (points.empty()) return -1;
  RatMatrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RatVector d(points[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  return static_cast<int>(rank(diffs));
}

Polytope Polytope::from_points(const std::vector<RatVector>& points) {
  if (points.empty()) throw Error(ErrorKind::InvalidInput, "polytope needs at least one point");
  const std::size_t n = points.front().size();
  std::vector<RatVector> pts;
  for (const auto& p : points) {
    if (p.size() != n) throw Error(ErrorKind::InvalidInput, "points have inconsistent dimensions");
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }

  std::vector<IntVector> lifted;
  for (const auto& p : pts) lifted.push_back(homogenize(p));
  const SpanHull hull = span_hull(lifted);
  const std::size_t k = hull.span_dim;  // dim + 1

  // Extreme points lie on k-1 independent facets.
  std::vector<RatVector> verts;
  std::vector<IntVector> lifted_verts;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    RatMatrix tight;
    for (const auto& f : hull.facets)
      if (!f.incident.empty() && dot(f.normal, lifted[i]) == 0) tight.push_back(to_rational(f.normal));
    if (k == 1 || rank(tight) == k - 1) {
      verts.push_back(pts[i]);
      lifted_verts.push_back(lifted[i]);
    }
  }

  Polytope poly;
  poly.ambient_ = n;
  poly.dim_ = k - 1;
  poly.vertices_ = std::move(verts);
  std::vector<SpanFacet> facets;
  for (const auto& f : hull.facets)
    if (!f.incident.empty()) facets.push_back(f);
  std::sort(facets.begin(), facets.end(), [](const SpanFacet& a, const SpanFacet& b) { return a.normal < b.normal; });
  for (const auto& f : facets) {
    PolytopeFacet pf{split_normal(f.normal), {}};
    for (std::size_t i = 0; i < lifted_verts.size(); ++i)
      if (dot(f.normal, lifted_verts[i]) == 0) pf.incident.push_back(i);
    poly.facets_.push_back(std::move(pf));
  }
  for (const auto& o : hull.orthogonal) poly.equations_.push_back(split_normal(o));
  return poly;
}

Polytope Polytope::from_constraints(std::size_t ambient_dim, const std::vector<AffineFunctional>& inequalities,
                                    const std::vector<AffineFunctional>& equations) {
  RatMatrix eq_rows;
  RatVector eq_rhs;
  for (const auto& e : equations) {
    eq_rows.push_back(e.coeffs);
    eq_rhs.push_back(-e.constant);
  }
  const std::size_t eq_rank = rank(eq_rows);
  const std::size_t need = ambient_dim - std::min(ambient_dim, eq_rank);

  std::set<RatVector> found;
  for_each_subset(inequalities.size(), need, [&](const std::vector<std::size_t>& subset) {
    RatMatrix a = eq_rows;
    RatVector b = eq_rhs;
    for (auto i : subset) {
      a.push_back(inequalities[i].coeffs);
      b.push_back(-inequalities[i].constant);
    }
    if (a.empty()) {
      if (ambient_dim == 0) found.insert(RatVector{});
      return;
    }
    auto x = solve_unique(a, b);
    if (!x) return;
    for (const auto& g : inequalities)
      if (g(*x) < 0) return;
    for (const auto& e : equations)
      if (e(*x) != 0) return;
    found.insert(std::move(*x));
  });
  if (found.empty()) throw Error(ErrorKind::InvalidInput, "constraint system has no vertices");
  return from_points(std::vector<RatVector>(found.begin(), found.end()));
}

bool Polytope::contains(const RatVector& x) const {
  for (const auto& e : equations_)
    if (e(x) != 0) return false;
  for (const auto& f : facets_)
    if (f.inequality(x) < 0) return false;
  if (dim_ == 0) return x == vertices_.front();
  return true;
}

RatVector Polytope::centroid() const {
  RatVector c(ambient_, Rational(0));
  for (const auto& v : vertices_)
    for (std::size_t i = 0; i < ambient_; ++i) c[i] += v[i];
  for (auto& x : c) x /= static_cast<long>(vertices_.size());
  return c;
}

std::vector<std::vector<std::size_t>> Polytope::faces() const {
  std::vector<std::size_t> all(vertices_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::set<std::vector<std::size_t>> seen{all};
  std::deque<std::vector<std::size_t>> queue{all};
  while (!queue.empty()) {
    const auto face = queue.front();
    queue.pop_front();
    for (const auto& f : facets_) {
      std::vector<std::size_t> next;
      std::set_intersection(face.begin(), face.end(), f.incident.begin(), f.incident.end(), std::back_inserter(next));
      if (next.empty()) continue;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<std::vector<std::size_t>> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return out;
}

std::vector<std::size_t> Polytope::facets_containing(const std::vector<std::size_t>& vertex_subset) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < facets_.size(); ++k) {
    const auto& inc = facets_[k].incident;
    if (std::includes(inc.begin(), inc.end(), vertex_subset.begin(), vertex_subset.end())) out.push_back(k);
  }
  return out;
}

std::vector<std::size_t> Polytope::minimal_face(const std::vector<std::size_t>& vertex_subset) const {
  std::vector<std::size_t> sorted = vertex_subset;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> face(vertices_.size());
  for (std::size_t i = 0; i < face.size(); ++i) face[i] = i;
  for (auto k : facets_containing(sorted)) {
    std::vector<std::size_t> next;
    const auto& inc = facets_[k].incident;
    std::set_intersection(face.begin(), face.end(), inc.begin(), inc.end(), std::back_inserter(next));
    face = std::move(next);
  }
  return face;
}

std::vector<std::vector<std::size_t>> Polytope::triangulate() const {
  const auto all_faces = faces();
  std::map<std::vector<std::size_t>, int> dims;
  for (const auto& f : all_faces) {
    std::vector<RatVector> pts;
    for (auto i : f) pts.push_back(vertices_[i]);
    dims[f] = affine_dim(pts);
  }

  std::map<std::vector<std::size_t>, std::vector<std::vector<std::size_t>>> memo;
  std::function<const std::vector<std::vector<std::size_t>>&(const std::vector<std::size_t>&)> pull =
      [&](const std::vector<std::size_t>& face) -> const std::vector<std::vector<std::size_t>>& {
    if (auto it = memo.find(face); it != memo.end()) return it->second;
    std::vector<std::vector<std::size_t>> simplices;
    const int d = dims.at(face);
    if (d == 0) {
      simplices.push_back(face);
    } else {
      const std::size_t apex = face.front();
      for (const auto& sub : all_faces) {
        if (dims.at(sub) != d - 1) continue;
        if (!std::includes(face.begin(), face.end(), sub.begin(), sub.end())) continue;
        if (std::binary_search(sub.begin(), sub.end(), apex)) continue;
        for (const auto& s : pull(sub)) {
          auto t = s;
          t.insert(std::lower_bound(t.begin(), t.end(), apex), apex);
          simplices.push_back(std::move(t));
        }
      }
    }
    return memo.emplace(face, std::move(simplices)).first->second;
  };
  return pull(all_faces.front());
}

Rational Polytope::volume() const {
  if (dim_ != ambient_) throw Error(ErrorKind::InvalidInput, "volume needs a full-dimensional polytope");
  Rational total = 0;
  Integer fact = 1;
  for (std::size_t i = 2; i <= dim_; ++i) fact *= static_cast<unsigned long>(i);
  for (const auto& s : triangulate()) {
    RatMatrix m;
    for (std::size_t i = 1; i < s.size(); ++i) {
      RatVector row(ambient_);
      for (std::size_t j = 0; j < ambient_; ++j) row[j] = vertices_[s[i]][j] - vertices_[s[0]][j];
      m.push_back(std::move(row));
    }
    total += abs_det(std::move(m));
  }
  return total / Rational(fact);
}

}  // namespace recip
