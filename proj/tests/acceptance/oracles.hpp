#pragma once

// Brute-force reference computations. They share no code with the library
// beyond the scalar types: dense elimination, explicit subset closure, and
// plain nested loops over boxes of lattice points.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace recip::oracle {

using Row = std::vector<long>;
using Face = std::vector<int>;

/// Rank by dense Gaussian elimination, over Q (p == 0) or F_p.
inline std::size_t dense_rank(const std::vector<Row>& m, unsigned p) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  if (p == 0) {
    std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t piv = r;
      while (piv < rows && a[piv][c] == 0) ++piv;
      if (piv == rows) continue;
      std::swap(a[piv], a[r]);
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == r || a[i][c] == 0) continue;
        const mpq_class f = a[i][c] / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      }
      ++r;
    }
    return r;
  }
  std::vector<std::vector<long>> a(rows, std::vector<long>(cols));
  const long P = static_cast<long>(p);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = ((m[i][j] % P) + P) % P;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    long inv = 1;
    for (long t = 1; t < P; ++t)
      if (a[r][c] * t % P == 1) inv = t;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const long f = a[i][c] * inv % P;
      for (std::size_t j = c; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % P + P) % P;
    }
    ++r;
  }
  return r;
}

/// Faces of each size 0..max, as sorted lists of sorted vertex lists.
inline std::vector<std::vector<Face>> all_faces(const std::vector<Face>& facets) {
  std::vector<std::set<Face>> levels;
  for (const auto& f : facets) {
    if (levels.size() < f.size() + 1) levels.resize(f.size() + 1);
    for (unsigned mask = 0; mask < (1u << f.size()); ++mask) {
      Face s;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (mask >> i & 1u) s.push_back(f[i]);
      levels[s.size()].insert(s);
    }
  }
  std::vector<std::vector<Face>> out;
  for (const auto& l : levels) out.emplace_back(l.begin(), l.end());
  return out;
}

/// Boundary matrix from faces of size k+1 to faces of size k (k >= 0).
inline std::vector<Row> dense_boundary(const std::vector<std::vector<Face>>& faces, std::size_t k) {
  const auto& src = faces[k + 1];
  const auto& dst = faces[k];
  std::vector<Row> m(dst.size(), Row(src.size(), 0));
  for (std::size_t j = 0; j < src.size(); ++j)
    for (std::size_t drop = 0; drop < src[j].size(); ++drop) {
      Face f = src[j];
      f.erase(f.begin() + static_cast<long>(drop));
      for (std::size_t i = 0; i < dst.size(); ++i)
        if (dst[i] == f) m[i][j] = drop % 2 == 0 ? 1 : -1;
    }
  return m;
}

/// Reduced Betti numbers b~_0 .. b~_dim over Q (p == 0) or F_p.
inline std::vector<long> reduced_betti(const std::vector<Face>& facets, unsigned p) {
  const auto faces = all_faces(facets);
  const std::size_t top = faces.size() - 1;  // largest face size
  std::vector<std::size_t> ranks(faces.size() + 1, 0);  // ranks[k]: size k+1 -> size k
  for (std::size_t k = 0; k < top; ++k) ranks[k] = dense_rank(dense_boundary(faces, k), p);
  std::vector<long> betti;
  for (std::size_t size = 1; size <= top; ++size)
    betti.push_back(static_cast<long>(faces[size].size() - ranks[size - 1] - ranks[size]));
  return betti;
}

/// Lattice points a in [-radius, radius]^d with w.a <= bound, ineq(a) >= 0
/// for every inequality, and > 0 for those flagged strict.
inline std::vector<std::vector<long>> lattice_loop(const std::vector<std::vector<long>>& ineqs,
                                                   const std::vector<bool>& strict, const std::vector<long>& w,
                                                   long bound, long radius) {
  const std::size_t d = w.size();
  std::vector<std::vector<long>> out;
  std::vector<long> a(d, -radius);
  while (true) {
    long deg = 0;
    for (std::size_t i = 0; i < d; ++i) deg += w[i] * a[i];
    bool ok = deg <= bound;
    for (std::size_t f = 0; f < ineqs.size() && ok; ++f) {
      long v = 0;
      for (std::size_t i = 0; i < d; ++i) v += ineqs[f][i] * a[i];
      ok = strict[f] ? v > 0 : v >= 0;
    }
    if (ok) out.push_back(a);
    std::size_t i = 0;
    while (i < d && a[i] == radius) a[i++] = -radius;
    if (i == d) break;
    ++a[i];
  }
  return out;
}

inline std::map<long, long> graded_counts(const std::vector<std::vector<long>>& pts, const std::vector<long>& w) {
  std::map<long, long> out;
  for (const auto& a : pts) {
    long deg = 0;
    for (std::size_t i = 0; i < w.size(); ++i) deg += w[i] * a[i];
    ++out[deg];
  }
  return out;
}

}  // namespace recip::oracle
