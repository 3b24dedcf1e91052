#include "recip/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace recip {

namespace {

using Column = std::vector<std::pair<std::size_t, int>>;  // (row, +-1), rows ascending

std::size_t index_of(const std::vector<Simplex>& level, const Simplex& s) {
  return static_cast<std::size_t>(std::lower_bound(level.begin(), level.end(), s) - level.begin());
}

// Boundary columns of the k-faces, k >= 0.
std::vector<Column> boundary_columns(const SimplicialComplex& sc, int k) {
  const auto& faces = sc.faces();
  const auto& src = faces[static_cast<std::size_t>(k) + 1];
  const auto& dst = faces[static_cast<std::size_t>(k)];
  std::vector<Column> cols;
  cols.reserve(src.size());
  for (const auto& s : src) {
    Column c;
    for (std::size_t j = 0; j < s.size(); ++j) {
      Simplex f = s;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(j));
      c.emplace_back(index_of(dst, f), j % 2 == 0 ? 1 : -1);
    }
    std::sort(c.begin(), c.end());
    cols.push_back(std::move(c));
  }
  return cols;
}

void check_boundary_squared(const SimplicialComplex& sc, int k) {
  // d_{k-1} o d_k on every k-face, k >= 1.
  const auto lower = boundary_columns(sc, k - 1);
  for (const auto& col : boundary_columns(sc, k)) {
    std::map<std::size_t, int> acc;
    for (const auto& [row, sign] : col)
      for (const auto& [r2, s2] : lower[row]) acc[r2] += sign * s2;
    for (const auto& [r, v] : acc)
      if (v != 0) throw std::logic_error("boundary of a boundary is nonzero");
  }
}

struct PrimeOps {
  using T = std::uint64_t;
  std::uint64_t p;
  T from_sign(int s) const { return s > 0 ? 1 : p - 1; }
  bool zero(const T& a) const { return a == 0; }
  T sub(const T& a, const T& b) const { return (a + p - b) % p; }
  T mul(const T& a, const T& b) const { return a * b % p; }
  T inv(T a) const {
    T r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  }
};

struct RationalOps {
  using T = Rational;
  T from_sign(int s) const { return T(s); }
  bool zero(const T& a) const { return a == 0; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const { return 1 / a; }
};

template <class Ops>
std::size_t sparse_rank(const std::vector<Column>& input, std::size_t nrows, const Ops& ops) {
  using T = typename Ops::T;
  using Vec = std::vector<std::pair<std::size_t, T>>;
  std::vector<Vec> reduced;
  std::vector<std::ptrdiff_t> owner(nrows, -1);
  for (const auto& in : input) {
    Vec col;
    for (const auto& [r, s] : in) col.emplace_back(r, ops.from_sign(s));
    while (!col.empty()) {
      const std::size_t low = col.back().first;
      if (owner[low] < 0) {
        owner[low] = static_cast<std::ptrdiff_t>(reduced.size());
        reduced.push_back(std::move(col));
        break;
      }
      const Vec& other = reduced[static_cast<std::size_t>(owner[low])];
      const T factor = ops.mul(col.back().second, ops.inv(other.back().second));
      Vec merged;
      merged.reserve(col.size() + other.size());
      std::size_t i = 0, j = 0;
      while (i < col.size() || j < other.size()) {
        if (j == other.size() || (i < col.size() && col[i].first < other[j].first)) {
          merged.push_back(std::move(col[i++]));
        } else if (i == col.size() || other[j].first < col[i].first) {
          merged.emplace_back(other[j].first, ops.sub(T(0), ops.mul(factor, other[j].second)));
          ++j;
        } else {
          T v = ops.sub(col[i].second, ops.mul(factor, other[j].second));
          if (!ops.zero(v)) merged.emplace_back(col[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      col = std::move(merged);
    }
  }
  return reduced.size();
}

std::size_t rank_of(const std::vector<Column>& cols, std::size_t nrows, const FieldSpec& field) {
  if (field.is_rational()) return sparse_rank(cols, nrows, RationalOps{});
  return sparse_rank(cols, nrows, PrimeOps{field.characteristic()});
}

}  // namespace

std::size_t HomologyProfile::operator[](int i) const {
  if (i == -1) return betti_empty;
  if (i < 0 || static_cast<std::size_t>(i) >= betti.size()) return 0;
  return betti[static_cast<std::size_t>(i)];
}

std::int64_t HomologyProfile::euler_characteristic() const {
  std::int64_t chi = -static_cast<std::int64_t>(betti_empty);
  for (std::size_t i = 0; i < betti.size(); ++i)
    chi += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(betti[i]);
  return chi;
}

IntMatrix boundary_matrix(const SimplicialComplex& sc, int k) {
  const auto& faces = sc.faces();
  if (k < 0 || static_cast<std::size_t>(k) + 1 >= faces.size()) return {};
  const auto cols = boundary_columns(sc, k);
  IntMatrix m(faces[static_cast<std::size_t>(k)].size(), IntVector(cols.size(), 0));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [r, s] : cols[j]) m[r][j] = s;
  return m;
}

HomologyProfile reduced_homology(const SimplicialComplex& sc, const FieldSpec& field) {
  HomologyProfile h;
  h.field = field;
  if (sc.is_void()) return h;
  const auto& faces = sc.faces();
  const int top = sc.dim();
  // ranks[k] = rank of d_k : C_k -> C_{k-1}, k = 0..top (+ zero beyond).
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
  for (int k = 0; k <= top; ++k) {
    if (k >= 1) check_boundary_squared(sc, k);
    ranks[static_cast<std::size_t>(k)] =
        rank_of(boundary_columns(sc, k), faces[static_cast<std::size_t>(k)].size(), field);
  }
  // b~_{-1} = f_{-1} - rank d_0
  h.betti_empty = 1 - (top >= 0 ? ranks[0] : 0);
  for (int i = 0; i <= top; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    h.betti.push_back(faces[ui + 1].size() - ranks[ui] - ranks[ui + 1]);
  }
  return h;
}

}  // namespace recip
