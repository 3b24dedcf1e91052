#include "recip/arith.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "recip/errors.hpp"

namespace recip {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    const Rational inv = 1 / m[row][col];
    for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank_rational(IntMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = static_cast<long>(m[i][j]);

  // Bareiss: every division below is exact.
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t sel = r;
    while (sel < rows && a[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a[i][j] = a[r][col] * a[i][j] - a[i][col] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[r][col];
    ++r;
  }
  return r;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  const auto sp = static_cast<std::int64_t>(p);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      a[i][j] = static_cast<std::uint64_t>(((m[i][j] % sp) + sp) % sp);

  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t sel = r;
    while (sel < rows && a[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[r]);
    const std::uint64_t inv = pow_mod(a[r][col], p - 2, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      const std::uint64_t f = a[i][col] * inv % p;
      for (std::size_t j = col; j < cols; ++j)
        a[i][j] = (a[i][j] + (p - f) * a[r][j]) % p;
    }
    ++r;
  }
  return r;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidInput, "field characteristic " + std::to_string(p) + " is not prime");
  return FieldSpec(Kind::prime, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  if (text.size() >= 2 && text.front() == 'F') {
    std::uint32_t p = 0;
    const auto* first = text.data() + 1;
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec == std::errc() && ptr == last) return prime(p);
  }
  throw Error(ErrorKind::InvalidInput, "unknown field '" + std::string(text) + "' (expected Q or Fp)");
}

std::string FieldSpec::name() const {
  return is_rational() ? std::string("Q") : "F" + std::to_string(p_);
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  Rational q;
  // mpq_set_str accepts "p/q" and "p"; it does not reject a zero denominator.
  if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0 || q.get_den() == 0)
    throw Error(ErrorKind::InvalidInput, "malformed rational '" + s + "'");
  q.canonicalize();
  return q;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw Error(ErrorKind::Overflow, "integer " + z.get_str() + " exceeds 64 bits");
  return z.get_si();
}

std::int64_t dot(const IntVector& a, const IntVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
  return s;
}

RatVector to_rational(const IntVector& v) {
  RatVector r;
  r.reserve(v.size());
  for (auto x : v) r.emplace_back(static_cast<long>(x));
  return r;
}

IntVector primitive(const IntVector& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  if (g <= 1) return v;
  IntVector r(v);
  for (auto& x : r) x /= g;
  return r;
}

IntVector primitive_integer(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> z;
  z.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    Integer n = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    z.push_back(std::move(n));
  }
  IntVector r;
  r.reserve(v.size());
  for (auto& n : z) r.push_back(to_int64(g == 0 ? n : Integer(n / g)));
  return r;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

std::size_t rank(const RatMatrix& rows) {
  if (rows.empty()) return 0;
  RatMatrix m = rows;
  return rref(m, m.front().size()).size();
}

RatMatrix nullspace(const RatMatrix& rows, std::size_t cols) {
  RatMatrix m = rows;
  const auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  RatMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve_unique(const RatMatrix& a, const RatVector& b) {
  if (a.empty()) return std::nullopt;
  const std::size_t n = a.front().size();
  RatMatrix m;
  m.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    RatVector row = a[i];
    row.push_back(b[i]);
    m.push_back(std::move(row));
  }
  const auto pivots = rref(m, n + 1);
  if (pivots.size() != n || pivots.back() == n) return std::nullopt;  // singular or inconsistent
  RatVector x(n);
  for (std::size_t r = 0; r < n; ++r) x[pivots[r]] = m[r][n];
  return x;
}

std::size_t rank_over_field(const IntMatrix& m, const FieldSpec& field) {
  if (field.is_rational()) return rank_rational(m);
  return rank_mod_p(m, field.characteristic());
}

}  // namespace recip
