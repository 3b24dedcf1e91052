#pragma once

// Exact scalars, integer/rational vectors and the small amount of exact
// linear algebra every other module builds on. Nothing here touches floating
// point.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace recip {

using Integer = mpz_class;
using Rational = mpq_class;  // always kept canonical (reduced, positive denominator)

using IntVector = std::vector<std::int64_t>;
using RatVector = std::vector<Rational>;
using IntMatrix = std::vector<IntVector>;  // row major
using RatMatrix = std::vector<RatVector>;

/// The coefficient field for ranks and homology: the rationals or a prime field.
class FieldSpec {
 public:
  enum class Kind { rationals, prime };

  static FieldSpec rationals() { return FieldSpec(Kind::rationals, 0); }
  /// Throws Error(InvalidInput) unless p is prime.
  static FieldSpec prime(std::uint32_t p);
  /// Accepts "Q", "F2", "F3", ... (also "Fp" style with any prime).
  static FieldSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return kind_ == Kind::rationals; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

// Rational formatting: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

std::int64_t to_int64(const Integer& z);

std::int64_t dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);
Rational dot(const IntVector& a, const RatVector& b);

RatVector to_rational(const IntVector& v);

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVector primitive(const IntVector& v);
/// Positive rational multiple of `v` that is a primitive integer vector.
IntVector primitive_integer(const RatVector& v);

bool is_zero(const IntVector& v);

/// Rank over Q.
std::size_t rank(const RatMatrix& rows);
/// Basis of {x : rows * x = 0}; `cols` is needed when `rows` is empty.
RatMatrix nullspace(const RatMatrix& rows, std::size_t cols);
/// Unique solution of A x = b, or nullopt when singular or inconsistent.
std::optional<RatVector> solve_unique(const RatMatrix& a, const RatVector& b);

/// Rank of an integer matrix over Q (fraction-free Bareiss elimination) or
/// over F_p (reduction mod p).
std::size_t rank_over_field(const IntMatrix& m, const FieldSpec& field);

}  // namespace recip
