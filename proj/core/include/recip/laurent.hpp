#pragma once

// Laurent polynomials, rational generating functions with binomial
// denominators prod (1 - x^v), and truncated series expansions.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "recip/arith.hpp"

namespace recip {

using Exponent = IntVector;

class LaurentPolynomial {
 public:
  using Terms = std::map<Exponent, Integer>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::size_t nvars) : nvars_(nvars) {}

  static LaurentPolynomial monomial(const Exponent& e, const Integer& coeff = 1);
  static LaurentPolynomial constant(std::size_t nvars, const Integer& c);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Exponent& e) const;

  void add_term(const Exponent& e, const Integer& coeff);

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const Integer& c);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Integer& c) { return a *= c; }
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// p(x) |-> p(x^{-1})
  LaurentPolynomial inverted() const;
  /// p(x) |-> x^e p(x)
  LaurentPolynomial shifted(const Exponent& e) const;

  /// nullopt when a variable raised to a negative power is zero.
  std::optional<Rational> evaluate(const RatVector& x) const;

  /// Terms in exponent order, e.g. "x0*x1^2 - 3*x2^-1".
  std::string to_string() const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

/// numerator / prod_{v in denominator} (1 - x^v)
struct RationalGF {
  LaurentPolynomial numerator;
  std::vector<IntVector> denominator;  // multiset; sorted once canonical

  std::size_t nvars() const { return numerator.nvars(); }

  /// Sorts the denominator multiset lexicographically.
  RationalGF& canonicalize();
  /// nullopt at a pole.
  std::optional<Rational> evaluate(const RatVector& x) const;
  std::string to_string() const;

  friend bool operator==(const RationalGF&, const RationalGF&) = default;  // structural
};

/// prod_{v} (1 - x^v)
LaurentPolynomial binomial_product(std::size_t nvars, const std::vector<IntVector>& vs);

/// Sum of c_i * g_i over the least common denominator (max multiplicity of
/// each denominator vector).
RationalGF linear_combination(std::size_t nvars, const std::vector<std::pair<Integer, RationalGF>>& terms);

/// x |-> x^{-1}, rewritten over the same denominator using
/// 1 - x^{-v} = -x^{-v} (1 - x^v).
RationalGF invert_variables(const RationalGF& g);

/// Equality in the field of rational functions: evaluation at five seeded
/// rational points as a quick filter, then an exact cross-multiplied identity.
bool gf_equal(const RationalGF& a, const RationalGF& b);

/// The Laurent polynomial N with a = b iff N = 0, namely
/// a.num * prod(D \ Da) - b.num * prod(D \ Db) over the common denominator D.
LaurentPolynomial cross_difference(const RationalGF& a, const RationalGF& b);

/// Univariate image under x^a |-> t^{w.a}.
RationalGF specialize(const RationalGF& g, const IntVector& grading);

/// Finite piece of a multigraded series: all exponents a with w.a <= bound.
struct TruncatedSeries {
  IntVector grading;
  std::int64_t bound = 0;
  std::map<Exponent, Integer> coeffs;  // zero coefficients are not stored

  /// Sum of coefficients per degree w.a.
  std::map<std::int64_t, Integer> graded() const;
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
};

/// Series expansion of g in the direction of its denominator vectors (each
/// must have positive degree, else Error(BadGrading)), truncated at degree
/// `bound`.
TruncatedSeries expand(const RationalGF& g, const IntVector& grading, std::int64_t bound);

}  // namespace recip
