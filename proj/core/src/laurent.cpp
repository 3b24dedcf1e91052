#include "recip/laurent.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "recip/errors.hpp"

namespace recip {

namespace {

Exponent add(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Rational power(const Rational& x, std::int64_t e) {
  Rational r;
  if (e >= 0) {
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
  } else {
    mpz_pow_ui(r.get_num_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(-e));
    mpz_pow_ui(r.get_den_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(-e));
  }
  r.canonicalize();
  return r;
}

Rational monomial_value(const Exponent& e, const RatVector& x) {
  Rational r = 1;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) r *= power(x[i], e[i]);
  return r;
}

Rational denominator_value(const std::vector<IntVector>& den, const RatVector& x) {
  Rational r = 1;
  for (const auto& v : den) r *= 1 - monomial_value(v, x);
  return r;
}

std::map<IntVector, int> multiplicities(const std::vector<IntVector>& vs) {
  std::map<IntVector, int> m;
  for (const auto& v : vs) ++m[v];
  return m;
}

// Vectors of `target` left over after removing `part` (both multisets).
std::vector<IntVector> multiset_minus(const std::map<IntVector, int>& target, const std::vector<IntVector>& part) {
  auto rest = target;
  for (const auto& v : part) --rest[v];
  std::vector<IntVector> out;
  for (const auto& [v, k] : rest)
    for (int i = 0; i < k; ++i) out.push_back(v);
  return out;
}

}  // namespace

LaurentPolynomial LaurentPolynomial::monomial(const Exponent& e, const Integer& coeff) {
  LaurentPolynomial p(e.size());
  p.add_term(e, coeff);
  return p;
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t nvars, const Integer& c) {
  return monomial(Exponent(nvars, 0), c);
}

Integer LaurentPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPolynomial::add_term(const Exponent& e, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial r(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(add(ea, eb), ca * cb);
  return r;
}

LaurentPolynomial LaurentPolynomial::inverted() const {
  LaurentPolynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent n(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) n[i] = -e[i];
    r.terms_.emplace(std::move(n), c);
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::shifted(const Exponent& s) const {
  LaurentPolynomial r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(add(e, s), c);
  return r;
}

std::optional<Rational> LaurentPolynomial::evaluate(const RatVector& x) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] < 0 && x[i] == 0) return std::nullopt;
    total += Rational(c) * monomial_value(e, x);
  }
  return total;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant_term = std::all_of(e.begin(), e.end(), [](std::int64_t k) { return k == 0; });
    bool wrote = false;
    if (mag != 1 || constant_term) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << "x" << i;
      if (e[i] != 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

RationalGF& RationalGF::canonicalize() {
  std::sort(denominator.begin(), denominator.end());
  return *this;
}

std::optional<Rational> RationalGF::evaluate(const RatVector& x) const {
  for (const auto& v : denominator)
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] < 0 && x[i] == 0) return std::nullopt;
  const Rational den = denominator_value(denominator, x);
  if (den == 0) return std::nullopt;
  auto num = numerator.evaluate(x);
  if (!num) return std::nullopt;
  return *num / den;
}

std::string RationalGF::to_string() const {
  std::ostringstream os;
  os << "(" << numerator.to_string() << ")";
  if (!denominator.empty()) {
    os << " / ";
    for (std::size_t k = 0; k < denominator.size(); ++k) {
      if (k) os << "*";
      os << "(1 - " << LaurentPolynomial::monomial(denominator[k]).to_string() << ")";
    }
  }
  return os.str();
}

LaurentPolynomial binomial_product(std::size_t nvars, const std::vector<IntVector>& vs) {
  LaurentPolynomial p = LaurentPolynomial::constant(nvars, 1);
  for (const auto& v : vs) {
    LaurentPolynomial f = LaurentPolynomial::constant(nvars, 1);
    f.add_term(v, -1);
    p = p * f;
  }
  return p;
}

RationalGF linear_combination(std::size_t nvars, const std::vector<std::pair<Integer, RationalGF>>& terms) {
  std::map<IntVector, int> common;
  for (const auto& [c, g] : terms) {
    if (c == 0) continue;
    for (const auto& [v, k] : multiplicities(g.denominator)) common[v] = std::max(common[v], k);
  }
  RationalGF out{LaurentPolynomial(nvars), {}};
  for (const auto& [v, k] : common)
    for (int i = 0; i < k; ++i) out.denominator.push_back(v);
  for (const auto& [c, g] : terms) {
    if (c == 0) continue;
    out.numerator += g.numerator * binomial_product(nvars, multiset_minus(common, g.denominator)) * c;
  }
  return out.canonicalize();
}

RationalGF invert_variables(const RationalGF& g) {
  Exponent shift(g.nvars(), 0);
  for (const auto& v : g.denominator)
    for (std::size_t i = 0; i < v.size(); ++i) shift[i] += v[i];
  RationalGF r{g.numerator.inverted().shifted(shift), g.denominator};
  if (g.denominator.size() % 2 == 1) r.numerator *= Integer(-1);
  return r.canonicalize();
}

LaurentPolynomial cross_difference(const RationalGF& a, const RationalGF& b) {
  const std::size_t n = a.nvars();
  auto ma = multiplicities(a.denominator);
  auto mb = multiplicities(b.denominator);
  std::map<IntVector, int> common = ma;
  for (const auto& [v, k] : mb) common[v] = std::max(common[v], k);
  return a.numerator * binomial_product(n, multiset_minus(common, a.denominator)) -
         b.numerator * binomial_product(n, multiset_minus(common, b.denominator));
}

bool gf_equal(const RationalGF& a, const RationalGF& b) {
  if (a.nvars() != b.nvars()) return false;
  RationalGF ca = a, cb = b;
  ca.canonicalize();
  cb.canonicalize();
  if (ca == cb) return true;

  // Fixed seed: identical verdicts and timings on every run.
  std::mt19937_64 rng(0x5eedu);
  const std::size_t n = a.nvars();
  int checked = 0;
  for (int attempt = 0; attempt < 50 && checked < 5; ++attempt) {
    RatVector x(n);
    for (auto& xi : x) {
      const long den = 1 + static_cast<long>(rng() % 97);
      long num = static_cast<long>(rng() % 195) - 97;
      if (num == 0) num = 1;
      xi = Rational(num, den);
      xi.canonicalize();
    }
    const Rational da = denominator_value(ca.denominator, x);
    const Rational db = denominator_value(cb.denominator, x);
    if (da == 0 || db == 0) continue;
    auto na = ca.numerator.evaluate(x);
    auto nb = cb.numerator.evaluate(x);
    if (!na || !nb) continue;
    if (*na * db != *nb * da) return false;
    ++checked;
  }
  return cross_difference(ca, cb).is_zero();
}

RationalGF specialize(const RationalGF& g, const IntVector& grading) {
  RationalGF r{LaurentPolynomial(1), {}};
  for (const auto& [e, c] : g.numerator.terms()) r.numerator.add_term({dot(grading, e)}, c);
  for (const auto& v : g.denominator) r.denominator.push_back({dot(grading, v)});
  return r.canonicalize();
}

std::map<std::int64_t, Integer> TruncatedSeries::graded() const {
  std::map<std::int64_t, Integer> out;
  for (const auto& [e, c] : coeffs) out[dot(grading, e)] += c;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

TruncatedSeries expand(const RationalGF& g, const IntVector& grading, std::int64_t bound) {
  for (const auto& v : g.denominator)
    if (dot(grading, v) <= 0) throw Error(ErrorKind::BadGrading, "denominator vector has nonpositive degree");

  std::map<Exponent, Integer> cur;
  for (const auto& [e, c] : g.numerator.terms())
    if (dot(grading, e) <= bound) cur[e] += c;

  for (const auto& v : g.denominator) {
    const std::int64_t step = dot(grading, v);
    std::map<Exponent, Integer> next;
    for (const auto& [e, c] : cur) {
      Exponent a = e;
      for (std::int64_t deg = dot(grading, e); deg <= bound; deg += step) {
        next[a] += c;
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += v[i];
      }
    }
    cur = std::move(next);
  }

  TruncatedSeries s{grading, bound, {}};
  for (auto& [e, c] : cur)
    if (c != 0) s.coeffs.emplace(e, std::move(c));
  return s;
}

}  // namespace recip
