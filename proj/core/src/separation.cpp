#include "recip/separation.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include "recip/errors.hpp"

namespace recip {

namespace {

using Key = std::pair<RatVector, Rational>;

// Scales to make the first nonzero entry +-1, merging duplicates (strict wins).
// Returns false when a constant constraint is violated.
bool add_normalized(std::map<Key, bool>& out, LinearConstraint c) {
  const Rational* lead = nullptr;
  for (const auto& a : c.coeffs)
    if (a != 0) {
      lead = &a;
      break;
    }
  if (!lead) {
    const bool ok = c.strict ? c.constant > 0 : c.constant >= 0;
    return ok;
  }
  const Rational scale = abs(*lead);
  for (auto& a : c.coeffs) a /= scale;
  c.constant /= scale;
  auto [it, inserted] = out.try_emplace({std::move(c.coeffs), std::move(c.constant)}, c.strict);
  if (!inserted) it->second = it->second || c.strict;
  return true;
}

std::vector<LinearConstraint> to_list(const std::map<Key, bool>& m) {
  std::vector<LinearConstraint> out;
  for (const auto& [k, strict] : m) out.push_back({k.first, k.second, strict});
  return out;
}

}  // namespace

std::optional<RatVector> fourier_motzkin(std::size_t nvars, const std::vector<LinearConstraint>& constraints) {
  // stage[k] holds the system in the variables x_0 .. x_{k-1}.
  std::vector<std::vector<LinearConstraint>> stage(nvars + 1);
  {
    std::map<Key, bool> m;
    for (const auto& c : constraints) {
      if (c.coeffs.size() != nvars) throw Error(ErrorKind::InvalidInput, "constraint has wrong length");
      if (!add_normalized(m, c)) return std::nullopt;
    }
    stage[nvars] = to_list(m);
  }
  for (std::size_t k = nvars; k-- > 0;) {
    std::map<Key, bool> m;
    std::vector<const LinearConstraint*> pos, neg;
    for (const auto& c : stage[k + 1]) {
      if (c.coeffs[k] > 0) {
        pos.push_back(&c);
      } else if (c.coeffs[k] < 0) {
        neg.push_back(&c);
      } else if (!add_normalized(m, c)) {
        return std::nullopt;
      }
    }
    for (const auto* p : pos) {
      for (const auto* q : neg) {
        const Rational sp = -q->coeffs[k], sq = p->coeffs[k];
        LinearConstraint r{RatVector(nvars), sp * p->constant + sq * q->constant, p->strict || q->strict};
        for (std::size_t j = 0; j < nvars; ++j) r.coeffs[j] = sp * p->coeffs[j] + sq * q->coeffs[j];
        r.coeffs[k] = 0;
        if (!add_normalized(m, std::move(r))) return std::nullopt;
      }
    }
    stage[k] = to_list(m);
  }

  RatVector x(nvars, Rational(0));
  for (std::size_t k = 0; k < nvars; ++k) {
    std::optional<Rational> lo, hi;
    for (const auto& c : stage[k + 1]) {
      if (c.coeffs[k] == 0) continue;
      Rational rest = c.constant;
      for (std::size_t j = 0; j < k; ++j) rest += c.coeffs[j] * x[j];
      const Rational b = -rest / c.coeffs[k];
      if (c.coeffs[k] > 0) {
        if (!lo || b > *lo) lo = b;
      } else {
        if (!hi || b < *hi) hi = b;
      }
    }
    if (lo && hi) {
      x[k] = (*lo + *hi) / 2;
    } else if (lo) {
      x[k] = *lo + 1;
    } else if (hi) {
      x[k] = *hi - 1;
    }
  }
  return x;
}

SeparationResult separation_witness(const FacetSelection& sel) {
  const Cone& c = sel.cone();
  std::vector<LinearConstraint> cons;
  for (std::size_t i = 0; i < c.facets().size(); ++i) {
    RatVector a = to_rational(c.facet(i).coeffs);
    if (!sel.is_selected(i))
      for (auto& v : a) v = -v;
    cons.push_back({std::move(a), Rational(0), true});
  }
  SeparationResult r;
  const auto p = fourier_motzkin(c.dim(), cons);
  if (!p) return r;
  IntVector w = primitive_integer(*p);
  for (std::size_t i = 0; i < c.facets().size(); ++i) {
    const auto v = c.facet(i)(w);
    if (sel.is_selected(i) ? v <= 0 : v >= 0) throw std::logic_error("separation witness failed its re-check");
  }
  r.separable = true;
  r.witness = std::move(w);
  return r;
}

ShellingOrder line_shelling(const Cone& c, const RatVector& p) {
  const std::size_t d = c.dim();
  if (p.size() != d) throw Error(ErrorKind::InvalidInput, "point has wrong dimension");
  const IntVector w = default_grading(c);

  RatVector c0(d, Rational(0));
  for (const auto& r : c.rays()) {
    const Rational s(1, dot(w, r));
    for (std::size_t i = 0; i < d; ++i) c0[i] += s * r[i];
  }
  for (auto& v : c0) v /= static_cast<long>(c.rays().size());

  const Rational wp = dot(w, p);
  RatVector u(d);
  for (std::size_t i = 0; i < d; ++i) u[i] = p[i] - wp * c0[i];

  std::vector<std::pair<Rational, std::size_t>> forward, backward;
  for (std::size_t f = 0; f < c.facets().size(); ++f) {
    const auto& fn = c.facet(f);
    if (fn(p) == 0) throw Error(ErrorKind::DegeneratePoint, "point lies on facet hyperplane " + std::to_string(f));
    const Rational lu = fn(u);
    if (lu == 0) throw Error(ErrorKind::DegeneratePoint, "line is parallel to facet " + std::to_string(f));
    const Rational t = -fn(c0) / lu;
    (t > 0 ? forward : backward).emplace_back(t, f);
  }
  std::sort(forward.begin(), forward.end());
  std::sort(backward.begin(), backward.end());
  auto has_tie = [](const std::vector<std::pair<Rational, std::size_t>>& v) {
    return std::adjacent_find(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first == b.first; }) !=
           v.end();
  };
  if (has_tie(forward) || has_tie(backward))
    throw Error(ErrorKind::DegeneratePoint, "two facet hyperplanes are crossed simultaneously");

  ShellingOrder so;
  so.source_point = p;
  for (const auto& [t, f] : forward) so.order.push_back(f);
  for (const auto& [t, f] : backward) so.order.push_back(f);
  return so;
}

ShellingOrder line_shelling_with_retry(const Cone& c, const RatVector& p, std::uint64_t seed, int attempts) {
  Rational margin = 0, norm = 1;
  for (const auto& f : c.facets()) {
    const Rational v = abs(f(p));
    if (v != 0 && (margin == 0 || v < margin)) margin = v;
    Rational n1 = 0;
    for (auto x : f.coeffs) n1 += std::abs(x);
    norm = std::max(norm, n1);
  }
  if (margin == 0) margin = 1;
  std::mt19937_64 rng(seed);
  Rational delta = margin / (2 * (norm + 1));
  RatVector q = p;
  for (int attempt = 0;; ++attempt) {
    try {
      return line_shelling(c, q);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegeneratePoint || attempt + 1 >= attempts) throw;
    }
    q = p;
    for (auto& x : q) x += delta * static_cast<long>(rng() % 3) - delta;
    delta /= 2;
  }
}

bool is_shelling_prefix(const FacetSelection& sel, const ShellingOrder& so) {
  const auto& g = sel.selected();
  if (g.size() > so.order.size()) return false;
  std::vector<std::size_t> head(so.order.begin(), so.order.begin() + static_cast<std::ptrdiff_t>(g.size()));
  std::sort(head.begin(), head.end());
  return head == g;
}

}  // namespace recip
