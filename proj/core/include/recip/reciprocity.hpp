#pragma once

// The reciprocity identity F_{C\D'}(1/x) = (-1)^d F_{C\D}(x) and the colon
// ideal identity I_{D'} = (omega : I_D), checked on monomial supports.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "recip/enumerator.hpp"
#include "recip/laurent.hpp"
#include "recip/topology.hpp"

namespace recip {

struct ReciprocityOptions {
  std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::prime(2)};
  std::optional<IntVector> grading;  // default_grading when unset
};

/// Both sides written over one denominator with equal numerators.
struct IdentityCertificate {
  std::vector<IntVector> denominator;
  LaurentPolynomial numerator;
};

/// Smallest degree at which the graded expansions of the two sides differ.
/// When every graded total agrees but the functions do not, the first
/// differing monomial is reported instead and `exponent` is set.
struct Disagreement {
  std::int64_t degree = 0;
  Integer lhs;
  Integer rhs;
  std::optional<Exponent> exponent;
};

struct ReciprocityReport {
  bool holds = false;
  IntVector grading;
  RationalGF delta_gf;        // F_{C \ D}
  RationalGF delta_prime_gf;  // F_{C \ D'}
  RationalGF lhs;             // F_{C \ D'}(1/x)
  RationalGF rhs;             // (-1)^d F_{C \ D}(x)
  std::vector<std::pair<FieldSpec, CMCertificate>> cm;
  std::optional<IdentityCertificate> certificate;  // present iff holds
  std::optional<Disagreement> first_disagreement;  // present iff !holds
};

ReciprocityReport reciprocity_check(const FacetSelection& sel, const ReciprocityOptions& opts = {});

struct ColonWitness {
  IntVector a;            // lattice point of C outside I_{D'}
  IntVector b;            // point of I_D with a + b on the boundary
  std::size_t facet = 0;  // facet of F \ G containing a and b
};

struct ColonViolation {
  IntVector a;
  IntVector b;
};

struct ColonReport {
  IntVector grading;
  std::int64_t bound = 0;
  std::size_t points = 0;       // lattice points of C scanned
  std::size_t members = 0;      // of them in I_{D'}
  std::size_t pairs_checked = 0;
  std::vector<ColonViolation> violations;  // a in I_{D'}, b in I_D, a + b not interior
  std::vector<ColonWitness> witnesses;     // one per scanned a outside I_{D'}
  bool consistent() const { return violations.empty() && witnesses.size() + members == points; }
};

/// Scans every lattice point a of C with w . a <= bound. Members of I_{D'}
/// are paired with every b of I_D up to the same degree; each non-member gets
/// a witness b in the relative interior of a facet of F \ G through a, found
/// by degree up to 3 * bound or the degree of the largest facet ray sum,
/// whichever is larger (else Error(WitnessSearchExhausted)).
ColonReport verify_colon_identity(const FacetSelection& sel, std::int64_t bound,
                                  const std::optional<IntVector>& grading = std::nullopt);

}  // namespace recip
