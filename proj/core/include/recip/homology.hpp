#pragma once

#include <cstddef>
#include <vector>

#include "recip/arith.hpp"
#include "recip/complex.hpp"

namespace recip {

/// Reduced Betti numbers of a simplicial complex over one field.
struct HomologyProfile {
  FieldSpec field = FieldSpec::rationals();
  std::vector<std::size_t> betti;  // b~_0 .. b~_dim
  std::size_t betti_empty = 0;     // b~_{-1}; 1 exactly for the complex {∅}

  /// b~_i, zero outside the stored range; i = -1 allowed.
  std::size_t operator[](int i) const;
  /// sum (-1)^i b~_i over i >= -1
  std::int64_t euler_characteristic() const;
  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/// Integer matrix of the simplicial boundary map from k-faces to (k-1)-faces
/// (rows indexed by faces()[k], columns by faces()[k+1]). k = 0 gives the
/// augmentation onto the empty face.
IntMatrix boundary_matrix(const SimplicialComplex& sc, int k);

/// Reduced homology of the augmented chain complex by sparse column reduction
/// over the field. Throws std::logic_error if some composite boundary map is
/// nonzero (never expected).
HomologyProfile reduced_homology(const SimplicialComplex& sc, const FieldSpec& field);

}  // namespace recip
