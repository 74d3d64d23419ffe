#pragma once

#include <cstdint>
#include <vector>

#include "stabeq/algebra/constructions.hpp"
#include "stabeq/module/decompose.hpp"

namespace stabeq {

struct EndomorphismAlgebra {
  AlgebraPtr algebra;
  /// Basis of End(x) as matrices; algebra basis element k is basis[k].
  std::vector<Matrix> basis;
  Decomposition decomposition;
};

/// End(x) with product f g = f after g; idempotents are the projections onto
/// the indecomposable copies, grouped by isomorphism class.
EndomorphismAlgebra endomorphism_algebra_full(const Module& x, std::uint64_t seed = 0);
AlgebraPtr endomorphism_algebra(const Module& x, std::uint64_t seed = 0);

/// Same algebra with a complete set of primitive orthogonal idempotents,
/// from the decomposition of the regular module.
AlgebraPtr complete_idempotents(const AlgebraPtr& a, std::uint64_t seed = 0);

/// {a : c a = a c} inside M_n(k) with primitive idempotents.
AlgebraPtr centralizer_algebra(const Matrix& c, std::uint64_t seed = 0);

/// Sum of images of all homomorphisms s -> A.
Ideal trace_ideal(const AlgebraPtr& a, const Module& s);

}  // namespace stabeq
