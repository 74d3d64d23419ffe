#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stabeq/algebra/algebra.hpp"
#include "stabeq/algebra/quiver.hpp"

namespace stabeq {

/// A subspace of an algebra given by basis columns.
struct Ideal {
  AlgebraPtr algebra;
  Matrix basis;

  std::size_t dim() const { return basis.cols(); }
  bool contains(const Matrix& elements) const;
  bool is_left_ideal() const;
  bool is_right_ideal() const;
  bool is_two_sided() const { return is_left_ideal() && is_right_ideal(); }
};

Ideal zero_ideal(const AlgebraPtr& a);
Ideal whole_algebra(const AlgebraPtr& a);
/// Two-sided ideal generated by the given elements.
Ideal generated_ideal(const AlgebraPtr& a, const Matrix& elements);
/// Span of products x y with x in `left`, y in `right`.
Ideal product_ideal(const Ideal& left, const Ideal& right);
Ideal radical_ideal(const AlgebraPtr& a);

/// {x : x i = 0 for all i in the ideal}.
Ideal left_annihilator(const Ideal& i);

/// The quotient A/I on the standard basis vectors complementing I.
struct Quotient {
  AlgebraPtr algebra;
  /// Rows mapping A-coordinates to quotient coordinates.
  Matrix projection;
  /// Basis elements of A lifting the quotient basis.
  Matrix lift;
};
Quotient quotient(const Ideal& i);
AlgebraPtr quotient_algebra(const Ideal& i);

struct GabrielQuiver {
  Matrix radical;
  Quiver quiver;
  std::vector<std::vector<std::size_t>> arrow_counts;
};
/// Needs a basic algebra (NotBasic otherwise).
GabrielQuiver radical_and_gabriel_quiver(const AlgebraPtr& a);

AlgebraPtr opposite_algebra(const AlgebraPtr& a);

/// Lower triangular n x n matrices, basis E_ij for i >= j.
AlgebraPtr lower_triangular_algebra(Field field, std::size_t n);
/// The full matrix algebra M_n(k).
AlgebraPtr full_matrix_algebra(Field field, std::size_t n);

/// Algebra of all matrices in the column span of `basis_matrices` (each
/// n x n, closed under products), with the given idempotents (as matrices)
/// or, when empty, only the identity.
AlgebraPtr matrix_subalgebra(Field field, const std::vector<Matrix>& basis_matrices,
                             const std::vector<Matrix>& idempotent_matrices,
                             std::string provenance, std::string name = {});

}  // namespace stabeq
