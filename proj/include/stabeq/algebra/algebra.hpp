#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "stabeq/linalg/matrix.hpp"

namespace stabeq {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Raw ingredients of a structure-constant algebra. Elements are coordinate
/// columns in the basis; `left[i]` is the matrix of x -> b_i x, so its j-th
/// column holds the coordinates of b_i b_j.
struct AlgebraData {
  Field field;
  std::vector<std::string> labels;
  std::vector<Matrix> left;
  Matrix unit;
  std::vector<Matrix> idempotents;
  std::vector<std::string> vertex_names;
  std::string provenance;
  std::string name;
};

/// Derived data computed on first use.
struct AlgebraStructure {
  /// False when the radical could not be certified (positive characteristic
  /// without split local corners); `radical_error` says why.
  bool radical_known = true;
  std::string radical_error;
  Matrix radical;
  /// radical_powers[k] spans rad^(k+1); the last entry is zero-dimensional.
  std::vector<Matrix> radical_powers;
  /// Idempotents e_v with isomorphic Ae_v share a class.
  std::vector<std::size_t> vertex_class;
  std::vector<std::size_t> class_vertex;
  bool basic = true;
  /// Algebra generators, each lying in a corner e_j A e_i.
  std::vector<Matrix> generators;
  std::vector<std::pair<std::size_t, std::size_t>> generator_corner;  // (j, i)
  /// Arrow counts i -> j: dim e_j (rad/rad^2) e_i.
  std::vector<std::vector<std::size_t>> arrow_counts;
};

class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  /// Validates shapes, unit and idempotent identities (associativity is
  /// checked separately by `is_associative`).
  static AlgebraPtr create(AlgebraData data);
  /// From structure constants c[i][j] (coordinates of b_i b_j).
  static AlgebraPtr from_constants(Field field, std::vector<std::string> labels,
                                   const std::vector<std::vector<Matrix>>& constants,
                                   Matrix unit, std::vector<Matrix> idempotents,
                                   std::string provenance, std::string name = {});
  static AlgebraPtr zero(Field field);

  Field field() const { return d_.field; }
  std::size_t dim() const { return d_.left.size(); }
  const std::vector<std::string>& labels() const { return d_.labels; }
  const std::string& provenance() const { return d_.provenance; }
  const std::string& name() const { return d_.name; }
  const std::vector<std::string>& vertex_names() const { return d_.vertex_names; }

  const Matrix& left(std::size_t i) const { return d_.left[i]; }
  const std::vector<Matrix>& left_matrices() const { return d_.left; }
  Matrix basis_vector(std::size_t i) const { return Matrix::unit_vector(field(), dim(), i); }
  /// Matrix of y -> x y.
  Matrix left_mult(const Matrix& x) const;
  /// Matrix of y -> y x.
  Matrix right_mult(const Matrix& x) const;
  Matrix product(const Matrix& x, const Matrix& y) const;
  Scalar structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return d_.left[i].get(k, j);
  }

  const Matrix& unit() const { return d_.unit; }
  std::size_t vertex_count() const { return d_.idempotents.size(); }
  const Matrix& idempotent(std::size_t v) const { return d_.idempotents[v]; }
  const std::vector<Matrix>& idempotents() const { return d_.idempotents; }
  /// Basis of e_j A e_i as columns.
  Matrix corner(std::size_t j, std::size_t i) const;

  bool is_associative() const;
  bool idempotents_ok() const;

  AlgebraPtr opposite() const;
  const AlgebraStructure& structure() const;
  /// Throws RadicalUnavailable when the radical could not be certified.
  const Matrix& radical() const;
  bool is_semisimple() const { return radical().cols() == 0; }

  const AlgebraData& data() const { return d_; }

  explicit Algebra(AlgebraData data);

 private:
  AlgebraData d_;
  mutable std::mutex mu_;
  mutable std::shared_ptr<const AlgebraStructure> structure_;
  mutable std::shared_ptr<const Algebra> op_strong_;
  mutable std::weak_ptr<const Algebra> op_weak_;
};

/// Pointer identity, or identical constants and idempotents.
bool same_algebra(const Algebra& a, const Algebra& b);

/// Radical as the kernel of the trace form (characteristic zero only).
Matrix radical_trace_form(const Algebra& a);
/// Radical from the idempotent corners; needs split local corners.
Matrix radical_by_corners(const Algebra& a);

/// Coordinates of products of all pairs of columns, spanned.
Matrix span_products(const Algebra& a, const Matrix& x, const Matrix& y);

}  // namespace stabeq
