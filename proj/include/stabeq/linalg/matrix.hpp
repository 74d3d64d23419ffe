#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stabeq/linalg/field.hpp"

namespace stabeq {

/// Dense row-major matrix over a Field. Rational entries live in GMP
/// fractions; prime-field entries are residues in uint32 so the F_p row
/// kernels in stabeq/simd can operate on them directly.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_ints(Field field, std::size_t rows, std::size_t cols,
                          const std::vector<long>& row_major);
  static Matrix column_vector(const std::vector<Scalar>& entries, Field field);
  /// Standard basis vector e_i of length n.
  static Matrix unit_vector(Field field, std::size_t n, std::size_t i);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& value);
  void set_int(std::size_t r, std::size_t c, long value);
  bool is_zero_at(std::size_t r, std::size_t c) const;
  void add_to(std::size_t r, std::size_t c, const Scalar& value);

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix scaled(const Scalar& s) const;
  /// this + s * o, in place.
  void add_scaled(const Matrix& o, const Scalar& s);

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Matrix column(std::size_t c) const { return block(0, c, rows_, 1); }
  Matrix row(std::size_t r) const { return block(r, 0, 1, cols_); }
  Matrix select_columns(const std::vector<std::size_t>& idx) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  static Matrix hcat(const std::vector<Matrix>& blocks, Field field, std::size_t rows);
  static Matrix vcat(const std::vector<Matrix>& blocks, Field field, std::size_t cols);
  static Matrix hcat(const Matrix& a, const Matrix& b);
  static Matrix vcat(const Matrix& a, const Matrix& b);
  static Matrix direct_sum(const Matrix& a, const Matrix& b);

  /// Row-major flattening into a single column.
  Matrix flatten() const;
  static Matrix unflatten(const Matrix& column, std::size_t rows, std::size_t cols);

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  std::size_t nonzeros() const;

  std::string to_string() const;

  // Raw storage for the elimination kernels.
  std::span<mpq_class> rational_row(std::size_t r) { return {q_.data() + r * cols_, cols_}; }
  std::span<const mpq_class> rational_row(std::size_t r) const {
    return {q_.data() + r * cols_, cols_};
  }
  std::span<std::uint32_t> residue_row(std::size_t r) { return {m_.data() + r * cols_, cols_}; }
  std::span<const std::uint32_t> residue_row(std::size_t r) const {
    return {m_.data() + r * cols_, cols_};
  }
  void swap_rows(std::size_t a, std::size_t b);

 private:
  void check_same(const Matrix& o, const char* op) const;

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> q_;
  std::vector<std::uint32_t> m_;
};

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row echelon form. When `limit_cols` is set, pivots are only
/// searched among the first `limit_cols` columns.
Echelon row_echelon(Matrix m, std::optional<std::size_t> limit_cols = std::nullopt);
std::size_t rank(const Matrix& m);
/// Columns spanning the null space {x : m x = 0}.
Matrix kernel(const Matrix& m);
/// Exact solution X of a X = rhs, or nullopt if inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& rhs);
std::optional<Matrix> inverse(const Matrix& m);
bool is_invertible(const Matrix& m);

struct RrefRankSolve {
  std::size_t rank = 0;
  Matrix kernel_basis;
  std::optional<Matrix> particular_solution;
};
RrefRankSolve rref_rank_solve(const Matrix& m, const std::optional<Matrix>& rhs = std::nullopt);

/// A basis (subset of the columns) of the column space.
Matrix column_basis(const Matrix& m);
/// Standard basis vectors completing col(u) to the whole space.
Matrix complement_basis(const Matrix& u);
Matrix intersect_spaces(const Matrix& u, const Matrix& v);
bool in_span(const Matrix& basis, const Matrix& vectors);
Matrix sum_spaces(const Matrix& u, const Matrix& v);

/// Coordinates with respect to a fixed full-column-rank basis. Inputs are
/// assumed to lie in the span; `contains` checks that.
class SpanCoords {
 public:
  SpanCoords() = default;
  explicit SpanCoords(Matrix basis);
  const Matrix& basis() const { return basis_; }
  std::size_t dim() const { return basis_.cols(); }
  Matrix coords(const Matrix& vectors) const;
  bool contains(const Matrix& vectors) const;

 private:
  Matrix basis_;
  std::vector<std::size_t> rows_;
  Matrix inv_;
};

}  // namespace stabeq
