#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace stabeq {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const mpz_class& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> a_;
};

/// Rank of the subgroup of Z^rows generated by the columns.
std::size_t integer_subgroup_rank(const IntMatrix& generators);

}  // namespace stabeq
