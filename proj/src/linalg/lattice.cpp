#include "stabeq/linalg/lattice.hpp"

#include <utility>

#include "stabeq/errors.hpp"

namespace stabeq {

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw InvalidArgument("IntMatrix product: shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpz_class& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  }
  return r;
}

// Fraction-free Bareiss elimination; every intermediate stays integral and
// the count of nonzero pivots is the rank over Q, which equals the rank of
// the generated free abelian subgroup.
std::size_t integer_subgroup_rank(const IntMatrix& generators) {
  IntMatrix a = generators;
  std::size_t rows = a.rows(), cols = a.cols();
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a.at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(rank, j));
    }
    const mpz_class p = a.at(rank, c);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a.at(r, j) = (p * a.at(r, j) - a.at(r, c) * a.at(rank, j)) / prev;
      }
      a.at(r, c) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace stabeq
