#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "stabeq/linalg/matrix.hpp"

namespace stabeq {

/// Univariate polynomial in t over a Field; coefficients low degree first,
/// no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Field f) : field_(f) {}
  Poly(Field f, std::vector<Scalar> coeffs);

  static Poly constant(Field f, long c);
  static Poly monomial(Field f, std::size_t degree);
  /// t - r
  static Poly linear(const Scalar& root);

  Field field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(std::size_t i) const;
  Scalar leading() const;
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

  Poly monic() const;
  Poly derivative() const;
  Scalar eval(const Scalar& x) const;
  /// p(m) for a square matrix.
  Matrix eval(const Matrix& m) const;
  /// p(m) v for a column block v, by Horner on vectors.
  Matrix apply(const Matrix& m, const Matrix& v) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Scalar& s) const;
  bool operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }

  std::string to_string() const;

 private:
  void trim();
  Field field_;
  std::vector<Scalar> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);
Poly powmod(const Poly& base, const mpz_class& e, const Poly& mod);

/// Minimal polynomial of a square matrix (monic).
Poly minimal_polynomial(const Matrix& m);
/// Monic minimal polynomial of the vector v under m.
Poly local_minimal_polynomial(const Matrix& m, const Matrix& v);

/// Squarefree decomposition of a monic polynomial: pairs (s_i, i), the s_i
/// squarefree, pairwise coprime, prod s_i^i = f.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

/// Distinct roots in the ground field, ascending (rationals by value,
/// residues by representative).
std::vector<Scalar> roots_in_field(const Poly& f);

/// Squarefree decomposition of the minimal polynomial, with every
/// squarefree part further split into its linear factors and the remaining
/// rootless cofactor.
std::vector<std::pair<Poly, int>> minpoly_squarefree(const Matrix& m);

/// The fraction a/b with |a|, |b| <= bound and a = r b mod m, if any.
bool rational_reconstruction(const mpz_class& r, const mpz_class& m, const mpz_class& bound,
                             mpq_class& out);

}  // namespace stabeq
