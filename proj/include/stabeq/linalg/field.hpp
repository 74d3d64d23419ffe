#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace stabeq {

/// Ground field: the rationals, or F_p for a prime p < 2^31.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);
  /// Accepts "Q" or "Fp:<p>".
  static Field parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  bool is_prime() const { return p_ != 0; }
  std::uint32_t modulus() const { return p_; }
  std::uint32_t characteristic() const { return p_; }
  std::string to_string() const;

  friend bool operator==(Field a, Field b) { return a.p_ == b.p_; }
  friend bool operator!=(Field a, Field b) { return a.p_ != b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime_u32(std::uint32_t n);
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);
std::uint32_t reduce_mod(const mpz_class& z, std::uint32_t p);
/// Image of a rational in F_p; throws when p divides the denominator.
std::uint32_t reduce_mod(const mpq_class& q, std::uint32_t p);

/// One exact field element. Values carry their field so that mixing
/// fields is caught at the arithmetic boundary.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(Field f) : field_(f) {}
  Scalar(Field f, long value);
  Scalar(Field f, const mpq_class& value);

  static Scalar from_residue(Field f, std::uint32_t r);
  /// Parses "3", "-3/2". Over F_p the rational is reduced.
  static Scalar parse(Field f, std::string_view text);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  const mpq_class& rational() const { return q_; }
  std::uint32_t residue() const { return r_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check(const Scalar& o) const;

  Field field_;
  mpq_class q_;
  std::uint32_t r_ = 0;
};

}  // namespace stabeq
