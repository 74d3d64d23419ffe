#include "stabeq/linalg/field.hpp"

#include <charconv>

#include "stabeq/errors.hpp"

namespace stabeq {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::field_mismatch: return "FieldMismatch";
    case ErrorKind::not_square: return "NotSquare";
    case ErrorKind::non_split_field: return "NonSplitField";
    case ErrorKind::not_nilpotent: return "NotNilpotent";
    case ErrorKind::not_basic: return "NotBasic";
    case ErrorKind::radical_unavailable: return "RadicalUnavailable";
    case ErrorKind::non_split_endomorphism: return "NonSplitEndomorphism";
    case ErrorKind::inconclusive: return "Inconclusive";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::registry_incomplete: return "RegistryIncomplete";
  }
  return "Unknown";
}

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_u32(p)) {
    throw InvalidArgument("field modulus " + std::to_string(p) +
                          " is not a prime below 2^31");
  }
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  if (text.substr(0, 3) == "Fp:") {
    std::uint32_t p = 0;
    auto digits = text.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ParseError("bad field modulus in '" + std::string(text) + "'");
    }
    return prime(p);
  }
  throw ParseError("unknown field '" + std::string(text) + "' (expected Q or Fp:<p>)");
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "Fp:" + std::to_string(p_);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw InvalidArgument("division by zero in F_" + std::to_string(p));
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t reduce_mod(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t reduce_mod(const mpq_class& q, std::uint32_t p) {
  std::uint32_t den = reduce_mod(q.get_den(), p);
  if (den == 0) {
    throw InvalidArgument("denominator of " + q.get_str() + " vanishes mod " +
                          std::to_string(p));
  }
  std::uint64_t num = reduce_mod(q.get_num(), p);
  return static_cast<std::uint32_t>(num * inverse_mod(den, p) % p);
}

Scalar::Scalar(Field f, long value) : field_(f) {
  if (f.is_rational()) {
    q_ = value;
  } else {
    long m = value % static_cast<long>(f.modulus());
    if (m < 0) m += f.modulus();
    r_ = static_cast<std::uint32_t>(m);
  }
}

Scalar::Scalar(Field f, const mpq_class& value) : field_(f) {
  if (f.is_rational()) {
    q_ = value;
  } else {
    r_ = reduce_mod(value, f.modulus());
  }
}

Scalar Scalar::from_residue(Field f, std::uint32_t r) {
  Scalar s(f);
  s.r_ = r % f.modulus();
  return s;
}

Scalar Scalar::parse(Field f, std::string_view text) {
  mpq_class q;
  std::string s(text);
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw ParseError("malformed scalar '" + s + "'");
  }
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return Scalar(f, q);
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? q_ == 1 : r_ == 1;
}

void Scalar::check(const Scalar& o) const {
  if (field_ != o.field_) {
    throw FieldMismatch("scalar arithmetic across " + field_.to_string() + " and " +
                        o.field_.to_string());
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  check(o);
  Scalar s(field_);
  if (field_.is_rational()) {
    s.q_ = q_ + o.q_;
  } else {
    std::uint64_t v = std::uint64_t(r_) + o.r_;
    s.r_ = static_cast<std::uint32_t>(v % field_.modulus());
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_rational()) {
    s.q_ = -q_;
  } else {
    s.r_ = r_ == 0 ? 0 : field_.modulus() - r_;
  }
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check(o);
  Scalar s(field_);
  if (field_.is_rational()) {
    s.q_ = q_ * o.q_;
  } else {
    s.r_ = static_cast<std::uint32_t>(std::uint64_t(r_) * o.r_ % field_.modulus());
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvalidArgument("inverse of zero");
  Scalar s(field_);
  if (field_.is_rational()) {
    s.q_ = 1 / q_;
  } else {
    s.r_ = inverse_mod(r_, field_.modulus());
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check(o);
  return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

}  // namespace stabeq
