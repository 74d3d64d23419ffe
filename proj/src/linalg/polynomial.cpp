#include "stabeq/linalg/polynomial.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "stabeq/errors.hpp"

namespace stabeq {

Poly::Poly(Field f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) {
  for (const auto& c : c_) {
    if (c.field() != f) throw FieldMismatch("polynomial coefficient over the wrong field");
  }
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(Field f, long c) { return Poly(f, {Scalar(f, c)}); }

Poly Poly::monomial(Field f, std::size_t degree) {
  std::vector<Scalar> c(degree + 1, Scalar(f, 0));
  c[degree] = Scalar(f, 1);
  return Poly(f, std::move(c));
}

Poly Poly::linear(const Scalar& root) {
  Field f = root.field();
  return Poly(f, {-root, Scalar(f, 1)});
}

Scalar Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(field_, 0); }

Scalar Poly::leading() const { return c_.empty() ? Scalar(field_, 0) : c_.back(); }

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

Poly Poly::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Scalar(field_, static_cast<long>(i)));
  return Poly(field_, std::move(d));
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar acc(field_, 0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Matrix Poly::eval(const Matrix& m) const {
  if (m.rows() != m.cols()) throw NotSquare("polynomial evaluated at a non-square matrix");
  Matrix acc(m.field(), m.rows(), m.cols());
  Matrix id = Matrix::identity(m.field(), m.rows());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * m;
    acc.add_scaled(id, *it);
  }
  return acc;
}

Matrix Poly::apply(const Matrix& m, const Matrix& v) const {
  Matrix acc(v.field(), v.rows(), v.cols());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = m * acc;
    acc.add_scaled(v, *it);
  }
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  if (field_ != o.field_) throw FieldMismatch("polynomial sum across fields");
  std::vector<Scalar> r(std::max(c_.size(), o.c_.size()), Scalar(field_, 0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + o.scaled(Scalar(field_, -1)); }

Poly Poly::operator*(const Poly& o) const {
  if (field_ != o.field_) throw FieldMismatch("polynomial product across fields");
  if (is_zero() || o.is_zero()) return Poly(field_);
  std::vector<Scalar> r(c_.size() + o.c_.size() - 1, Scalar(field_, 0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return Poly(field_, std::move(r));
}

Poly Poly::scaled(const Scalar& s) const {
  std::vector<Scalar> r = c_;
  for (auto& x : r) x *= s;
  return Poly(field_, std::move(r));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Scalar& c = c_[k];
    if (c.is_zero()) continue;
    std::string s = c.to_string();
    bool neg = field_.is_rational() && sgn(c.rational()) < 0;
    if (neg) s = (-c).to_string();
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    bool unit = (neg ? (-c).is_one() : c.is_one());
    if (k == 0) {
      os << s;
    } else {
      if (!unit) os << s << "*";
      os << "t";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  Field f = a.field();
  std::vector<Scalar> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {Poly(f), a};
  std::vector<Scalar> q(a.degree() - db + 1, Scalar(f, 0));
  Scalar inv = b.leading().inverse();
  for (int k = a.degree(); k >= db; --k) {
    Scalar c = r[k] * inv;
    q[k - db] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= c * b.coeffs()[j];
  }
  r.resize(db);
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  return (a * (b / gcd(a, b))).monic();
}

Poly powmod(const Poly& base, const mpz_class& e, const Poly& mod) {
  Field f = base.field();
  Poly result = Poly::constant(f, 1) % mod;
  Poly b = base % mod;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % mod;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % mod;
  }
  return result;
}

Poly local_minimal_polynomial(const Matrix& m, const Matrix& v) {
  Field f = m.field();
  struct Entry {
    Matrix w;
    std::size_t pivot;
    Poly poly;
  };
  std::vector<Entry> basis;
  Matrix power = v;
  for (std::size_t k = 0;; ++k) {
    Matrix cur = power;
    Poly cur_poly = Poly::monomial(f, k);
    for (const auto& e : basis) {
      if (cur.is_zero_at(e.pivot, 0)) continue;
      Scalar c = cur.get(e.pivot, 0) / e.w.get(e.pivot, 0);
      cur.add_scaled(e.w, -c);
      cur_poly = cur_poly - e.poly.scaled(c);
    }
    std::size_t piv = 0;
    while (piv < cur.rows() && cur.is_zero_at(piv, 0)) ++piv;
    if (piv == cur.rows()) return cur_poly.monic();
    basis.push_back({std::move(cur), piv, std::move(cur_poly)});
    power = m * power;
  }
}

Poly minimal_polynomial(const Matrix& m) {
  if (m.rows() != m.cols()) throw NotSquare("minimal polynomial of a non-square matrix");
  Field f = m.field();
  Poly acc = Poly::constant(f, 1);
  for (std::size_t j = 0; j < m.rows(); ++j) {
    Matrix e = Matrix::unit_vector(f, m.rows(), j);
    if (acc.apply(m, e).is_zero()) continue;
    acc = lcm(acc, local_minimal_polynomial(m, e));
  }
  return acc;
}

namespace {

Poly pth_root(const Poly& f) {
  Field fld = f.field();
  std::uint32_t p = fld.modulus();
  std::vector<Scalar> r;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) r.push_back(f.coeffs()[i]);
  return Poly(fld, std::move(r));
}

void squarefree_into(const Poly& f, int scale, std::vector<std::pair<Poly, int>>& out) {
  if (f.degree() <= 0) return;
  Poly d = f.derivative();
  if (d.is_zero()) {
    squarefree_into(pth_root(f), scale * static_cast<int>(f.field().modulus()), out);
    return;
  }
  Poly c = gcd(f, d);
  Poly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly z = (w / y).monic();
    if (z.degree() > 0) out.emplace_back(z, i * scale);
    ++i;
    w = y;
    c = c / y;
  }
  c = c.monic();
  if (c.degree() > 0) {
    squarefree_into(pth_root(c), scale * static_cast<int>(f.field().modulus()), out);
  }
}

// Integer content-free version of a rational polynomial.
std::vector<mpz_class> integer_primitive(const Poly& f) {
  mpz_class den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> g;
  mpz_class content = 0;
  for (const auto& c : f.coeffs()) {
    mpq_class scaled = c.rational() * den;
    g.push_back(scaled.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), g.back().get_mpz_t());
  }
  if (content != 0) {
    for (auto& x : g) x /= content;
  }
  return g;
}

mpz_class eval_mod(const std::vector<mpz_class>& g, const mpz_class& x, const mpz_class& m) {
  mpz_class acc = 0;
  for (auto it = g.rbegin(); it != g.rend(); ++it) {
    acc = (acc * x + *it) % m;
  }
  if (acc < 0) acc += m;
  return acc;
}

std::vector<mpz_class> derivative_int(const std::vector<mpz_class>& g) {
  std::vector<mpz_class> d;
  for (std::size_t i = 1; i < g.size(); ++i) d.push_back(g[i] * static_cast<unsigned long>(i));
  return d;
}

Poly reduce_poly(const std::vector<mpz_class>& g, Field fp) {
  std::vector<Scalar> c;
  for (const auto& x : g) c.push_back(Scalar::from_residue(fp, reduce_mod(x, fp.modulus())));
  return Poly(fp, std::move(c));
}

bool rational_reconstruct(const mpz_class& r, const mpz_class& m, const mpz_class& bound,
                          mpq_class& out) {
  mpz_class r0 = m, r1 = r, s0 = 0, s1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (s1 == 0 || abs(s1) > bound) return false;
  out = mpq_class(r1, s1);
  out.canonicalize();
  return true;
}

std::vector<Scalar> rational_roots(const Poly& f) {
  Field q = f.field();
  std::vector<Scalar> roots;
  Poly h = f;
  if (h.degree() <= 0) return roots;
  h = (h / gcd(h, h.derivative())).monic();
  if (h.coeff(0).is_zero()) {
    roots.emplace_back(q, 0);
    h = h / Poly::monomial(q, 1);
  }
  if (h.degree() <= 0) return roots;
  if (h.degree() == 1) {
    roots.push_back(-h.coeff(0) / h.coeff(1));
    return roots;
  }
  std::vector<mpz_class> g = integer_primitive(h);
  std::vector<mpz_class> dg = derivative_int(g);
  mpz_class b = abs(g.front()) > abs(g.back()) ? mpz_class(abs(g.front())) : mpz_class(abs(g.back()));
  mpz_class target = 2 * b * b + 2;

  for (std::uint32_t p = 1009;; p += 2) {
    if (!is_prime_u32(p)) continue;
    if (reduce_mod(g.back(), p) == 0) continue;
    Field fp = Field::prime(p);
    Poly gp = reduce_poly(g, fp);
    if (gcd(gp, gp.derivative()).degree() != 0) continue;
    for (std::uint32_t x = 0; x < p; ++x) {
      if (!gp.eval(Scalar::from_residue(fp, x)).is_zero()) continue;
      mpz_class m = p, r = x;
      while (m <= target) {
        mpz_class m2 = m * m;
        mpz_class num = eval_mod(g, r, m2);
        mpz_class den = eval_mod(dg, r, m2);
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m2.get_mpz_t());
        r = (r - num * inv) % m2;
        if (r < 0) r += m2;
        m = m2;
      }
      mpz_class bound;
      mpz_class half = (m - 1) / 2;
      mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
      mpq_class cand;
      if (!rational_reconstruct(r, m, bound, cand)) continue;
      Scalar s(q, cand);
      if (h.eval(s).is_zero()) roots.push_back(s);
    }
    break;
  }
  return roots;
}

void split_linear(const Poly& h, std::mt19937_64& rng, std::vector<Scalar>& roots) {
  Field f = h.field();
  if (h.degree() <= 0) return;
  if (h.degree() == 1) {
    roots.push_back(-h.coeff(0) / h.coeff(1));
    return;
  }
  std::uint32_t p = f.modulus();
  mpz_class e = (p - 1) / 2;
  for (;;) {
    Scalar a = Scalar::from_residue(f, static_cast<std::uint32_t>(rng() % p));
    Poly base(f, {a, Scalar(f, 1)});
    Poly g = gcd(h, powmod(base, e, h) - Poly::constant(f, 1));
    if (g.degree() > 0 && g.degree() < h.degree()) {
      split_linear(g, rng, roots);
      split_linear(h / g, rng, roots);
      return;
    }
  }
}

std::vector<Scalar> modular_roots(const Poly& f) {
  Field fld = f.field();
  std::uint32_t p = fld.modulus();
  std::vector<Scalar> roots;
  if (f.degree() <= 0) return roots;
  if (p < 4096) {
    for (std::uint32_t x = 0; x < p; ++x) {
      Scalar s = Scalar::from_residue(fld, x);
      if (f.eval(s).is_zero()) roots.push_back(s);
    }
    return roots;
  }
  Poly t = Poly::monomial(fld, 1);
  Poly h = gcd(f, powmod(t, mpz_class(p), f) - t);
  std::mt19937_64 rng(0x5eedULL);
  split_linear(h, rng, roots);
  return roots;
}

}  // namespace

bool rational_reconstruction(const mpz_class& r, const mpz_class& m, const mpz_class& bound,
                             mpq_class& out) {
  return rational_reconstruct(r, m, bound, out);
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  squarefree_into(f.monic(), 1, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  std::vector<std::pair<Poly, int>> merged;
  for (auto& [poly, mult] : out) {
    if (!merged.empty() && merged.back().second == mult) {
      merged.back().first = merged.back().first * poly;
    } else {
      merged.emplace_back(poly, mult);
    }
  }
  return merged;
}

std::vector<Scalar> roots_in_field(const Poly& f) {
  std::vector<Scalar> roots =
      f.field().is_rational() ? rational_roots(f) : modular_roots(f);
  std::sort(roots.begin(), roots.end(), [](const Scalar& a, const Scalar& b) {
    return a.field().is_rational() ? a.rational() < b.rational() : a.residue() < b.residue();
  });
  return roots;
}

std::vector<std::pair<Poly, int>> minpoly_squarefree(const Matrix& m) {
  if (m.rows() != m.cols()) throw NotSquare("minpoly_squarefree of a non-square matrix");
  std::vector<std::pair<Poly, int>> linear, rest;
  for (auto& [part, mult] : squarefree_decomposition(minimal_polynomial(m))) {
    Poly cofactor = part;
    for (const auto& r : roots_in_field(part)) {
      Poly l = Poly::linear(r);
      linear.emplace_back(l, mult);
      cofactor = cofactor / l;
    }
    if (cofactor.degree() > 0) rest.emplace_back(cofactor.monic(), mult);
  }
  auto root_less = [](const auto& a, const auto& b) {
    Scalar ra = -a.first.coeff(0), rb = -b.first.coeff(0);
    return ra.field().is_rational() ? ra.rational() < rb.rational() : ra.residue() < rb.residue();
  };
  std::sort(linear.begin(), linear.end(), root_less);
  linear.insert(linear.end(), rest.begin(), rest.end());
  return linear;
}

}  // namespace stabeq
