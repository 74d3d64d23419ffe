#include "stabeq/linalg/matrix.hpp"

#include <sstream>
#include <utility>

#include "stabeq/errors.hpp"
#include "stabeq/simd/modp_kernels.hpp"

namespace stabeq {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field.is_rational()) {
    q_.resize(rows * cols);
  } else {
    m_.assign(rows * cols, 0);
  }
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set_int(i, i, 1);
  return m;
}

Matrix Matrix::from_ints(Field field, std::size_t rows, std::size_t cols,
                         const std::vector<long>& row_major) {
  if (row_major.size() != rows * cols) {
    throw InvalidArgument("from_ints: expected " + std::to_string(rows * cols) + " entries");
  }
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.set_int(i, j, row_major[i * cols + j]);
  }
  return m;
}

Matrix Matrix::column_vector(const std::vector<Scalar>& entries, Field field) {
  Matrix m(field, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
  return m;
}

Matrix Matrix::unit_vector(Field field, std::size_t n, std::size_t i) {
  Matrix m(field, n, 1);
  m.set_int(i, 0, 1);
  return m;
}

Scalar Matrix::get(std::size_t r, std::size_t c) const {
  std::size_t k = r * cols_ + c;
  if (field_.is_rational()) return Scalar(field_, q_[k]);
  return Scalar::from_residue(field_, m_[k]);
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  if (value.field() != field_) {
    throw FieldMismatch("matrix over " + field_.to_string() + " given entry over " +
                        value.field().to_string());
  }
  std::size_t k = r * cols_ + c;
  if (field_.is_rational()) {
    q_[k] = value.rational();
  } else {
    m_[k] = value.residue();
  }
}

void Matrix::set_int(std::size_t r, std::size_t c, long value) {
  set(r, c, Scalar(field_, value));
}

bool Matrix::is_zero_at(std::size_t r, std::size_t c) const {
  std::size_t k = r * cols_ + c;
  return field_.is_rational() ? sgn(q_[k]) == 0 : m_[k] == 0;
}

void Matrix::add_to(std::size_t r, std::size_t c, const Scalar& value) {
  set(r, c, get(r, c) + value);
}

void Matrix::check_same(const Matrix& o, const char* op) const {
  if (field_ != o.field_) {
    throw FieldMismatch(std::string(op) + ": fields " + field_.to_string() + " and " +
                        o.field_.to_string());
  }
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw InvalidArgument(std::string(op) + ": shape mismatch");
  }
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r = *this;
  r += o;
  return r;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  check_same(o, "matrix sum");
  if (field_.is_rational()) {
    for (std::size_t k = 0; k < q_.size(); ++k) q_[k] += o.q_[k];
  } else {
    for (std::size_t r = 0; r < rows_; ++r) {
      simd::axpy_mod(residue_row(r), o.residue_row(r), 1, field_.modulus());
    }
  }
  return *this;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix r = *this;
  r.add_scaled(o, Scalar(field_, -1));
  return r;
}

Matrix Matrix::operator-() const { return scaled(Scalar(field_, -1)); }

Matrix Matrix::scaled(const Scalar& s) const {
  if (s.field() != field_) throw FieldMismatch("scaling across fields");
  Matrix r = *this;
  if (field_.is_rational()) {
    for (auto& x : r.q_) x *= s.rational();
  } else {
    for (std::size_t i = 0; i < rows_; ++i) {
      simd::scale_mod(r.residue_row(i), s.residue(), field_.modulus());
    }
  }
  return r;
}

void Matrix::add_scaled(const Matrix& o, const Scalar& s) {
  check_same(o, "matrix axpy");
  if (s.field() != field_) throw FieldMismatch("scaling across fields");
  if (s.is_zero()) return;
  if (field_.is_rational()) {
    const mpq_class& c = s.rational();
    for (std::size_t k = 0; k < q_.size(); ++k) {
      if (sgn(o.q_[k]) != 0) q_[k] += c * o.q_[k];
    }
  } else {
    for (std::size_t r = 0; r < rows_; ++r) {
      simd::axpy_mod(residue_row(r), o.residue_row(r), s.residue(), field_.modulus());
    }
  }
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (field_ != o.field_) throw FieldMismatch("matrix product across fields");
  if (cols_ != o.rows_) {
    throw InvalidArgument("matrix product: " + std::to_string(rows_) + "x" +
                          std::to_string(cols_) + " times " + std::to_string(o.rows_) + "x" +
                          std::to_string(o.cols_));
  }
  Matrix r(field_, rows_, o.cols_);
  if (field_.is_rational()) {
    // integer rows and columns over common denominators, one canonicalization per entry
    std::vector<mpz_class> a(rows_ * cols_), b(cols_ * o.cols_), da(rows_, 1), db(o.cols_, 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const mpq_class& x = q_[i * cols_ + k];
        if (sgn(x) != 0) mpz_lcm(da[i].get_mpz_t(), da[i].get_mpz_t(), x.get_den_mpz_t());
      }
      for (std::size_t k = 0; k < cols_; ++k) {
        const mpq_class& x = q_[i * cols_ + k];
        if (sgn(x) == 0) continue;
        mpz_divexact(a[i * cols_ + k].get_mpz_t(), da[i].get_mpz_t(), x.get_den_mpz_t());
        a[i * cols_ + k] *= x.get_num();
      }
    }
    for (std::size_t j = 0; j < o.cols_; ++j) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const mpq_class& x = o.q_[k * o.cols_ + j];
        if (sgn(x) != 0) mpz_lcm(db[j].get_mpz_t(), db[j].get_mpz_t(), x.get_den_mpz_t());
      }
      for (std::size_t k = 0; k < cols_; ++k) {
        const mpq_class& x = o.q_[k * o.cols_ + j];
        if (sgn(x) == 0) continue;
        mpz_divexact(b[j * cols_ + k].get_mpz_t(), db[j].get_mpz_t(), x.get_den_mpz_t());
        b[j * cols_ + k] *= x.get_num();
      }
    }
    mpz_class acc;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < o.cols_; ++j) {
        acc = 0;
        for (std::size_t k = 0; k < cols_; ++k) {
          const mpz_class& x = a[i * cols_ + k];
          if (sgn(x) == 0) continue;
          const mpz_class& y = b[j * cols_ + k];
          if (sgn(y) != 0) mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        }
        if (sgn(acc) == 0) continue;
        mpq_class& dst = r.q_[i * o.cols_ + j];
        dst.get_num() = acc;
        mpz_mul(dst.get_den_mpz_t(), da[i].get_mpz_t(), db[j].get_mpz_t());
        dst.canonicalize();
      }
    }
  } else {
    std::uint32_t p = field_.modulus();
    for (std::size_t i = 0; i < rows_; ++i) {
      auto dst = r.residue_row(i);
      for (std::size_t k = 0; k < cols_; ++k) {
        std::uint32_t a = m_[i * cols_ + k];
        if (a != 0) simd::axpy_mod(dst, o.residue_row(k), a, p);
      }
    }
  }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_rational()) {
        r.q_[j * rows_ + i] = q_[i * cols_ + j];
      } else {
        r.m_[j * rows_ + i] = m_[i * cols_ + j];
      }
    }
  }
  return r;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw InvalidArgument("block out of range");
  Matrix r(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) {
      std::size_t src = (r0 + i) * cols_ + c0 + j;
      if (field_.is_rational()) {
        r.q_[i * nc + j] = q_[src];
      } else {
        r.m_[i * nc + j] = m_[src];
      }
    }
  }
  return r;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
  Matrix r(field_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (field_.is_rational()) {
        r.q_[i * idx.size() + j] = q_[i * cols_ + idx[j]];
      } else {
        r.m_[i * idx.size() + j] = m_[i * cols_ + idx[j]];
      }
    }
  }
  return r;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix r(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_rational()) {
        r.q_[i * cols_ + j] = q_[idx[i] * cols_ + j];
      } else {
        r.m_[i * cols_ + j] = m_[idx[i] * cols_ + j];
      }
    }
  }
  return r;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (b.field_ != field_) throw FieldMismatch("set_block across fields");
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw InvalidArgument("set_block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      std::size_t dst = (r0 + i) * cols_ + c0 + j;
      if (field_.is_rational()) {
        q_[dst] = b.q_[i * b.cols_ + j];
      } else {
        m_[dst] = b.m_[i * b.cols_ + j];
      }
    }
  }
}

Matrix Matrix::hcat(const std::vector<Matrix>& blocks, Field field, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows_ != rows) throw InvalidArgument("hcat: row count mismatch");
    cols += b.cols_;
  }
  Matrix r(field, rows, cols);
  std::size_t c = 0;
  for (const auto& b : blocks) {
    r.set_block(0, c, b);
    c += b.cols_;
  }
  return r;
}

Matrix Matrix::vcat(const std::vector<Matrix>& blocks, Field field, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols_ != cols) throw InvalidArgument("vcat: column count mismatch");
    rows += b.rows_;
  }
  Matrix r(field, rows, cols);
  std::size_t row = 0;
  for (const auto& b : blocks) {
    r.set_block(row, 0, b);
    row += b.rows_;
  }
  return r;
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b) { return hcat({a, b}, a.field_, a.rows_); }
Matrix Matrix::vcat(const Matrix& a, const Matrix& b) { return vcat({a, b}, a.field_, a.cols_); }

Matrix Matrix::direct_sum(const Matrix& a, const Matrix& b) {
  Matrix r(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  r.set_block(0, 0, a);
  r.set_block(a.rows_, a.cols_, b);
  return r;
}

Matrix Matrix::flatten() const {
  Matrix r = *this;
  r.rows_ = rows_ * cols_;
  r.cols_ = 1;
  return r;
}

Matrix Matrix::unflatten(const Matrix& column, std::size_t rows, std::size_t cols) {
  if (column.rows_ * column.cols_ != rows * cols) throw InvalidArgument("unflatten: size mismatch");
  Matrix r = column;
  r.rows_ = rows;
  r.cols_ = cols;
  return r;
}

bool Matrix::is_zero() const {
  if (field_.is_rational()) {
    for (const auto& x : q_) {
      if (sgn(x) != 0) return false;
    }
    return true;
  }
  for (auto x : m_) {
    if (x != 0) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      Scalar v = get(i, j);
      if (i == j ? !v.is_one() : !v.is_zero()) return false;
    }
  }
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && q_ == o.q_ && m_ == o.m_;
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) n += is_zero_at(i, j) ? 0 : 1;
  }
  return n;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << get(i, j).to_string();
  }
  os << "]";
  return os.str();
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (field_.is_rational()) {
      std::swap(q_[a * cols_ + j], q_[b * cols_ + j]);
    } else {
      std::swap(m_[a * cols_ + j], m_[b * cols_ + j]);
    }
  }
}

namespace {

// Fraction-free Gauss-Jordan on integer rows: every update divides exactly
// by the previous pivot, and at the end all pivot entries equal the last one.
void eliminate_rational(Matrix& m, std::size_t limit, Echelon& out) {
  std::size_t rows = m.rows(), cols = m.cols();
  std::vector<mpz_class> z(rows * cols);
  mpz_class den;
  for (std::size_t r = 0; r < rows; ++r) {
    auto src = m.rational_row(r);
    den = 1;
    for (const auto& q : src) {
      if (sgn(q) != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(src[j]) == 0) continue;
      mpz_divexact(z[r * cols + j].get_mpz_t(), den.get_mpz_t(), src[j].get_den_mpz_t());
      z[r * cols + j] *= src[j].get_num();
    }
  }
  auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return z[r * cols + c]; };
  mpz_class prev = 1, t;
  std::size_t row = 0;
  for (std::size_t col = 0; col < limit && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && sgn(at(piv, col)) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < cols; ++j) swap(at(piv, j), at(row, j));
    }
    const mpz_class p = at(row, col);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row) continue;
      mpz_class f = at(r, col);
      for (std::size_t j = 0; j < cols; ++j) {
        if (j == col) continue;
        mpz_class& e = at(r, j);
        if (sgn(f) == 0) {
          if (sgn(e) == 0) continue;
          e *= p;
        } else {
          t = f * at(row, j);
          e *= p;
          e -= t;
        }
        if (prev != 1) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), prev.get_mpz_t());
      }
      at(r, col) = 0;
    }
    prev = p;
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  for (std::size_t r = 0; r < rows; ++r) {
    auto dst = m.rational_row(r);
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(at(r, j)) == 0) {
        dst[j] = 0;
        continue;
      }
      dst[j] = mpq_class(at(r, j), prev);
      dst[j].canonicalize();
    }
  }
}

void eliminate_modular(Matrix& m, std::size_t limit, Echelon& out) {
  std::uint32_t p = m.field().modulus();
  std::size_t row = 0;
  for (std::size_t col = 0; col < limit && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m.residue_row(piv)[col] == 0) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(piv, row);
    auto prow = m.residue_row(row);
    simd::scale_mod(prow, inverse_mod(prow[col], p), p);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      auto cur = m.residue_row(r);
      if (cur[col] == 0) continue;
      simd::axpy_mod(cur, prow, p - cur[col], p);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
}

}  // namespace

Echelon row_echelon(Matrix m, std::optional<std::size_t> limit_cols) {
  Echelon out;
  std::size_t limit = limit_cols ? std::min(*limit_cols, m.cols()) : m.cols();
  if (m.field().is_rational()) {
    eliminate_rational(m, limit, out);
  } else {
    eliminate_modular(m, limit, out);
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  return row_echelon(m).rank;
}

Matrix kernel(const Matrix& m) {
  Echelon e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  Matrix k(m.field(), m.cols(), m.cols() - e.rank);
  std::size_t out = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    k.set_int(f, out, 1);
    for (std::size_t i = 0; i < e.rank; ++i) {
      if (!e.reduced.is_zero_at(i, f)) k.set(e.pivots[i], out, -e.reduced.get(i, f));
    }
    ++out;
  }
  return k;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& rhs) {
  if (a.field() != rhs.field()) throw FieldMismatch("solve: coefficient and rhs fields differ");
  if (a.rows() != rhs.rows()) throw InvalidArgument("solve: row count mismatch");
  Echelon e = row_echelon(Matrix::hcat(a, rhs), a.cols());
  for (std::size_t i = e.rank; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
      if (!e.reduced.is_zero_at(i, a.cols() + j)) return std::nullopt;
    }
  }
  Matrix x(a.field(), a.cols(), rhs.cols());
  for (std::size_t i = 0; i < e.rank; ++i) {
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
      x.set(e.pivots[i], j, e.reduced.get(i, a.cols() + j));
    }
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw NotSquare("inverse of a non-square matrix");
  Echelon e = row_echelon(Matrix::hcat(m, Matrix::identity(m.field(), m.rows())), m.cols());
  if (e.rank != m.rows()) return std::nullopt;
  return e.reduced.block(0, m.cols(), m.rows(), m.rows());
}

bool is_invertible(const Matrix& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

RrefRankSolve rref_rank_solve(const Matrix& m, const std::optional<Matrix>& rhs) {
  RrefRankSolve out;
  if (rhs) {
    if (rhs->field() != m.field()) throw FieldMismatch("rref_rank_solve: rhs field differs");
    if (rhs->rows() != m.rows()) throw InvalidArgument("rref_rank_solve: rhs row count mismatch");
  }
  out.rank = rank(m);
  out.kernel_basis = kernel(m);
  if (rhs) out.particular_solution = solve(m, *rhs);
  return out;
}

Matrix column_basis(const Matrix& m) {
  if (m.cols() == 0) return m;
  return m.select_columns(row_echelon(m).pivots);
}

Matrix complement_basis(const Matrix& u) {
  std::size_t n = u.rows();
  Echelon e = row_echelon(Matrix::hcat(u, Matrix::identity(u.field(), n)));
  std::vector<std::size_t> extra;
  for (auto c : e.pivots) {
    if (c >= u.cols()) extra.push_back(c - u.cols());
  }
  return Matrix::identity(u.field(), n).select_columns(extra);
}

Matrix intersect_spaces(const Matrix& u, const Matrix& v) {
  if (u.cols() == 0 || v.cols() == 0) return Matrix(u.field(), u.rows(), 0);
  Matrix k = kernel(Matrix::hcat(u, -v));
  return column_basis(u * k.block(0, 0, u.cols(), k.cols()));
}

bool in_span(const Matrix& basis, const Matrix& vectors) {
  if (vectors.cols() == 0) return true;
  if (basis.cols() == 0) return vectors.is_zero();
  return rank(basis) == rank(Matrix::hcat(basis, vectors));
}

Matrix sum_spaces(const Matrix& u, const Matrix& v) { return column_basis(Matrix::hcat(u, v)); }

SpanCoords::SpanCoords(Matrix basis) : basis_(std::move(basis)) {
  if (basis_.cols() == 0) return;
  Echelon e = row_echelon(basis_.transpose());
  if (e.rank != basis_.cols()) throw InvalidArgument("SpanCoords: basis columns are dependent");
  rows_ = e.pivots;
  inv_ = *inverse(basis_.select_rows(rows_));
}

Matrix SpanCoords::coords(const Matrix& vectors) const {
  if (basis_.cols() == 0) return Matrix(vectors.field(), 0, vectors.cols());
  return inv_ * vectors.select_rows(rows_);
}

bool SpanCoords::contains(const Matrix& vectors) const {
  if (basis_.cols() == 0) return vectors.is_zero();
  return basis_ * coords(vectors) == vectors;
}

}  // namespace stabeq
