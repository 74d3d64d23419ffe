#include "stabeq/algebra/algebra.hpp"

#include "stabeq/errors.hpp"
#include "stabeq/linalg/polynomial.hpp"

namespace stabeq {

Algebra::Algebra(AlgebraData data) : d_(std::move(data)) {}

AlgebraPtr Algebra::create(AlgebraData data) {
  std::size_t n = data.left.size();
  if (data.labels.size() != n) throw InvalidArgument("algebra: label count differs from dimension");
  for (const auto& m : data.left) {
    if (m.field() != data.field) throw FieldMismatch("algebra: structure constants over another field");
    if (m.rows() != n || m.cols() != n) throw InvalidArgument("algebra: bad multiplication matrix shape");
  }
  if (data.unit.rows() != n || data.unit.cols() != 1) throw InvalidArgument("algebra: bad unit shape");
  if (data.vertex_names.empty()) {
    for (std::size_t v = 0; v < data.idempotents.size(); ++v) {
      data.vertex_names.push_back(std::to_string(v + 1));
    }
  }
  if (data.vertex_names.size() != data.idempotents.size()) {
    throw InvalidArgument("algebra: vertex name count differs from idempotent count");
  }
  auto a = std::make_shared<Algebra>(std::move(data));
  if (n > 0) {
    Matrix u = a->left_mult(a->unit());
    if (!u.is_identity()) throw InvalidArgument("algebra: unit does not act as the identity");
    if (!(a->right_mult(a->unit())).is_identity()) {
      throw InvalidArgument("algebra: unit is not a right identity");
    }
  }
  if (!a->idempotents_ok()) {
    throw InvalidArgument("algebra: idempotents are not orthogonal or do not sum to the unit");
  }
  return a;
}

AlgebraPtr Algebra::from_constants(Field field, std::vector<std::string> labels,
                                   const std::vector<std::vector<Matrix>>& constants,
                                   Matrix unit, std::vector<Matrix> idempotents,
                                   std::string provenance, std::string name) {
  std::size_t n = constants.size();
  AlgebraData d;
  d.field = field;
  d.labels = std::move(labels);
  for (std::size_t i = 0; i < n; ++i) {
    if (constants[i].size() != n) throw InvalidArgument("structure constants: ragged table");
    std::vector<Matrix> cols(constants[i].begin(), constants[i].end());
    d.left.push_back(Matrix::hcat(cols, field, n));
  }
  d.unit = std::move(unit);
  d.idempotents = std::move(idempotents);
  d.provenance = std::move(provenance);
  d.name = std::move(name);
  return create(std::move(d));
}

AlgebraPtr Algebra::zero(Field field) {
  AlgebraData d;
  d.field = field;
  d.unit = Matrix(field, 0, 1);
  d.provenance = "zero";
  d.name = "0";
  return create(std::move(d));
}

Matrix Algebra::left_mult(const Matrix& x) const {
  Matrix r(field(), dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!x.is_zero_at(i, 0)) r.add_scaled(d_.left[i], x.get(i, 0));
  }
  return r;
}

Matrix Algebra::right_mult(const Matrix& x) const {
  // column j of the result is b_j x = L_j x
  Matrix r(field(), dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) r.set_block(0, j, d_.left[j] * x);
  return r;
}

Matrix Algebra::product(const Matrix& x, const Matrix& y) const {
  Matrix r(field(), dim(), y.cols());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!x.is_zero_at(i, 0)) r.add_scaled(d_.left[i] * y, x.get(i, 0));
  }
  return r;
}

Matrix Algebra::corner(std::size_t j, std::size_t i) const {
  Matrix m = left_mult(idempotent(j)) * right_mult(idempotent(i));
  return column_basis(m);
}

bool Algebra::is_associative() const {
  // L_{b_i b_j} = L_i L_j for all i, j
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      Matrix lhs = left_mult(d_.left[i].column(j));
      if (lhs != d_.left[i] * d_.left[j]) return false;
    }
  }
  return true;
}

bool Algebra::idempotents_ok() const {
  Matrix sum(field(), dim(), 1);
  for (std::size_t a = 0; a < vertex_count(); ++a) {
    const Matrix& ea = idempotent(a);
    if (ea.rows() != dim() || ea.cols() != 1) return false;
    sum += ea;
    for (std::size_t b = 0; b < vertex_count(); ++b) {
      Matrix p = product(ea, idempotent(b));
      if (a == b ? p != ea : !p.is_zero()) return false;
    }
  }
  return dim() == 0 ? vertex_count() == 0 : sum == unit();
}

AlgebraPtr Algebra::opposite() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (op_strong_) return op_strong_;
  if (auto back = op_weak_.lock()) return back;
  AlgebraData d = d_;
  for (std::size_t i = 0; i < dim(); ++i) {
    // in the opposite algebra b_i * b_j = b_j b_i, the matrix of y -> y b_i
    d.left[i] = right_mult(basis_vector(i));
  }
  d.provenance = "opposite";
  d.name = d_.name.empty() ? std::string() : d_.name + "^op";
  auto op = std::make_shared<Algebra>(std::move(d));
  op->op_weak_ = std::static_pointer_cast<const Algebra>(shared_from_this());
  op_strong_ = op;
  return op;
}

bool same_algebra(const Algebra& a, const Algebra& b) {
  if (&a == &b) return true;
  return a.field() == b.field() && a.left_matrices() == b.left_matrices() &&
         a.idempotents() == b.idempotents() && a.unit() == b.unit();
}

Matrix span_products(const Algebra& a, const Matrix& x, const Matrix& y) {
  std::vector<Matrix> cols;
  for (std::size_t i = 0; i < x.cols(); ++i) cols.push_back(a.left_mult(x.column(i)) * y);
  if (cols.empty()) return Matrix(a.field(), a.dim(), 0);
  return column_basis(Matrix::hcat(cols, a.field(), a.dim()));
}

Matrix radical_trace_form(const Algebra& a) {
  if (!a.field().is_rational()) {
    throw RadicalUnavailable("trace form radical needs characteristic zero");
  }
  std::size_t n = a.dim();
  Matrix t(a.field(), 1, n);
  for (std::size_t k = 0; k < n; ++k) {
    Scalar tr(a.field(), 0);
    for (std::size_t i = 0; i < n; ++i) tr += a.left(k).get(i, i);
    t.set(0, k, tr);
  }
  Matrix g(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) g.set_block(i, 0, t * a.left(i));
  return kernel(g);
}

namespace {

// Eigenvalue of f acting on the local corner algebra spanned by `corner`.
Scalar local_eigenvalue(const Algebra& a, const Matrix& corner, const SpanCoords& coords,
                        const Matrix& f) {
  Matrix m = coords.coords(a.left_mult(f) * corner);
  auto factors = minpoly_squarefree(m);
  if (factors.size() != 1 || factors[0].first.degree() != 1) {
    throw RadicalUnavailable("corner algebra is not split local");
  }
  return -factors[0].first.coeff(0);
}

}  // namespace

Matrix radical_by_corners(const Algebra& a) {
  std::size_t nv = a.vertex_count();
  std::vector<Matrix> pieces;
  std::vector<Matrix> diag_rad(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    Matrix c = a.corner(i, i);
    SpanCoords coords(c);
    std::vector<Matrix> nil;
    for (std::size_t k = 0; k < c.cols(); ++k) {
      Matrix f = c.column(k);
      Scalar lambda = local_eigenvalue(a, c, coords, f);
      Matrix n = f;
      n.add_scaled(a.idempotent(i), -lambda);
      nil.push_back(n);
    }
    Matrix r = nil.empty() ? Matrix(a.field(), a.dim(), 0)
                           : column_basis(Matrix::hcat(nil, a.field(), a.dim()));
    if (r.cols() + 1 != c.cols()) throw RadicalUnavailable("corner algebra is not split local");
    diag_rad[i] = r;
    pieces.push_back(r);
  }
  for (std::size_t i = 0; i < nv; ++i) {
    // functionals reading the component of e_i A e_i outside its radical
    Matrix c = a.corner(i, i);
    SpanCoords cc(c);
    Matrix rad_coords = cc.coords(diag_rad[i]);
    Matrix adapted = Matrix::hcat(rad_coords, complement_basis(rad_coords));
    Matrix outside = inverse(adapted)->block(rad_coords.cols(), 0, c.cols() - rad_coords.cols(),
                                             c.cols());
    for (std::size_t j = 0; j < nv; ++j) {
      if (i == j) continue;
      Matrix x = a.corner(i, j);
      if (x.cols() == 0) continue;
      Matrix y = a.corner(j, i);
      // x lies in rad iff x y lies in rad(e_i A e_i) for every y in e_j A e_i
      std::vector<Matrix> rows;
      for (std::size_t s = 0; s < y.cols(); ++s) {
        rows.push_back(outside * cc.coords(a.right_mult(y.column(s)) * x));
      }
      if (rows.empty()) {
        pieces.push_back(x);
        continue;
      }
      Matrix k = kernel(Matrix::vcat(rows, a.field(), x.cols()));
      if (k.cols()) pieces.push_back(x * k);
    }
  }
  if (pieces.empty()) return Matrix(a.field(), a.dim(), 0);
  return column_basis(Matrix::hcat(pieces, a.field(), a.dim()));
}

namespace {

// Columns of `v` extending a basis of span(u) to span(u, v).
std::vector<Matrix> extend_columns(const Matrix& u, const Matrix& v) {
  std::vector<Matrix> out;
  if (v.cols() == 0) return out;
  Echelon e = row_echelon(Matrix::hcat(u, v));
  for (auto c : e.pivots) {
    if (c >= u.cols()) out.push_back(v.column(c - u.cols()));
  }
  return out;
}

Matrix subalgebra_closure(const Algebra& a, const std::vector<Matrix>& gens) {
  Field f = a.field();
  std::vector<Matrix> cols = gens;
  cols.push_back(a.unit());
  Matrix w = column_basis(Matrix::hcat(cols, f, a.dim()));
  for (;;) {
    std::vector<Matrix> more{w};
    for (const auto& g : gens) more.push_back(a.left_mult(g) * w);
    Matrix next = column_basis(Matrix::hcat(more, f, a.dim()));
    if (next.cols() == w.cols()) return w;
    w = next;
  }
}

Matrix intersect_or_empty(const Matrix& u, const Matrix& v, Field f, std::size_t n) {
  if (u.cols() == 0 || v.cols() == 0) return Matrix(f, n, 0);
  return intersect_spaces(u, v);
}

}  // namespace

const Matrix& Algebra::radical() const {
  const AlgebraStructure& s = structure();
  if (!s.radical_known) throw RadicalUnavailable(s.radical_error);
  return s.radical;
}

const AlgebraStructure& Algebra::structure() const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (structure_) return *structure_;
  }
  auto s = std::make_shared<AlgebraStructure>();
  Field f = field();
  std::size_t n = dim(), nv = vertex_count();
  try {
    s->radical = f.is_rational() ? radical_trace_form(*this) : radical_by_corners(*this);
  } catch (const RadicalUnavailable& e) {
    s->radical_known = false;
    s->radical_error = e.what();
    s->radical = Matrix(f, n, 0);
  }

  Matrix power = s->radical;
  for (std::size_t guard = 0; guard <= n + 1; ++guard) {
    s->radical_powers.push_back(power);
    if (power.cols() == 0) break;
    power = span_products(*this, power, s->radical);
  }

  s->vertex_class.assign(nv, 0);
  for (std::size_t i = 0; i < nv; ++i) {
    std::size_t cls = s->class_vertex.size();
    if (s->radical_known) {
      for (std::size_t c = 0; c < s->class_vertex.size() && cls == s->class_vertex.size(); ++c) {
        std::size_t j = s->class_vertex[c];
        Matrix prods = span_products(*this, corner(i, j), corner(j, i));
        if (prods.cols() && !in_span(s->radical, prods)) cls = c;
      }
    }
    if (cls == s->class_vertex.size()) s->class_vertex.push_back(i);
    s->vertex_class[i] = cls;
  }
  s->basic = s->class_vertex.size() == nv;

  // generators: idempotents, then corner elements ordered by radical layer
  std::vector<std::vector<std::pair<Matrix, std::pair<std::size_t, std::size_t>>>> layers(
      s->radical_powers.size() + 1);
  for (std::size_t j = 0; j < nv; ++j) {
    for (std::size_t i = 0; i < nv; ++i) {
      Matrix c = corner(j, i);
      if (c.cols() == 0) continue;
      Matrix upper = c;
      for (std::size_t k = 0; k <= s->radical_powers.size(); ++k) {
        Matrix lower = k < s->radical_powers.size()
                           ? intersect_or_empty(c, s->radical_powers[k], f, n)
                           : Matrix(f, n, 0);
        for (auto& col : extend_columns(lower, upper)) layers[k].push_back({col, {j, i}});
        upper = lower;
        if (upper.cols() == 0) break;
      }
    }
  }
  std::vector<Matrix> gens;
  for (std::size_t v = 0; v < nv; ++v) {
    gens.push_back(idempotent(v));
    s->generator_corner.push_back({v, v});
  }
  Matrix span = n ? subalgebra_closure(*this, gens) : Matrix(f, 0, 0);
  for (auto& layer : layers) {
    for (auto& [g, corner_ji] : layer) {
      if (span.cols() == n) break;
      if (in_span(span, g)) continue;
      gens.push_back(g);
      s->generator_corner.push_back(corner_ji);
      span = subalgebra_closure(*this, gens);
    }
  }
  s->generators = std::move(gens);

  s->arrow_counts.assign(nv, std::vector<std::size_t>(nv, 0));
  if (s->radical_known) {
    Matrix rad2 = s->radical_powers.size() > 1 ? s->radical_powers[1] : Matrix(f, n, 0);
    for (std::size_t i = 0; i < nv; ++i) {
      for (std::size_t j = 0; j < nv; ++j) {
        Matrix c = corner(j, i);
        std::size_t r1 = intersect_or_empty(c, s->radical, f, n).cols();
        std::size_t r2 = intersect_or_empty(c, rad2, f, n).cols();
        s->arrow_counts[i][j] = r1 - r2;
      }
    }
  }

  std::lock_guard<std::mutex> lock(mu_);
  if (!structure_) structure_ = s;
  return *structure_;
}

}  // namespace stabeq
