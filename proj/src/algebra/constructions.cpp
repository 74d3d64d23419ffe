#include "stabeq/algebra/constructions.hpp"

#include "stabeq/errors.hpp"

namespace stabeq {

bool Ideal::contains(const Matrix& elements) const {
  if (basis.cols() == 0) return elements.is_zero();
  return in_span(basis, elements);
}

bool Ideal::is_left_ideal() const {
  for (std::size_t k = 0; k < algebra->dim(); ++k) {
    if (!contains(algebra->left(k) * basis)) return false;
  }
  return true;
}

bool Ideal::is_right_ideal() const {
  for (std::size_t k = 0; k < algebra->dim(); ++k) {
    if (!contains(algebra->right_mult(algebra->basis_vector(k)) * basis)) return false;
  }
  return true;
}

Ideal zero_ideal(const AlgebraPtr& a) { return {a, Matrix(a->field(), a->dim(), 0)}; }

Ideal whole_algebra(const AlgebraPtr& a) { return {a, Matrix::identity(a->field(), a->dim())}; }

Ideal generated_ideal(const AlgebraPtr& a, const Matrix& elements) {
  Field f = a->field();
  std::size_t n = a->dim();
  Matrix span = elements.cols() ? column_basis(elements) : Matrix(f, n, 0);
  for (;;) {
    std::vector<Matrix> more{span};
    for (std::size_t k = 0; k < n; ++k) {
      more.push_back(a->left(k) * span);
      more.push_back(a->right_mult(a->basis_vector(k)) * span);
    }
    Matrix next = column_basis(Matrix::hcat(more, f, n));
    if (next.cols() == span.cols()) return {a, span};
    span = next;
  }
}

Ideal product_ideal(const Ideal& left, const Ideal& right) {
  return {left.algebra, span_products(*left.algebra, left.basis, right.basis)};
}

Ideal radical_ideal(const AlgebraPtr& a) { return {a, a->radical()}; }

Ideal left_annihilator(const Ideal& i) {
  const auto& a = i.algebra;
  if (i.dim() == 0) return whole_algebra(a);
  std::vector<Matrix> rows;
  for (std::size_t s = 0; s < i.dim(); ++s) rows.push_back(a->right_mult(i.basis.column(s)));
  return {a, kernel(Matrix::vcat(rows, a->field(), a->dim()))};
}

Quotient quotient(const Ideal& i) {
  const auto& a = i.algebra;
  Field f = a->field();
  std::size_t n = a->dim();
  Echelon e = row_echelon(Matrix::hcat(i.basis, Matrix::identity(f, n)));
  std::vector<std::size_t> keep;
  for (auto c : e.pivots) {
    if (c >= i.dim()) keep.push_back(c - i.dim());
  }
  std::size_t m = keep.size();
  Matrix lift = Matrix::identity(f, n).select_columns(keep);
  Matrix adapted = Matrix::hcat(i.basis, lift);
  Matrix projection = inverse(adapted)->block(i.dim(), 0, m, n);

  AlgebraData d;
  d.field = f;
  d.provenance = "quotient";
  d.name = a->name().empty() ? std::string() : a->name() + "/I";
  for (auto k : keep) d.labels.push_back(a->labels()[k]);
  for (std::size_t x = 0; x < m; ++x) {
    d.left.push_back(projection * a->left(keep[x]) * lift);
  }
  d.unit = projection * a->unit();
  for (std::size_t v = 0; v < a->vertex_count(); ++v) {
    Matrix ev = projection * a->idempotent(v);
    if (ev.is_zero()) continue;
    d.idempotents.push_back(ev);
    d.vertex_names.push_back(a->vertex_names()[v]);
  }
  if (m == 0) d.unit = Matrix(f, 0, 1);
  return {Algebra::create(std::move(d)), projection, lift};
}

AlgebraPtr quotient_algebra(const Ideal& i) { return quotient(i).algebra; }

GabrielQuiver radical_and_gabriel_quiver(const AlgebraPtr& a) {
  const auto& s = a->structure();
  if (!s.radical_known) throw RadicalUnavailable(s.radical_error);
  if (!s.basic) throw NotBasic("algebra has isomorphic indecomposable projectives");
  GabrielQuiver g;
  g.radical = s.radical;
  g.arrow_counts = s.arrow_counts;
  g.quiver.vertices = a->vertex_names();
  std::size_t nv = a->vertex_count();
  for (std::size_t i = 0; i < nv; ++i) {
    for (std::size_t j = 0; j < nv; ++j) {
      for (std::size_t k = 0; k < s.arrow_counts[i][j]; ++k) {
        std::string nm = "a" + g.quiver.vertices[i] + "_" + g.quiver.vertices[j];
        if (s.arrow_counts[i][j] > 1) nm += "_" + std::to_string(k + 1);
        g.quiver.arrows.push_back({nm, i, j});
      }
    }
  }
  return g;
}

AlgebraPtr opposite_algebra(const AlgebraPtr& a) { return a->opposite(); }

AlgebraPtr matrix_subalgebra(Field field, const std::vector<Matrix>& basis_matrices,
                             const std::vector<Matrix>& idempotent_matrices,
                             std::string provenance, std::string name) {
  if (basis_matrices.empty()) return Algebra::zero(field);
  std::size_t n = basis_matrices.front().rows();
  std::size_t m = basis_matrices.size();
  std::vector<Matrix> flat;
  for (const auto& b : basis_matrices) flat.push_back(b.flatten());
  SpanCoords coords(Matrix::hcat(flat, field, n * n));
  auto to_coords = [&](const Matrix& x) {
    Matrix c = x.flatten();
    if (!coords.contains(c)) throw InvalidArgument("matrix_subalgebra: span not closed under products");
    return coords.coords(c);
  };
  AlgebraData d;
  d.field = field;
  d.provenance = std::move(provenance);
  d.name = std::move(name);
  for (std::size_t i = 0; i < m; ++i) {
    d.labels.push_back("b" + std::to_string(i + 1));
    Matrix li(field, m, m);
    for (std::size_t j = 0; j < m; ++j) li.set_block(0, j, to_coords(basis_matrices[i] * basis_matrices[j]));
    d.left.push_back(std::move(li));
  }
  d.unit = to_coords(Matrix::identity(field, n));
  if (idempotent_matrices.empty()) {
    d.idempotents.push_back(d.unit);
  } else {
    for (const auto& e : idempotent_matrices) d.idempotents.push_back(to_coords(e));
  }
  return Algebra::create(std::move(d));
}

namespace {

AlgebraPtr matrix_unit_algebra(Field field, std::size_t n, bool lower_only, std::string provenance) {
  std::vector<Matrix> basis, idem;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (lower_only && i < j) continue;
      Matrix e(field, n, n);
      e.set_int(i, j, 1);
      basis.push_back(e);
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      if (i == j) idem.push_back(e);
    }
  }
  auto a = matrix_subalgebra(field, basis, idem, std::move(provenance));
  AlgebraData d = a->data();
  d.labels = std::move(labels);
  return Algebra::create(std::move(d));
}

}  // namespace

AlgebraPtr lower_triangular_algebra(Field field, std::size_t n) {
  return matrix_unit_algebra(field, n, true, "triangular-matrices");
}

AlgebraPtr full_matrix_algebra(Field field, std::size_t n) {
  return matrix_unit_algebra(field, n, false, "full-matrices");
}

}  // namespace stabeq
