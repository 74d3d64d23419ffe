#include "stabeq/module/endomorphism.hpp"

#include "stabeq/errors.hpp"

namespace stabeq {

EndomorphismAlgebra endomorphism_algebra_full(const Module& x, std::uint64_t seed) {
  Field f = x.field();
  EndomorphismAlgebra out;
  out.decomposition = decompose(x, seed);
  for (const auto& h : hom_space(x, x)) out.basis.push_back(h.map);
  std::vector<Matrix> idem;
  for (const auto& s : out.decomposition.summands) {
    for (std::size_t k = 0; k < s.multiplicity; ++k) idem.push_back(s.inclusions[k] * s.projections[k]);
  }
  if (out.basis.empty()) {
    out.algebra = Algebra::zero(f);
    return out;
  }
  auto a = matrix_subalgebra(f, out.basis, idem, "endomorphism");
  AlgebraData d = a->data();
  d.vertex_names.clear();
  for (std::size_t v = 0; v < idem.size(); ++v) d.vertex_names.push_back(std::to_string(v + 1));
  out.algebra = Algebra::create(std::move(d));
  return out;
}

AlgebraPtr endomorphism_algebra(const Module& x, std::uint64_t seed) {
  return endomorphism_algebra_full(x, seed).algebra;
}

AlgebraPtr complete_idempotents(const AlgebraPtr& a, std::uint64_t seed) {
  if (a->dim() == 0) return a;
  Decomposition d = decompose(Module::regular(a), seed);
  AlgebraData data = a->data();
  data.idempotents.clear();
  data.vertex_names.clear();
  for (const auto& s : d.summands) {
    for (std::size_t k = 0; k < s.multiplicity; ++k) {
      data.idempotents.push_back(s.inclusions[k] * (s.projections[k] * a->unit()));
      data.vertex_names.push_back(std::to_string(data.idempotents.size()));
    }
  }
  return Algebra::create(std::move(data));
}

AlgebraPtr centralizer_algebra(const Matrix& c, std::uint64_t seed) {
  if (c.rows() != c.cols()) throw NotSquare("centralizer_algebra: matrix is not square");
  Field f = c.field();
  std::size_t n = c.rows();
  // unknown a, row-major: (c a - a c)[r][s] = sum_k c[r][k] a[k][s] - a[r][k] c[k][s]
  Matrix eq(f, n * n, n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!c.is_zero_at(r, k)) eq.add_to(r * n + s, k * n + s, c.get(r, k));
        if (!c.is_zero_at(k, s)) eq.add_to(r * n + s, r * n + k, -c.get(k, s));
      }
    }
  }
  Matrix sol = kernel(eq);
  std::vector<Matrix> basis;
  for (std::size_t k = 0; k < sol.cols(); ++k) basis.push_back(Matrix::unflatten(sol.column(k), n, n));
  auto a = matrix_subalgebra(f, basis, {}, "centralizer");
  try {
    return complete_idempotents(a, seed);
  } catch (const NonSplitEndomorphism& e) {
    throw NonSplitField(std::string("centralizer_algebra: ") + e.what());
  }
}

Ideal trace_ideal(const AlgebraPtr& a, const Module& s) {
  Field f = a->field();
  std::vector<Matrix> imgs;
  for (const auto& h : hom_space(s, Module::regular(a))) imgs.push_back(h.map);
  if (imgs.empty()) return zero_ideal(a);
  return {a, column_basis(Matrix::hcat(imgs, f, a->dim()))};
}

}  // namespace stabeq
