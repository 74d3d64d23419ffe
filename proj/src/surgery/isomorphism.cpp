#include "stabeq/surgery/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace stabeq {

bool is_algebra_isomorphism(const AlgebraPtr& a, const AlgebraPtr& b, const Matrix& phi) {
  if (phi.rows() != b->dim() || phi.cols() != a->dim() || a->dim() != b->dim()) return false;
  if (!is_invertible(phi)) return false;
  if (phi * a->unit() != b->unit()) return false;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    if (phi * a->left(i) != b->left_mult(phi.column(i)) * phi) return false;
  }
  return true;
}

namespace {

std::optional<Matrix> try_images(const AlgebraPtr& a, const AlgebraPtr& b, const std::vector<Matrix>& gen_images) {
  Field f = a->field();
  const auto& gens = a->structure().generators;
  std::size_t nv = a->vertex_count();
  std::vector<Matrix> xs, ys;
  Matrix span(f, a->dim(), 0);
  auto push = [&](const Matrix& x, const Matrix& y) {
    Matrix s = Matrix::hcat(span, x);
    if (rank(s) == span.cols()) return;
    span = std::move(s);
    xs.push_back(x);
    ys.push_back(y);
  };
  for (std::size_t v = 0; v < nv; ++v) push(gens[v], gen_images[v]);
  for (std::size_t k = 0; k < xs.size() && span.cols() < a->dim(); ++k) {
    for (std::size_t g = nv; g < gens.size(); ++g) {
      Matrix x = a->product(gens[g], xs[k]);
      if (x.is_zero()) continue;
      push(x, b->product(gen_images[g], ys[k]));
    }
  }
  if (span.cols() != a->dim()) return std::nullopt;
  auto inv = inverse(span);
  if (!inv) return std::nullopt;
  Matrix phi = Matrix::hcat(ys, f, b->dim()) * *inv;
  if (!is_algebra_isomorphism(a, b, phi)) return std::nullopt;
  return phi;
}

}  // namespace

std::optional<Matrix> find_isomorphism(const AlgebraPtr& a, const AlgebraPtr& b, std::uint64_t seed,
                                       std::size_t trials) {
  if (a->field() != b->field() || a->dim() != b->dim() || a->vertex_count() != b->vertex_count()) return std::nullopt;
  if (a->dim() == 0) return Matrix(a->field(), 0, 0);
  const auto& sa = a->structure();
  const auto& sb = b->structure();
  if (!sa.basic || !sb.basic || !sa.radical_known || !sb.radical_known) return std::nullopt;
  Field f = a->field();
  std::size_t nv = a->vertex_count();
  const Matrix& rad_b = b->radical();

  std::vector<std::size_t> sigma(nv);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool match = true;
    for (std::size_t i = 0; i < nv && match; ++i) {
      for (std::size_t j = 0; j < nv && match; ++j) {
        match = sa.arrow_counts[i][j] == sb.arrow_counts[sigma[i]][sigma[j]];
      }
    }
    if (!match) continue;
    std::vector<Matrix> targets;
    for (std::size_t g = nv; g < sa.generators.size(); ++g) {
      auto [j, i] = sa.generator_corner[g];
      Matrix corner = b->corner(sigma[j], sigma[i]);
      targets.push_back(corner.cols() && rad_b.cols() ? intersect_spaces(corner, rad_b) : Matrix(f, b->dim(), 0));
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff(-3, 3);
    for (std::size_t t = 0; t < trials; ++t) {
      std::vector<Matrix> images;
      for (std::size_t v = 0; v < nv; ++v) images.push_back(b->idempotent(sigma[v]));
      bool ok = true;
      for (const auto& space : targets) {
        if (space.cols() == 0) {
          ok = false;
          break;
        }
        Matrix c(f, space.cols(), 1);
        for (std::size_t k = 0; k < space.cols(); ++k) c.set_int(k, 0, t == 0 ? 1 : coeff(rng));
        images.push_back(space * c);
      }
      if (!ok) break;
      if (auto phi = try_images(a, b, images)) return phi;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::nullopt;
}

}  // namespace stabeq
