#include "stabeq/module/decompose.hpp"

#include <random>

#include "stabeq/errors.hpp"
#include "stabeq/linalg/polynomial.hpp"

namespace stabeq {

namespace {

constexpr std::size_t kRandomTrials = 64;
constexpr std::size_t kIsoTrials = 32;

struct Piece {
  Module module;
  Matrix inclusion;
};

Matrix random_combination(const std::vector<Morphism>& basis, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coeff(-50, 50);
  Field f = basis.front().map.field();
  Matrix m(f, basis.front().map.rows(), basis.front().map.cols());
  for (const auto& b : basis) m.add_scaled(b.map, Scalar(f, coeff(rng)));
  return m;
}

Matrix canonical_basis(const Matrix& v) {
  if (v.cols() == 0) return v;
  Echelon e = row_echelon(v.transpose());
  return e.reduced.block(0, 0, e.rank, v.rows()).transpose();
}

// Stable image of g under iteration, im g^n.
Matrix stable_image(const Matrix& g) {
  Matrix v = Matrix::identity(g.field(), g.rows());
  for (;;) {
    Matrix next = canonical_basis(g * v);
    if (next.cols() == v.cols()) return next;
    v = std::move(next);
  }
}

Matrix reduce_to(const Matrix& m, Field p) {
  Matrix out(p, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m.is_zero_at(r, c)) out.set(r, c, Scalar(p, m.get(r, c).rational()));
    }
  }
  return out;
}

// Eigenvalue candidates in the ground field; over Q they are found modulo a
// large prime and reconstructed, so each must still be confirmed exactly.
std::vector<Scalar> eigen_candidates(const Matrix& f) {
  if (f.field().is_prime()) return roots_in_field(minimal_polynomial(f));
  for (std::uint32_t p : {2147483647u, 2147483629u, 2147483587u}) {
    Field fp = Field::prime(p);
    Matrix red;
    try {
      red = reduce_to(f, fp);
    } catch (const InvalidArgument&) {
      continue;
    }
    mpz_class mod = p, bound = 46340;
    std::vector<Scalar> out;
    for (const auto& r : roots_in_field(minimal_polynomial(red))) {
      mpq_class q;
      if (rational_reconstruction(mpz_class(r.residue()), mod, bound, q)) out.emplace_back(f.field(), q);
    }
    return out;
  }
  return {};
}

struct Spectrum {
  /// Generalized eigenspaces, then the part without eigenvalues (if any).
  std::vector<Matrix> pieces;
  /// Set when f minus this scalar is nilpotent.
  std::optional<Scalar> single;
  bool blocked = false;
};

Spectrum spectrum(const Matrix& f) {
  Field fld = f.field();
  std::size_t n = f.rows();
  Matrix id = Matrix::identity(fld, n);
  Spectrum s;
  std::size_t covered = 0;
  std::vector<Matrix> images;
  Scalar last(fld);
  for (const auto& lambda : eigen_candidates(f)) {
    Matrix g = f - id.scaled(lambda);
    if (rank(g) == n) continue;
    Matrix img = stable_image(g);
    Matrix ker = kernel(stable_image(g.transpose()).transpose());
    s.pieces.push_back(ker);
    images.push_back(img);
    covered += ker.cols();
    last = lambda;
  }
  if (covered == n) {
    if (s.pieces.size() == 1) {
      s.pieces.clear();
      s.single = last;
    }
    return s;
  }
  if (covered == 0) {
    // nothing found modulo p: decide exactly
    auto factors = minpoly_squarefree(f);
    if (factors.size() >= 2) {
      for (const auto& factor : factors) {
        Matrix g = factor.first.eval(f);
        s.pieces.push_back(kernel(stable_image(g.transpose()).transpose()));
      }
    } else if (factors.front().first.degree() == 1) {
      s.single = -factors.front().first.coeff(0);
    } else {
      s.blocked = true;
    }
    return s;
  }
  Matrix rest = images.front();
  for (std::size_t k = 1; k < images.size(); ++k) rest = intersect_spaces(rest, images[k]);
  s.pieces.push_back(rest);
  return s;
}

// Fitting pieces of x along f, or empty if f does not split x.
std::vector<Matrix> fitting_kernels(const Matrix& f) {
  Spectrum s = spectrum(f);
  if (s.pieces.size() < 2) return {};
  return s.pieces;
}

bool nilpotent_span(const Matrix& span, std::size_t n) {
  // span: columns are flattened n x n matrices, closed under products
  Field f = span.field();
  if (span.cols() == 0) return true;
  SpanCoords coords(span);
  std::vector<Matrix> mats;
  for (std::size_t k = 0; k < span.cols(); ++k) mats.push_back(Matrix::unflatten(span.column(k), n, n));
  for (const auto& x : mats) {
    for (const auto& y : mats) {
      if (!coords.contains((x * y).flatten())) return false;
    }
  }
  Matrix power = span;
  for (std::size_t step = 0; step <= n; ++step) {
    if (power.cols() == 0) return true;
    std::vector<Matrix> prods;
    for (std::size_t k = 0; k < power.cols(); ++k) {
      Matrix p = Matrix::unflatten(power.column(k), n, n);
      for (const auto& x : mats) prods.push_back((x * p).flatten());
    }
    Matrix next = column_basis(Matrix::hcat(prods, f, n * n));
    if (next.cols() == 0) return true;
    if (next.cols() == power.cols()) return false;
    power = next;
  }
  return false;
}

struct LocalCheck {
  std::vector<Matrix> split;  // non-empty when some basis element splits
  bool local = false;
};

LocalCheck inspect_basis(const Module& x, const std::vector<Morphism>& end) {
  LocalCheck out;
  std::size_t n = x.dim();
  Field f = x.field();
  std::vector<Matrix> nil;
  bool blocked = false;
  for (const auto& e : end) {
    Spectrum s = spectrum(e.map);
    if (s.pieces.size() >= 2) {
      out.split = std::move(s.pieces);
      return out;
    }
    if (!s.single) {
      blocked = true;
      continue;
    }
    nil.push_back((e.map - Matrix::identity(f, n).scaled(*s.single)).flatten());
  }
  if (blocked) return out;
  Matrix span = column_basis(Matrix::hcat(nil, f, n * n));
  out.local = span.cols() + 1 == end.size() && nilpotent_span(span, n);
  return out;
}

}  // namespace

std::size_t Decomposition::count() const {
  std::size_t c = 0;
  for (const auto& s : summands) c += s.multiplicity;
  return c;
}

std::vector<Module> Decomposition::modules() const {
  std::vector<Module> out;
  for (const auto& s : summands) {
    for (std::size_t k = 0; k < s.multiplicity; ++k) out.push_back(s.module);
  }
  return out;
}

std::optional<Scalar> unique_eigenvalue(const Matrix& f) {
  if (f.rows() == 0) return std::nullopt;
  Spectrum s = spectrum(f);
  if (!s.pieces.empty()) return std::nullopt;
  return s.single;
}

bool has_local_endomorphisms(const Module& x) {
  if (x.dim() == 0) return false;
  auto end = hom_space(x, x);
  if (end.size() == 1) return true;
  return inspect_basis(x, end).local;
}

std::optional<Matrix> indecomposable_isomorphism(const Module& x, const Module& y) {
  if (x.dim() != y.dim()) return std::nullopt;
  if (x.dim() == 0) return Matrix(x.field(), 0, 0);
  if (x.dimension_vector() != y.dimension_vector()) return std::nullopt;
  for (const auto& h : hom_space(x, y)) {
    if (is_invertible(h.map)) return h.map;
  }
  return std::nullopt;
}

Decomposition decompose(const Module& x, std::uint64_t seed) {
  Field f = x.field();
  std::mt19937_64 rng(seed);
  std::vector<Piece> todo{{x, Matrix::identity(f, x.dim())}};
  std::vector<Piece> done;
  while (!todo.empty()) {
    Piece p = std::move(todo.back());
    todo.pop_back();
    if (p.module.dim() == 0) continue;
    auto end = hom_space(p.module, p.module);
    if (end.size() == 1) {
      done.push_back(std::move(p));
      continue;
    }
    LocalCheck check = inspect_basis(p.module, end);
    if (check.local) {
      done.push_back(std::move(p));
      continue;
    }
    std::vector<Matrix> kernels = std::move(check.split);
    for (std::size_t t = 0; kernels.empty() && t < kRandomTrials; ++t) {
      kernels = fitting_kernels(random_combination(end, rng));
    }
    if (kernels.empty()) {
      throw NonSplitEndomorphism("module of dimension " + std::to_string(p.module.dim()) +
                                 " has no split endomorphism but is not split local");
    }
    // push in reverse so that pieces come out in factor order
    for (auto it = kernels.rbegin(); it != kernels.rend(); ++it) {
      Morphism inc = submodule(p.module, *it);
      todo.push_back({inc.source, p.inclusion * inc.map});
    }
  }

  Decomposition d;
  d.original = x;
  for (auto& p : done) {
    bool placed = false;
    for (auto& s : d.summands) {
      auto iso = indecomposable_isomorphism(s.module, p.module);
      if (!iso) continue;
      // express the copy in the coordinates of the class representative
      s.inclusions.push_back(p.inclusion * *iso);
      ++s.multiplicity;
      placed = true;
      break;
    }
    if (!placed) d.summands.push_back({p.module, 1, {p.inclusion}, {}});
  }
  std::vector<Matrix> cols;
  for (const auto& s : d.summands) {
    for (const auto& inc : s.inclusions) cols.push_back(inc);
  }
  Matrix cert = Matrix::hcat(cols, f, x.dim());
  auto inv = inverse(cert);
  if (!inv) throw InvalidArgument("decompose: summands do not span the module");
  std::size_t off = 0;
  for (auto& s : d.summands) {
    for (std::size_t k = 0; k < s.multiplicity; ++k) {
      s.projections.push_back(inv->block(off, 0, s.module.dim(), x.dim()));
      off += s.module.dim();
    }
  }
  d.certificate = {direct_sum(x.algebra(), d.modules()).module, x, cert};
  return d;
}

bool is_indecomposable(const Module& x, std::uint64_t seed) {
  if (x.dim() == 0) return false;
  return decompose(x, seed).count() == 1;
}

Morphism summand_sum(const Decomposition& d, const std::vector<bool>& keep) {
  std::vector<Module> parts;
  std::vector<Matrix> incs;
  for (std::size_t s = 0; s < d.summands.size(); ++s) {
    if (!keep[s]) continue;
    for (const auto& inc : d.summands[s].inclusions) {
      parts.push_back(d.summands[s].module);
      incs.push_back(inc);
    }
  }
  Module sum = direct_sum(d.original.algebra(), parts).module;
  return {sum, d.original, Matrix::hcat(incs, d.original.field(), d.original.dim())};
}

IsoResult is_isomorphic(const Module& x, const Module& y, std::uint64_t seed) {
  if (x.dim() != y.dim()) return {};
  if (x.dim() == 0) return {true, Matrix(x.field(), 0, 0)};
  if (x.dimension_vector() != y.dimension_vector()) return {};
  auto hom = hom_space(x, y);
  if (hom.empty()) return {};
  for (const auto& h : hom) {
    if (is_invertible(h.map)) return {true, h.map};
  }
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < kIsoTrials; ++t) {
    Matrix m = random_combination(hom, rng);
    if (is_invertible(m)) return {true, m};
  }
  if (hom.size() != hom_dimension(x, x) || hom.size() != hom_dimension(y, y)) return {};

  Decomposition dx, dy;
  try {
    dx = decompose(x, seed);
    dy = decompose(y, seed);
  } catch (const NonSplitEndomorphism& e) {
    throw Inconclusive(std::string("is_isomorphic: ") + e.what());
  }
  if (dx.summands.size() != dy.summands.size()) return {};
  // block witness: copy k of class s in x goes to a copy of a matching class in y
  Matrix w(x.field(), y.dim(), x.dim());
  std::vector<bool> used(dy.summands.size(), false);
  for (const auto& sx : dx.summands) {
    bool found = false;
    for (std::size_t t = 0; t < dy.summands.size() && !found; ++t) {
      const auto& sy = dy.summands[t];
      if (used[t] || sy.multiplicity != sx.multiplicity) continue;
      auto iso = indecomposable_isomorphism(sx.module, sy.module);
      if (!iso) continue;
      used[t] = true;
      found = true;
      for (std::size_t k = 0; k < sx.multiplicity; ++k) w += sy.inclusions[k] * *iso * sx.projections[k];
    }
    if (!found) return {};
  }
  return {true, w};
}

}  // namespace stabeq
