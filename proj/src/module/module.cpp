#include "stabeq/module/module.hpp"

#include <map>

#include "stabeq/errors.hpp"

namespace stabeq {

namespace {

void require_same(const Module& x, const Module& y, const char* op) {
  if (x.algebra() == y.algebra()) return;
  if (!same_algebra(*x.algebra(), *y.algebra())) {
    throw InvalidArgument(std::string(op) + ": modules over different algebras");
  }
}

// Columns of v not in the span of u, chosen greedily.
Matrix extend_basis(const Matrix& u, const Matrix& v) {
  Field f = v.field();
  if (v.cols() == 0) return Matrix(f, v.rows(), 0);
  Echelon e = row_echelon(Matrix::hcat(u, v));
  std::vector<std::size_t> keep;
  for (auto c : e.pivots) {
    if (c >= u.cols()) keep.push_back(c - u.cols());
  }
  return v.select_columns(keep);
}

}  // namespace

Module::Module(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action)
    : alg_(std::move(algebra)), dim_(dim), cache_(std::make_shared<Cache>()) {
  if (!alg_) throw InvalidArgument("module: null algebra");
  if (action.size() != alg_->dim()) throw InvalidArgument("module: one action matrix per basis element expected");
  for (const auto& m : action) {
    if (m.rows() != dim || m.cols() != dim) throw InvalidArgument("module: action matrix has the wrong shape");
    if (m.field() != alg_->field()) throw FieldMismatch("module: action over another field");
  }
  act_ = std::make_shared<const std::vector<Matrix>>(std::move(action));
}

Module Module::regular(const AlgebraPtr& a) { return Module(a, a->dim(), a->left_matrices()); }

Module Module::zero(const AlgebraPtr& a) {
  return Module(a, 0, std::vector<Matrix>(a->dim(), Matrix(a->field(), 0, 0)));
}

Matrix Module::act(const Matrix& element) const {
  Matrix out(field(), dim_, dim_);
  for (std::size_t i = 0; i < alg_->dim(); ++i) {
    if (!element.is_zero_at(i, 0)) out.add_scaled(action(i), element.get(i, 0));
  }
  return out;
}

bool Module::is_valid() const {
  for (std::size_t i = 0; i < alg_->dim(); ++i) {
    for (std::size_t j = 0; j < alg_->dim(); ++j) {
      if (action(i) * action(j) != act(alg_->left(i).column(j))) return false;
    }
  }
  return act(alg_->unit()).is_identity() || dim_ == 0;
}

const VertexFrame& Module::frame() const {
  std::call_once(cache_->once, [this] {
    VertexFrame& fr = cache_->frame;
    Field f = field();
    std::size_t off = 0;
    for (std::size_t v = 0; v < alg_->vertex_count(); ++v) {
      Matrix piece = dim_ ? column_basis(act(alg_->idempotent(v))) : Matrix(f, 0, 0);
      fr.offsets.push_back(off);
      off += piece.cols();
      fr.pieces.push_back(std::move(piece));
    }
    fr.basis = Matrix::hcat(fr.pieces, f, dim_);
    if (fr.basis.cols() != dim_) throw InvalidArgument("module: idempotents do not decompose the module");
    fr.inverse = dim_ ? *inverse(fr.basis) : Matrix(f, 0, 0);
  });
  return cache_->frame;
}

std::vector<std::size_t> Module::dimension_vector() const {
  std::vector<std::size_t> d;
  for (const auto& p : frame().pieces) d.push_back(p.cols());
  return d;
}

bool Morphism::is_valid() const {
  if (map.rows() != target.dim() || map.cols() != source.dim()) return false;
  for (std::size_t i = 0; i < source.algebra()->dim(); ++i) {
    if (map * source.action(i) != target.action(i) * map) return false;
  }
  return true;
}

bool Morphism::is_injective() const { return rank(map) == source.dim(); }
bool Morphism::is_surjective() const { return rank(map) == target.dim(); }
bool Morphism::is_isomorphism() const {
  return source.dim() == target.dim() && rank(map) == source.dim();
}

Morphism identity_morphism(const Module& x) { return {x, x, Matrix::identity(x.field(), x.dim())}; }

Morphism zero_morphism(const Module& x, const Module& y) {
  return {x, y, Matrix(x.field(), y.dim(), x.dim())};
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (g.source.dim() != f.target.dim()) throw InvalidArgument("compose: shapes do not match");
  return {f.source, g.target, g.map * f.map};
}

std::vector<Morphism> hom_space(const Module& x, const Module& y) {
  require_same(x, y, "hom_space");
  if (x.dim() == 0 || y.dim() == 0) return {};
  const auto& a = x.algebra();
  Field f = a->field();
  const VertexFrame& fx = x.frame();
  const VertexFrame& fy = y.frame();
  std::size_t nv = a->vertex_count();
  std::vector<std::size_t> dx(nv), dy(nv), off(nv);
  std::size_t nvars = 0;
  for (std::size_t v = 0; v < nv; ++v) {
    dx[v] = fx.pieces[v].cols();
    dy[v] = fy.pieces[v].cols();
    off[v] = nvars;
    nvars += dx[v] * dy[v];
  }
  if (nvars == 0) return {};

  const auto& s = a->structure();
  std::vector<Matrix> rows;
  for (std::size_t g = 0; g < s.generators.size(); ++g) {
    auto [j, i] = s.generator_corner[g];
    if (i == j && s.generators[g] == a->idempotent(i)) continue;
    if (dx[i] == 0 && dy[j] == 0) continue;
    Matrix gx = fx.inverse.block(fx.offsets[j], 0, dx[j], x.dim()) * x.act(s.generators[g]) * fx.pieces[i];
    Matrix gy = fy.inverse.block(fy.offsets[j], 0, dy[j], y.dim()) * y.act(s.generators[g]) * fy.pieces[i];
    // H_j gx - gy H_i = 0
    Matrix eq(f, dy[j] * dx[i], nvars);
    for (std::size_t r = 0; r < dy[j]; ++r) {
      for (std::size_t c = 0; c < dx[i]; ++c) {
        std::size_t row = r * dx[i] + c;
        for (std::size_t k = 0; k < dx[j]; ++k) {
          if (!gx.is_zero_at(k, c)) eq.add_to(row, off[j] + r * dx[j] + k, gx.get(k, c));
        }
        for (std::size_t k = 0; k < dy[i]; ++k) {
          if (!gy.is_zero_at(r, k)) eq.add_to(row, off[i] + k * dx[i] + c, -gy.get(r, k));
        }
      }
    }
    rows.push_back(std::move(eq));
  }
  Matrix sol = rows.empty() ? Matrix::identity(f, nvars) : kernel(Matrix::vcat(rows, f, nvars));

  std::vector<Morphism> out;
  for (std::size_t k = 0; k < sol.cols(); ++k) {
    Matrix h(f, y.dim(), x.dim());
    for (std::size_t v = 0; v < nv; ++v) {
      for (std::size_t r = 0; r < dy[v]; ++r) {
        for (std::size_t c = 0; c < dx[v]; ++c) {
          std::size_t var = off[v] + r * dx[v] + c;
          if (!sol.is_zero_at(var, k)) h.set(fy.offsets[v] + r, fx.offsets[v] + c, sol.get(var, k));
        }
      }
    }
    out.push_back({x, y, fy.basis * h * fx.inverse});
  }
  return out;
}

std::size_t hom_dimension(const Module& x, const Module& y) { return hom_space(x, y).size(); }

Morphism submodule(const Module& x, const Matrix& basis) {
  const auto& a = x.algebra();
  Field f = a->field();
  Matrix u = basis.cols() ? column_basis(basis) : Matrix(f, x.dim(), 0);
  std::size_t k = u.cols();
  std::vector<Matrix> act;
  if (k == 0) {
    act.assign(a->dim(), Matrix(f, 0, 0));
  } else {
    SpanCoords sc(u);
    for (std::size_t i = 0; i < a->dim(); ++i) {
      Matrix img = x.action(i) * u;
      if (!sc.contains(img)) throw InvalidArgument("submodule: subspace is not invariant");
      act.push_back(sc.coords(img));
    }
  }
  return {Module(a, k, std::move(act)), x, u};
}

Morphism quotient_module(const Module& x, const Matrix& basis) {
  const auto& a = x.algebra();
  Field f = a->field();
  std::size_t n = x.dim();
  Matrix u = basis.cols() ? column_basis(basis) : Matrix(f, n, 0);
  Matrix c = extend_basis(u, Matrix::identity(f, n));
  std::size_t m = c.cols();
  Matrix pi = m ? inverse(Matrix::hcat(u, c))->block(u.cols(), 0, m, n) : Matrix(f, 0, n);
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < a->dim(); ++i) act.push_back(pi * x.action(i) * c);
  return {x, Module(a, m, std::move(act)), pi};
}

Morphism kernel_of(const Morphism& f) { return submodule(f.source, kernel(f.map)); }

Morphism image_of(const Morphism& f) {
  return submodule(f.target, f.map.cols() ? column_basis(f.map) : Matrix(f.map.field(), f.target.dim(), 0));
}

Morphism cokernel_of(const Morphism& f) {
  return quotient_module(f.target, f.map.cols() ? column_basis(f.map) : Matrix(f.map.field(), f.target.dim(), 0));
}

DirectSum direct_sum(const AlgebraPtr& a, const std::vector<Module>& parts) {
  Field f = a->field();
  std::size_t n = 0;
  for (const auto& p : parts) n += p.dim();
  std::vector<Matrix> act(a->dim(), Matrix(f, n, n));
  DirectSum out;
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < a->dim(); ++i) act[i].set_block(off, off, p.action(i));
    Matrix inc(f, n, p.dim());
    for (std::size_t r = 0; r < p.dim(); ++r) inc.set_int(off + r, r, 1);
    out.projections.push_back(inc.transpose());
    out.inclusions.push_back(std::move(inc));
    off += p.dim();
  }
  out.module = Module(a, n, std::move(act));
  return out;
}

Module dual(const Module& x) {
  std::vector<Matrix> act;
  for (const auto& m : x.actions()) act.push_back(m.transpose());
  return Module(x.algebra()->opposite(), x.dim(), std::move(act));
}

Morphism dual(const Morphism& f) { return {dual(f.target), dual(f.source), f.map.transpose()}; }

RadSocTop radical_socle_top(const Module& x) {
  const auto& a = x.algebra();
  Field f = a->field();
  const Matrix& rad = a->radical();
  std::vector<Matrix> imgs, eqs;
  for (std::size_t k = 0; k < rad.cols(); ++k) {
    Matrix r = x.act(rad.column(k));
    imgs.push_back(r);
    eqs.push_back(std::move(r));
  }
  Matrix rad_x = imgs.empty() ? Matrix(f, x.dim(), 0) : column_basis(Matrix::hcat(imgs, f, x.dim()));
  Matrix soc_x = eqs.empty() ? Matrix::identity(f, x.dim()) : kernel(Matrix::vcat(eqs, f, x.dim()));
  return {submodule(x, rad_x), submodule(x, soc_x), quotient_module(x, rad_x)};
}

ProjectiveSum projective_sum(const AlgebraPtr& a, const std::vector<std::size_t>& vertices) {
  std::map<std::size_t, std::pair<Module, Matrix>> cache;
  ProjectiveSum p;
  std::vector<Module> parts;
  std::size_t off = 0;
  for (auto v : vertices) {
    if (v >= a->vertex_count()) throw InvalidArgument("projective_sum: vertex out of range");
    auto it = cache.find(v);
    if (it == cache.end()) {
      Matrix b = column_basis(a->right_mult(a->idempotent(v)));
      SpanCoords sc(b);
      std::vector<Matrix> act;
      for (std::size_t i = 0; i < a->dim(); ++i) act.push_back(sc.coords(a->left(i) * b));
      Module m(a, b.cols(), std::move(act));
      it = cache.emplace(v, std::make_pair(m, b)).first;
      p.generators.push_back(sc.coords(a->idempotent(v)));
    } else {
      SpanCoords sc(it->second.second);
      p.generators.push_back(sc.coords(a->idempotent(v)));
    }
    p.vertices.push_back(v);
    p.offsets.push_back(off);
    p.basis_in_algebra.push_back(it->second.second);
    parts.push_back(it->second.first);
    off += it->second.first.dim();
  }
  auto ds = direct_sum(a, parts);
  p.module = ds.module;
  for (std::size_t k = 0; k < p.generators.size(); ++k) p.generators[k] = ds.inclusions[k] * p.generators[k];
  return p;
}

Morphism map_from_projective(const ProjectiveSum& p, const Module& y, const std::vector<Matrix>& images) {
  const auto& a = p.module.algebra();
  Field f = a->field();
  if (images.size() != p.vertices.size()) throw InvalidArgument("map_from_projective: one image per summand");
  Matrix m(f, y.dim(), p.module.dim());
  for (std::size_t k = 0; k < images.size(); ++k) {
    // column i of orbit is b_i * y_k
    Matrix orbit(f, y.dim(), a->dim());
    for (std::size_t i = 0; i < a->dim(); ++i) orbit.set_block(0, i, y.action(i) * images[k]);
    m.set_block(0, p.offsets[k], orbit * p.basis_in_algebra[k]);
  }
  return {p.module, y, m};
}

ProjectiveCover projective_cover(const Module& x) {
  const auto& a = x.algebra();
  Field f = a->field();
  const auto& s = a->structure();
  const Matrix& rad = a->radical();
  std::vector<Matrix> imgs;
  for (std::size_t k = 0; k < rad.cols(); ++k) imgs.push_back(x.act(rad.column(k)));
  Matrix rad_x = imgs.empty() ? Matrix(f, x.dim(), 0) : Matrix::hcat(imgs, f, x.dim());

  std::vector<std::size_t> vertices;
  std::vector<Matrix> gens;
  for (auto v : s.class_vertex) {
    Matrix ev = x.act(a->idempotent(v));
    Matrix piece = x.dim() ? column_basis(ev) : Matrix(f, 0, 0);
    if (piece.cols() == 0) continue;
    Matrix ev_rad = rad_x.cols() ? ev * rad_x : Matrix(f, x.dim(), 0);
    Matrix top = extend_basis(ev_rad.cols() ? column_basis(ev_rad) : ev_rad, piece);
    if (top.cols() == 0) continue;
    std::size_t local = a->corner(v, v).cols() - intersect_spaces(a->corner(v, v), rad).cols();
    if (local != 1) throw NonSplitField("projective_cover: top of a projective is not split");
    for (std::size_t c = 0; c < top.cols(); ++c) {
      vertices.push_back(v);
      gens.push_back(top.column(c));
    }
  }
  ProjectiveCover pc;
  pc.projective = projective_sum(a, vertices);
  pc.map = map_from_projective(pc.projective, x, gens);
  return pc;
}

InjectiveEnvelope injective_envelope(const Module& x) {
  ProjectiveCover pc = projective_cover(dual(x));
  Morphism d = dual(pc.map);
  return {{x, d.target, d.map}, pc.projective.vertices};
}

Module projective_module(const AlgebraPtr& a, std::size_t vertex) {
  return projective_sum(a, {vertex}).module;
}

Module simple_module(const AlgebraPtr& a, std::size_t vertex) {
  Module p = projective_module(a, vertex);
  return radical_socle_top(p).top.target;
}

Module injective_module(const AlgebraPtr& a, std::size_t vertex) {
  Module d = dual(projective_module(a->opposite(), vertex));
  if (d.algebra() == a) return d;
  return Module(a, d.dim(), d.actions());
}

StandardModules standard_modules(const AlgebraPtr& a) {
  StandardModules sm;
  for (auto v : a->structure().class_vertex) {
    sm.vertices.push_back(v);
    sm.projectives.push_back(projective_module(a, v));
    sm.simples.push_back(radical_socle_top(sm.projectives.back()).top.target);
    sm.injectives.push_back(injective_module(a, v));
  }
  return sm;
}

}  // namespace stabeq
