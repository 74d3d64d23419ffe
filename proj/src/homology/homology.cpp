#include "stabeq/homology/homology.hpp"

#include "stabeq/errors.hpp"

namespace stabeq {

std::string Bound::to_string() const {
  switch (kind) {
    case Kind::exact: return std::to_string(value);
    case Kind::infinite: return "inf";
    case Kind::at_least: return ">=" + std::to_string(value);
  }
  return {};
}

bool is_projective(const Module& x) {
  return projective_cover(x).projective.module.dim() == x.dim();
}

bool is_injective(const Module& x) {
  return injective_envelope(x).map.target.dim() == x.dim();
}

Syzygy syzygy_data(const Module& x) {
  Syzygy s;
  s.cover = projective_cover(x);
  s.inclusion = kernel_of(s.cover.map);
  return s;
}

Module syzygy(const Module& x) { return syzygy_data(x).inclusion.source; }

Cosyzygy cosyzygy_data(const Module& x) {
  Cosyzygy c;
  c.envelope = injective_envelope(x);
  c.projection = cokernel_of(c.envelope.map);
  return c;
}

Module cosyzygy(const Module& x) { return cosyzygy_data(x).projection.target; }

namespace {

template <class Pred>
Module strip(const Module& x, std::uint64_t seed, Pred drop) {
  if (x.is_zero()) return x;
  Decomposition d = decompose(x, seed);
  std::vector<bool> keep;
  bool all = true;
  for (const auto& s : d.summands) {
    keep.push_back(!drop(s.module));
    all = all && keep.back();
  }
  if (all) return x;
  return summand_sum(d, keep).source;
}

Matrix flatten_all(const std::vector<Matrix>& maps, Field f, std::size_t len) {
  std::vector<Matrix> cols;
  for (const auto& m : maps) cols.push_back(m.flatten());
  return Matrix::hcat(cols, f, len);
}

}  // namespace

Module strip_projectives(const Module& x, std::uint64_t seed) {
  return strip(x, seed, [](const Module& m) { return is_projective(m); });
}

Module strip_injectives(const Module& x, std::uint64_t seed) {
  return strip(x, seed, [](const Module& m) { return is_injective(m); });
}

Resolution minimal_resolution(const Module& x, Direction direction, std::size_t cap) {
  Resolution r;
  r.direction = direction;
  r.cap = cap;
  Module cur = x;
  if (direction == Direction::projective) {
    std::optional<Morphism> prev;
    for (std::size_t k = 0; k < cap && !cur.is_zero(); ++k) {
      ProjectiveCover pc = projective_cover(cur);
      r.terms.push_back(pc.projective.module);
      r.vertices.push_back(pc.projective.vertices);
      if (!prev) {
        r.differentials.push_back(pc.map);
      } else {
        r.differentials.push_back({pc.projective.module, prev->target, prev->map * pc.map.map});
      }
      prev = kernel_of(pc.map);
      cur = prev->source;
    }
  } else {
    std::optional<Morphism> prev;
    for (std::size_t k = 0; k < cap && !cur.is_zero(); ++k) {
      InjectiveEnvelope env = injective_envelope(cur);
      r.terms.push_back(env.map.target);
      r.vertices.push_back(env.vertices);
      if (!prev) {
        r.differentials.push_back(env.map);
      } else {
        r.differentials.push_back({prev->source, env.map.target, env.map.map * prev->map});
      }
      prev = cokernel_of(env.map);
      cur = prev->target;
    }
  }
  r.terminated = cur.is_zero();
  return r;
}

Bound projective_dimension(const Module& x, std::size_t cap, std::uint64_t seed) {
  std::vector<Module> seen;
  Module cur = x;
  for (std::size_t n = 0; n <= cap; ++n) {
    if (cur.is_zero() || is_projective(cur)) return Bound::exact(n);
    for (const auto& s : seen) {
      if (is_isomorphic(s, cur, seed).isomorphic) return Bound::infinite();
    }
    seen.push_back(cur);
    cur = syzygy(cur);
  }
  return Bound::at_least(cap + 1);
}

Module transpose(const Module& x, std::uint64_t seed) {
  const auto& a = x.algebra();
  AlgebraPtr op = a->opposite();
  Module y = strip_projectives(x, seed);
  if (y.is_zero()) return Module::zero(op);
  Syzygy s0 = syzygy_data(y);
  const ProjectiveSum& p0 = s0.cover.projective;
  ProjectiveCover c1 = projective_cover(s0.inclusion.source);
  const ProjectiveSum& p1 = c1.projective;
  Matrix d1 = s0.inclusion.map * c1.map.map;

  ProjectiveSum q0 = projective_sum(op, p0.vertices);
  ProjectiveSum q1 = projective_sum(op, p1.vertices);
  std::vector<SpanCoords> q1_coords;
  for (const auto& b : q1.basis_in_algebra) q1_coords.emplace_back(b);

  std::vector<Matrix> images(p0.vertices.size(), Matrix(a->field(), q1.module.dim(), 1));
  for (std::size_t l = 0; l < p1.vertices.size(); ++l) {
    Matrix col = d1 * p1.generators[l];
    for (std::size_t k = 0; k < p0.vertices.size(); ++k) {
      std::size_t len = p0.basis_in_algebra[k].cols();
      Matrix w = p0.basis_in_algebra[k] * col.block(p0.offsets[k], 0, len, 1);
      images[k].set_block(q1.offsets[l], 0, q1_coords[l].coords(w));
    }
  }
  Morphism d1_star = map_from_projective(q0, q1.module, images);
  return cokernel_of(d1_star).target;
}

Module tau(const Module& x, std::uint64_t seed) { return dual(transpose(x, seed)); }

Module tau_inverse(const Module& x, std::uint64_t seed) { return transpose(dual(x), seed); }

Module nakayama(const Module& x) {
  const auto& a = x.algebra();
  Field f = a->field();
  Module reg = Module::regular(a);
  auto hom = hom_space(x, reg);
  std::vector<Matrix> maps;
  for (const auto& h : hom) maps.push_back(h.map);
  std::size_t len = a->dim() * x.dim();
  std::size_t n = hom.size();
  SpanCoords sc(flatten_all(maps, f, len));
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    if (n == 0) {
      act.emplace_back(f, 0, 0);
      continue;
    }
    Matrix r = a->right_mult(a->basis_vector(i));
    std::vector<Matrix> moved;
    for (const auto& m : maps) moved.push_back(r * m);
    act.push_back(sc.coords(flatten_all(moved, f, len)));
  }
  return dual(Module(a->opposite(), n, std::move(act)));
}

namespace {

// Coordinates of Hom(Omega m, n) modulo maps factoring through P_0.
struct ExtCoords {
  SpanCoords z;
  std::vector<Morphism> z_basis;
  Matrix quotient;  // rows: complement coordinates of Z/B
  std::vector<std::size_t> complement;
};

ExtCoords ext_coords(const Syzygy& pres, const Module& n) {
  Field f = n.field();
  const Module& om = pres.inclusion.source;
  ExtCoords e;
  e.z_basis = hom_space(om, n);
  std::size_t len = n.dim() * om.dim();
  std::size_t zd = e.z_basis.size();
  std::vector<Matrix> zm;
  for (const auto& h : e.z_basis) zm.push_back(h.map);
  e.z = SpanCoords(flatten_all(zm, f, len));
  std::vector<Matrix> bm;
  for (const auto& g : hom_space(pres.cover.projective.module, n)) bm.push_back(g.map * pres.inclusion.map);
  Matrix b = bm.empty() || zd == 0 ? Matrix(f, zd, 0) : column_basis(e.z.coords(flatten_all(bm, f, len)));
  Matrix c = complement_basis(b);
  for (std::size_t k = 0; k < c.cols(); ++k) {
    for (std::size_t r = 0; r < zd; ++r) {
      if (!c.is_zero_at(r, k)) e.complement.push_back(r);
    }
  }
  if (zd > 0) {
    Matrix inv = *inverse(Matrix::hcat(b, c));
    e.quotient = inv.block(b.cols(), 0, c.cols(), zd);
  } else {
    e.quotient = Matrix(f, 0, 0);
  }
  return e;
}

Matrix class_of(const ExtCoords& e, const Matrix& map) { return e.quotient * e.z.coords(map.flatten()); }

// Lift of an endomorphism of z to the syzygy of its presentation.
Matrix lift_to_syzygy(const Syzygy& pres, const Matrix& phi) {
  const ProjectiveSum& p0 = pres.cover.projective;
  const Module& pm = p0.module;
  const Matrix& pi = pres.cover.map.map;
  std::vector<Matrix> images;
  for (std::size_t k = 0; k < p0.vertices.size(); ++k) {
    const auto& a = pm.algebra();
    Matrix ev = pm.act(a->idempotent(p0.vertices[k]));
    Matrix piece = column_basis(ev);
    auto c = solve(pi * piece, phi * pi * p0.generators[k]);
    if (!c) throw InvalidArgument("lift_to_syzygy: endomorphism does not lift");
    images.push_back(piece * *c);
  }
  Matrix lifted = map_from_projective(p0, pm, images).map;
  const Matrix& iota = pres.inclusion.map;
  auto r = solve(iota, lifted * iota);
  if (!r) throw InvalidArgument("lift_to_syzygy: lift does not preserve the syzygy");
  return *r;
}

}  // namespace

ExtSpace ext1(const Module& m, const Module& n) {
  ExtSpace out;
  out.m = m;
  out.n = n;
  out.presentation = syzygy_data(m);
  ExtCoords e = ext_coords(out.presentation, n);
  out.dim = e.complement.size();
  for (auto idx : e.complement) out.cocycles.push_back(e.z_basis[idx]);
  return out;
}

std::vector<Matrix> radical_of_endomorphisms(const Module& x) {
  Field f = x.field();
  std::vector<Matrix> gens;
  for (const auto& h : hom_space(x, x)) {
    auto lambda = unique_eigenvalue(h.map);
    if (!lambda) throw NonSplitEndomorphism("radical_of_endomorphisms: endomorphism ring is not split local");
    Matrix g = h.map - Matrix::identity(f, x.dim()).scaled(*lambda);
    if (!g.is_zero()) gens.push_back(std::move(g));
  }
  if (gens.empty()) return {};
  std::size_t len = x.dim() * x.dim();
  Matrix basis = column_basis(flatten_all(gens, f, len));
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < basis.cols(); ++k) out.push_back(Matrix::unflatten(basis.column(k), x.dim(), x.dim()));
  return out;
}

bool ShortExact::is_exact() const {
  if (middle.dim() != left.dim() + right.dim()) return false;
  if (!injection.is_injective() || !surjection.is_surjective()) return false;
  return (surjection.map * injection.map).is_zero();
}

bool ShortExact::splits() const {
  if (right.is_zero()) return true;
  Field f = right.field();
  auto hom = hom_space(right, middle);
  if (hom.empty()) return false;
  std::vector<Matrix> cols;
  for (const auto& s : hom) cols.push_back(surjection.map * s.map);
  std::size_t len = right.dim() * right.dim();
  Matrix sys = flatten_all(cols, f, len);
  return solve(sys, Matrix::identity(f, right.dim()).flatten()).has_value();
}

ShortExact ar_sequence(const Module& z, std::uint64_t seed) {
  if (z.is_zero() || is_projective(z)) throw InvalidArgument("ar_sequence: the end term must be non-projective");
  Field f = z.field();
  const auto& a = z.algebra();
  Module t = tau(z, seed);
  if (t.algebra() != a) t = Module(a, t.dim(), t.actions());
  Syzygy pres = syzygy_data(z);
  ExtCoords e = ext_coords(pres, t);
  std::size_t d = e.complement.size();
  if (d == 0) throw InvalidArgument("ar_sequence: Ext^1(z, tau z) vanishes");

  std::vector<Matrix> conds;
  for (const auto& phi : radical_of_endomorphisms(z)) {
    Matrix lifted = lift_to_syzygy(pres, phi);
    Matrix block(f, d, d);
    for (std::size_t s = 0; s < d; ++s) block.set_block(0, s, class_of(e, e.z_basis[e.complement[s]].map * lifted));
    conds.push_back(std::move(block));
  }
  for (const auto& psi : radical_of_endomorphisms(t)) {
    Matrix block(f, d, d);
    for (std::size_t s = 0; s < d; ++s) block.set_block(0, s, class_of(e, psi * e.z_basis[e.complement[s]].map));
    conds.push_back(std::move(block));
  }
  Matrix soc = conds.empty() ? Matrix::identity(f, d) : kernel(Matrix::vcat(conds, f, d));
  if (soc.cols() == 0) throw InvalidArgument("ar_sequence: empty socle");
  Matrix h(f, t.dim(), pres.inclusion.source.dim());
  for (std::size_t s = 0; s < d; ++s) {
    if (!soc.is_zero_at(s, 0)) h.add_scaled(e.z_basis[e.complement[s]].map, soc.get(s, 0));
  }

  const Module& p0 = pres.cover.projective.module;
  DirectSum tp = direct_sum(a, {t, p0});
  Matrix rel = Matrix::vcat(h, -pres.inclusion.map);
  Morphism q = quotient_module(tp.module, column_basis(rel));
  ShortExact out;
  out.left = t;
  out.middle = q.target;
  out.right = z;
  out.injection = {t, q.target, q.map * tp.inclusions[0]};
  Matrix rhs = pres.cover.map.map * tp.projections[1];
  auto x = solve(q.map.transpose(), rhs.transpose());
  if (!x) throw InvalidArgument("ar_sequence: pushout map is not well defined");
  out.surjection = {q.target, z, x->transpose()};
  out.socle_dimension = soc.cols();
  out.middle_summands = out.middle.is_zero() ? std::vector<Module>{} : decompose(out.middle, seed).modules();
  return out;
}

bool is_node(const Module& s, std::uint64_t seed) {
  if (s.is_zero()) return false;
  if (radical_socle_top(s).radical.source.dim() != 0) return false;
  if (!is_indecomposable(s, seed)) return false;
  if (is_projective(s) || is_injective(s)) return false;
  ShortExact seq = ar_sequence(tau_inverse(s, seed), seed);
  for (const auto& m : seq.middle_summands) {
    if (!is_projective(m)) return false;
  }
  return true;
}

}  // namespace stabeq
