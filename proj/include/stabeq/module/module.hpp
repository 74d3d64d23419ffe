#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "stabeq/algebra/algebra.hpp"

namespace stabeq {

/// Bases of the pieces e_v X, concatenated into an invertible change of
/// basis. Homomorphisms are block diagonal in these coordinates.
struct VertexFrame {
  std::vector<Matrix> pieces;
  std::vector<std::size_t> offsets;
  Matrix basis;
  Matrix inverse;
};

/// Finite-dimensional left module: one action matrix per algebra basis
/// element. Copies share the action data.
class Module {
 public:
  Module() = default;
  Module(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action);

  static Module regular(const AlgebraPtr& a);
  static Module zero(const AlgebraPtr& a);

  const AlgebraPtr& algebra() const { return alg_; }
  Field field() const { return alg_->field(); }
  std::size_t dim() const { return dim_; }
  bool is_zero() const { return dim_ == 0; }
  const Matrix& action(std::size_t i) const { return (*act_)[i]; }
  const std::vector<Matrix>& actions() const { return *act_; }
  /// Action of an arbitrary algebra element given by coordinates.
  Matrix act(const Matrix& element) const;

  /// Exact check of the module axioms.
  bool is_valid() const;

  const VertexFrame& frame() const;
  /// dim e_v X for every vertex.
  std::vector<std::size_t> dimension_vector() const;

 private:
  struct Cache {
    std::once_flag once;
    VertexFrame frame;
  };
  AlgebraPtr alg_;
  std::size_t dim_ = 0;
  std::shared_ptr<const std::vector<Matrix>> act_;
  std::shared_ptr<Cache> cache_;
};

/// A module homomorphism; `map` is target.dim() x source.dim().
struct Morphism {
  Module source;
  Module target;
  Matrix map;

  bool is_valid() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const;
};

Morphism identity_morphism(const Module& x);
Morphism zero_morphism(const Module& x, const Module& y);
/// g after f.
Morphism compose(const Morphism& g, const Morphism& f);

/// Basis of Hom_A(x, y).
std::vector<Morphism> hom_space(const Module& x, const Module& y);
std::size_t hom_dimension(const Module& x, const Module& y);

/// Submodule spanned by the columns of `basis` (must be invariant); returns
/// the inclusion.
Morphism submodule(const Module& x, const Matrix& basis);
/// Quotient by the invariant subspace spanned by `basis`; returns the projection.
Morphism quotient_module(const Module& x, const Matrix& basis);
Morphism kernel_of(const Morphism& f);
Morphism image_of(const Morphism& f);
Morphism cokernel_of(const Morphism& f);

struct DirectSum {
  Module module;
  std::vector<Matrix> inclusions;
  std::vector<Matrix> projections;
};
DirectSum direct_sum(const AlgebraPtr& a, const std::vector<Module>& parts);

/// Module over the opposite algebra with transposed actions.
Module dual(const Module& x);
/// D f : D y -> D x.
Morphism dual(const Morphism& f);

struct RadSocTop {
  Morphism radical;  // inclusion rad X -> X
  Morphism socle;    // inclusion soc X -> X
  Morphism top;      // projection X -> top X
};
RadSocTop radical_socle_top(const Module& x);

/// Sum of projectives A e_v, one per listed vertex.
struct ProjectiveSum {
  Module module;
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> offsets;
  /// Basis of each A e_v inside A, as columns.
  std::vector<Matrix> basis_in_algebra;
  /// Coordinates of the generator e_v of each summand.
  std::vector<Matrix> generators;
};
ProjectiveSum projective_sum(const AlgebraPtr& a, const std::vector<std::size_t>& vertices);
/// The homomorphism sending the k-th generator to images[k] (a column in
/// e_{v_k} Y).
Morphism map_from_projective(const ProjectiveSum& p, const Module& y, const std::vector<Matrix>& images);

struct ProjectiveCover {
  ProjectiveSum projective;
  Morphism map;  // P -> X, surjective with kernel in rad P
};
ProjectiveCover projective_cover(const Module& x);

struct InjectiveEnvelope {
  Morphism map;  // X -> I, injective
  std::vector<std::size_t> vertices;
};
InjectiveEnvelope injective_envelope(const Module& x);

struct StandardModules {
  /// One entry per isomorphism class of indecomposable projectives.
  std::vector<std::size_t> vertices;
  std::vector<Module> simples;
  std::vector<Module> projectives;
  std::vector<Module> injectives;
};
StandardModules standard_modules(const AlgebraPtr& a);
Module simple_module(const AlgebraPtr& a, std::size_t vertex);
Module projective_module(const AlgebraPtr& a, std::size_t vertex);
Module injective_module(const AlgebraPtr& a, std::size_t vertex);

}  // namespace stabeq
