#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stabeq/module/decompose.hpp"

namespace stabeq {

/// A natural number, infinity, or a lower bound reached at a cap.
struct Bound {
  enum class Kind { exact, infinite, at_least };
  Kind kind = Kind::exact;
  std::size_t value = 0;

  static Bound exact(std::size_t n) { return {Kind::exact, n}; }
  static Bound infinite() { return {Kind::infinite, 0}; }
  static Bound at_least(std::size_t n) { return {Kind::at_least, n}; }
  bool is_exact() const { return kind == Kind::exact; }
  bool is_finite() const { return kind == Kind::exact; }
  std::string to_string() const;
  bool operator==(const Bound& o) const { return kind == o.kind && value == o.value; }
};

bool is_projective(const Module& x);
bool is_injective(const Module& x);

struct Syzygy {
  ProjectiveCover cover;
  Morphism inclusion;  // Omega x -> P
};
Syzygy syzygy_data(const Module& x);
Module syzygy(const Module& x);

struct Cosyzygy {
  InjectiveEnvelope envelope;
  Morphism projection;  // I -> Omega^- x
};
Cosyzygy cosyzygy_data(const Module& x);
Module cosyzygy(const Module& x);

/// Non-projective (resp. non-injective) part of x, up to isomorphism.
Module strip_projectives(const Module& x, std::uint64_t seed = 0);
Module strip_injectives(const Module& x, std::uint64_t seed = 0);

enum class Direction { projective, injective };

struct Resolution {
  Direction direction = Direction::projective;
  /// P_0, P_1, ... (or I^0, I^1, ...).
  std::vector<Module> terms;
  std::vector<std::vector<std::size_t>> vertices;
  /// Projective: P_k -> P_{k-1} for k >= 1, with differentials[0] the
  /// augmentation P_0 -> x. Injective: x -> I^0, then I^k -> I^{k+1}.
  std::vector<Morphism> differentials;
  bool minimal = true;
  bool terminated = false;
  std::size_t cap = 0;
};
Resolution minimal_resolution(const Module& x, Direction direction, std::size_t cap);

Bound projective_dimension(const Module& x, std::size_t cap, std::uint64_t seed = 0);

/// Tr x over the opposite algebra, from a minimal presentation; projective
/// summands of x are discarded first.
Module transpose(const Module& x, std::uint64_t seed = 0);
Module tau(const Module& x, std::uint64_t seed = 0);
Module tau_inverse(const Module& x, std::uint64_t seed = 0);
/// D Hom(x, A).
Module nakayama(const Module& x);

struct ExtSpace {
  Module m;
  Module n;
  Syzygy presentation;
  std::size_t dim = 0;
  /// Maps Omega m -> n whose classes form a basis of Ext^1(m, n).
  std::vector<Morphism> cocycles;
};
ExtSpace ext1(const Module& m, const Module& n);

struct ShortExact {
  Module left;
  Module middle;
  Module right;
  Morphism injection;
  Morphism surjection;
  std::vector<Module> middle_summands;
  /// Dimension of the annihilated subspace the class was taken from.
  std::size_t socle_dimension = 0;

  bool is_exact() const;
  /// True when the surjection has a section.
  bool splits() const;
};

/// The almost split sequence 0 -> tau z -> E -> z -> 0.
ShortExact ar_sequence(const Module& z, std::uint64_t seed = 0);

bool is_node(const Module& s, std::uint64_t seed = 0);

/// Basis of rad End(x) for x with split local endomorphism ring.
std::vector<Matrix> radical_of_endomorphisms(const Module& x);

}  // namespace stabeq
