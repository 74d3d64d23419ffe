#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stabeq/module/module.hpp"

namespace stabeq {

struct Summand {
  Module module;
  std::size_t multiplicity = 0;
  /// One embedding into the original module per copy.
  std::vector<Matrix> inclusions;
  std::vector<Matrix> projections;
};

struct Decomposition {
  Module original;
  std::vector<Summand> summands;
  /// Direct sum of all copies (in summand order) -> original; invertible.
  Morphism certificate;

  std::size_t count() const;
  /// All copies flattened, in certificate order.
  std::vector<Module> modules() const;
};

/// Fitting splitting along endomorphisms (hom basis first, then seeded
/// random combinations). Throws NonSplitEndomorphism when no split is found
/// and the split-local certificate fails.
Decomposition decompose(const Module& x, std::uint64_t seed = 0);
bool is_indecomposable(const Module& x, std::uint64_t seed = 0);

/// Split-local endomorphism ring certificate for x (End = k + nilpotent ideal).
bool has_local_endomorphisms(const Module& x);

struct IsoResult {
  bool isomorphic = false;
  /// Invertible intertwiner x -> y when isomorphic.
  std::optional<Matrix> witness;
};

/// Throws Inconclusive only if no invertible combination is found and the
/// decomposition fallback itself fails.
IsoResult is_isomorphic(const Module& x, const Module& y, std::uint64_t seed = 0);
/// Both inputs indecomposable: an invertible hom-basis element exists iff
/// isomorphic.
std::optional<Matrix> indecomposable_isomorphism(const Module& x, const Module& y);

/// The scalar c with f - c nilpotent, if there is one in the ground field.
std::optional<Scalar> unique_eigenvalue(const Matrix& f);

/// Direct sum of the summands of `d` accepted by `keep`, with the
/// corresponding inclusion into the original.
Morphism summand_sum(const Decomposition& d, const std::vector<bool>& keep);

}  // namespace stabeq
