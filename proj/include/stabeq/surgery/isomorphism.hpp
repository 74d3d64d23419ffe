#pragma once

#include <cstdint>
#include <optional>

#include "stabeq/algebra/algebra.hpp"

namespace stabeq {

/// Exact check that `phi` (b.dim() x a.dim()) is a unital algebra
/// isomorphism a -> b.
bool is_algebra_isomorphism(const AlgebraPtr& a, const AlgebraPtr& b, const Matrix& phi);

/// Searches for an isomorphism of basic algebras: vertex bijections matching
/// the arrow counts, then seeded choices of images for the generators in the
/// matching radical corners. Every returned map is verified exactly.
std::optional<Matrix> find_isomorphism(const AlgebraPtr& a, const AlgebraPtr& b, std::uint64_t seed = 0,
                                       std::size_t trials = 16);

}  // namespace stabeq
