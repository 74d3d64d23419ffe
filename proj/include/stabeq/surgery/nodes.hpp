#pragma once

#include <cstdint>
#include <vector>

#include "stabeq/homology/homology.hpp"

namespace stabeq {

struct Node {
  std::size_t vertex = 0;
  Module simple;
};

/// Simples (one per isomorphism class) that are nodes.
std::vector<Node> find_nodes(const AlgebraPtr& a, std::uint64_t seed = 0);

/// Simples that are not projective, one per isomorphism class.
std::size_t nonprojective_simple_count(const AlgebraPtr& a);

}  // namespace stabeq
