#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stabeq/algebra/algebra.hpp"

namespace stabeq {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  std::optional<std::size_t> vertex_index(const std::string& name) const;
  std::optional<std::size_t> arrow_index(const std::string& name) const;
  /// Throws InvalidArgument on duplicate names or dangling endpoints.
  void validate() const;
};

/// A linear combination of walks; each walk lists arrow names in the order
/// they are traversed.
struct RelationTerm {
  Scalar coeff;
  std::vector<std::string> walk;
};

struct Relation {
  std::vector<RelationTerm> terms;
};

struct QuiverOptions {
  std::size_t max_length = 64;
  std::size_t max_paths = 100000;
};

/// kQ/I with basis the surviving walks. The product of basis walks x*y is
/// "walk y, then walk x", so Ae_v is spanned by walks starting at v.
AlgebraPtr algebra_from_quiver(const Quiver& q, const std::vector<Relation>& relations, Field field,
                               const QuiverOptions& options = {}, std::string name = {});

/// Convenience: relations that are single walks (monomial relations).
Relation zero_relation(Field field, std::vector<std::string> walk);

}  // namespace stabeq
