#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "stabeq/algebra/algebra.hpp"

namespace stabeq {

/// Builds an algebra from its JSON description: "field", optional "name",
/// "path_order" (only "left-to-right") and exactly one of "quiver",
/// "structure_constants" or "centralizer". `field` overrides the file's field.
/// Errors name the offending field (ParseError).
AlgebraPtr parse_algebra(const nlohmann::json& j, std::optional<Field> field = std::nullopt, std::uint64_t seed = 0);
AlgebraPtr parse_algebra_file(const std::string& path, std::optional<Field> field = std::nullopt,
                              std::uint64_t seed = 0);

/// Square matrix from rows of exact scalars.
Matrix parse_matrix(const nlohmann::json& rows, Field field, const std::string& where = "matrix");

/// Structure-constant form; parse_algebra of the result reproduces the
/// constants, unit, idempotents and vertex names exactly.
nlohmann::json serialize_algebra(const AlgebraPtr& a);

nlohmann::json read_json_file(const std::string& path);

}  // namespace stabeq
