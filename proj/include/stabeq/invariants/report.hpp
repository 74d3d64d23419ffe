#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "stabeq/invariants/invariants.hpp"

namespace stabeq {

struct FrobeniusSummary {
  std::size_t dim = 0;
  std::vector<std::string> vertices;
  /// (source, target) vertex names of the Gabriel quiver arrows.
  std::vector<std::pair<std::string, std::string>> arrows;
  bool registry_closed = false;
  std::size_t classes = 0;
  std::size_t nonprojective_classes = 0;
};

struct InvariantReport {
  std::string algebra;
  std::string field;
  std::size_t dim = 0;
  std::size_t simples = 0;
  std::size_t nonprojective_simples = 0;
  bool registry_closed = false;
  std::optional<std::size_t> indecomposables;
  std::vector<std::string> nodes;
  Value del;
  std::vector<std::pair<std::string, Value>> del_per_simple;
  Value phi_dim;
  Value psi_dim;
  Value findim;
  Value dd;
  Value nu_dd;
  std::vector<std::string> nu_stably_projective;
  std::vector<std::string> projective_injective;
  FrobeniusSummary frobenius;
  Caps caps;

  /// True when every value is exact.
  bool all_exact() const;
};

InvariantReport stable_profile(const AlgebraPtr& a, const Caps& caps = {});

struct ComparisonRow {
  std::string invariant;
  std::string left;
  std::string right;
  bool agree = false;
  /// Whether a theorem forces agreement for stably equivalent inputs,
  /// given the computed hypotheses.
  bool expected = false;
  std::string note;
};

struct Comparison {
  std::vector<ComparisonRow> rows;
  /// No row that is expected to agree disagrees.
  bool consistent() const;
};

Comparison compare_profiles(const InvariantReport& a, const InvariantReport& b);

nlohmann::json to_json(const Value& v);
nlohmann::json to_json(const InvariantReport& r);
nlohmann::json to_json(const Comparison& c);
std::string to_markdown(const InvariantReport& r);
std::string to_markdown(const Comparison& c);

}  // namespace stabeq
