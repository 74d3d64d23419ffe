#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "stabeq/algebra/constructions.hpp"
#include "stabeq/invariants/registry.hpp"
#include "stabeq/surgery/nodes.hpp"

namespace stabeq {

struct SurgeryRecord {
  bool node_free = false;
  std::size_t nonprojective_simples_before = 0;
  std::size_t nonprojective_simples_after = 0;
  bool frobenius_closed_before = false;
  bool frobenius_closed_after = false;
  std::size_t frobenius_classes_before = 0;
  std::size_t frobenius_classes_after = 0;
};

struct SurgeryResult {
  AlgebraPtr input;
  std::vector<Node> nodes;
  /// Trace of the nodes in A, and its left annihilator.
  Ideal trace;
  Ideal annihilator;
  AlgebraPtr output;
  /// Empty when the input has no nodes.
  bool performed = false;
  SurgeryRecord record;
};

/// The triangular matrix algebra [[A/I, 0], [I, A/J]] with product
/// (x, i, y)(x', i', y') = (x x', i x' + y i', y y').
AlgebraPtr triangular_surgery_algebra(const Ideal& trace, const Ideal& annihilator, std::uint64_t seed = 0);

SurgeryResult remove_nodes(const AlgebraPtr& a, const Caps& caps = {});

enum class Verdict { pass, fail, indeterminate };
const char* to_string(Verdict v);

struct Check {
  std::string name;
  Verdict verdict = Verdict::indeterminate;
  std::string detail;
};
std::vector<Check> verify_surgery(const SurgeryResult& r);

nlohmann::json to_json(const SurgeryResult& r, const std::vector<Check>& checks);
std::string to_markdown(const SurgeryResult& r, const std::vector<Check>& checks);

}  // namespace stabeq
