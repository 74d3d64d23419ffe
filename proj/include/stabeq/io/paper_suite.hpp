#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "stabeq/invariants/registry.hpp"

namespace stabeq {

struct Assertion {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct SuiteResult {
  std::string field;
  std::vector<Assertion> assertions;
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

/// Checks every entry of `<dir>/expected.json` against the pipeline.
/// A fixture that fails to load yields a failing "<name>.load" assertion.
SuiteResult run_paper_suite(const std::string& fixture_dir, const Caps& caps = {},
                            std::optional<Field> field = std::nullopt);

nlohmann::json to_json(const SuiteResult& r);
std::string to_markdown(const SuiteResult& r);

}  // namespace stabeq
