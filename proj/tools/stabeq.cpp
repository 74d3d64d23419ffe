#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "stabeq/errors.hpp"
#include "stabeq/invariants/report.hpp"
#include "stabeq/io/algebra_file.hpp"
#include "stabeq/io/paper_suite.hpp"
#include "stabeq/module/endomorphism.hpp"
#include "stabeq/surgery/surgery.hpp"

using namespace stabeq;
using nlohmann::json;

namespace {

constexpr int kExact = 0;
constexpr int kError = 1;
constexpr int kCapped = 2;

struct Config {
  Caps caps;
  std::string format = "md";
  std::string field;

  std::optional<Field> field_override() const {
    if (field.empty()) return std::nullopt;
    return Field::parse(field);
  }
  bool json_output() const { return format == "json"; }
};

void emit(const Config& cfg, const json& j, const std::string& md) {
  if (cfg.json_output()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << md;
  }
}

int cmd_invariants(const Config& cfg, const std::string& path) {
  AlgebraPtr a = parse_algebra_file(path, cfg.field_override(), cfg.caps.seed);
  InvariantReport r = stable_profile(a, cfg.caps);
  emit(cfg, to_json(r), to_markdown(r));
  return r.all_exact() ? kExact : kCapped;
}

int cmd_remove_nodes(const Config& cfg, const std::string& path, const std::string& out) {
  AlgebraPtr a = parse_algebra_file(path, cfg.field_override(), cfg.caps.seed);
  SurgeryResult r = remove_nodes(a, cfg.caps);
  auto checks = verify_surgery(r);
  emit(cfg, to_json(r, checks), to_markdown(r, checks));
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw ParseError(out + ": cannot write file");
    f << serialize_algebra(r.output).dump(2) << "\n";
  }
  int code = kExact;
  for (const auto& c : checks) {
    if (c.verdict == Verdict::fail) return kError;
    if (c.verdict == Verdict::indeterminate) code = kCapped;
  }
  return code;
}

int cmd_compare(const Config& cfg, const std::string& left, const std::string& right) {
  InvariantReport a = stable_profile(parse_algebra_file(left, cfg.field_override(), cfg.caps.seed), cfg.caps);
  InvariantReport b = stable_profile(parse_algebra_file(right, cfg.field_override(), cfg.caps.seed), cfg.caps);
  Comparison c = compare_profiles(a, b);
  json j = to_json(c);
  j["left"] = to_json(a);
  j["right"] = to_json(b);
  std::string md = "## " + left + " vs " + right + "\n\n" + to_markdown(c);
  emit(cfg, j, md);
  if (!c.consistent()) return kError;
  return a.all_exact() && b.all_exact() ? kExact : kCapped;
}

int cmd_centralizer(const Config& cfg, const std::string& matrix_text, const std::string& out) {
  Field f = cfg.field_override().value_or(Field::rationals());
  json rows;
  try {
    rows = json::parse(matrix_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("matrix: ") + e.what());
  }
  AlgebraPtr a = centralizer_algebra(parse_matrix(rows, f), cfg.caps.seed);
  InvariantReport r = stable_profile(a, cfg.caps);
  json j = to_json(r);
  j["basic"] = a->structure().basic;
  j["semisimple"] = a->is_semisimple();
  std::string md = "centralizer of " + rows.dump() + ": dimension " + std::to_string(a->dim()) +
                   (a->structure().basic ? ", basic" : ", not basic") +
                   (a->is_semisimple() ? ", semisimple" : "") + "\n\n" + to_markdown(r);
  emit(cfg, j, md);
  if (!out.empty()) {
    std::ofstream file(out);
    if (!file) throw ParseError(out + ": cannot write file");
    file << serialize_algebra(a).dump(2) << "\n";
  }
  return r.all_exact() ? kExact : kCapped;
}

int cmd_paper_suite(const Config& cfg, const std::string& dir) {
  SuiteResult r = run_paper_suite(dir, cfg.caps, cfg.field_override());
  emit(cfg, to_json(r), to_markdown(r));
  return r.passed() ? kExact : kError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable-equivalence invariants of finite-dimensional algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--cap-resolution", cfg.caps.resolution, "Maximum resolution length")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--cap-registry", cfg.caps.registry, "Maximum number of indecomposable classes")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--cap-dim", cfg.caps.dim, "Maximum dimension of a registry module")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--cap-del", cfg.caps.del, "Maximum delooping depth")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", cfg.caps.seed, "Seed for randomized splitting")->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "md"}))
      ->capture_default_str();
  app.add_option("--field", cfg.field, "Override the field: Q or Fp:<p>");

  std::string path, other, out, matrix;
  std::string fixtures = STABEQ_FIXTURE_DIR;

  auto* inv = app.add_subcommand("invariants", "Report the stable invariants of an algebra");
  inv->add_option("file", path, "Algebra description")->required()->check(CLI::ExistingFile);

  auto* rm = app.add_subcommand("remove-nodes", "Remove nodes by the triangular matrix construction");
  rm->add_option("file", path, "Algebra description")->required()->check(CLI::ExistingFile);
  rm->add_option("-o,--output", out, "Write the node-free algebra here");

  auto* cmp = app.add_subcommand("compare", "Compare the invariants of two algebras");
  cmp->add_option("left", path, "First algebra")->required()->check(CLI::ExistingFile);
  cmp->add_option("right", other, "Second algebra")->required()->check(CLI::ExistingFile);

  auto* cen = app.add_subcommand("centralizer", "Centralizer algebra of a square matrix");
  cen->add_option("matrix", matrix, "Rows as JSON, e.g. [[0,1],[0,0]]")->required();
  cen->add_option("-o,--output", out, "Write the algebra here");

  auto* suite = app.add_subcommand("paper-suite", "Run the bundled example assertions");
  suite->add_option("--fixtures", fixtures, "Fixture directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExact : kError;
  }

  try {
    if (inv->parsed()) return cmd_invariants(cfg, path);
    if (rm->parsed()) return cmd_remove_nodes(cfg, path, out);
    if (cmp->parsed()) return cmd_compare(cfg, path, other);
    if (cen->parsed()) return cmd_centralizer(cfg, matrix, out);
    if (suite->parsed()) return cmd_paper_suite(cfg, fixtures);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
