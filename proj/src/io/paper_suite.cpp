#include "stabeq/io/paper_suite.hpp"

#include <filesystem>
#include <map>
#include <sstream>

#include "stabeq/algebra/constructions.hpp"
#include "stabeq/errors.hpp"
#include "stabeq/homology/homology.hpp"
#include "stabeq/invariants/report.hpp"
#include "stabeq/io/algebra_file.hpp"
#include "stabeq/module/endomorphism.hpp"
#include "stabeq/surgery/isomorphism.hpp"
#include "stabeq/surgery/surgery.hpp"

namespace stabeq {

using nlohmann::json;

std::size_t SuiteResult::failures() const {
  std::size_t n = 0;
  for (const auto& a : assertions) n += !a.pass;
  return n;
}

namespace {

std::string join(const std::vector<std::string>& xs) {
  std::string out = "[";
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + xs[k];
  return out + "]";
}

std::string render(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  if (j.is_array()) {
    std::vector<std::string> xs;
    for (const auto& x : j) xs.push_back(render(x));
    return join(xs);
  }
  return j.dump();
}

std::string render(bool b) { return b ? "true" : "false"; }
std::string render(std::size_t n) { return std::to_string(n); }

using Lookup = std::map<std::string, std::string>;

Lookup profile_values(const InvariantReport& r) {
  Lookup m;
  m["dim"] = render(r.dim);
  m["del"] = r.del.to_string();
  m["phi_dim"] = r.phi_dim.to_string();
  m["psi_dim"] = r.psi_dim.to_string();
  m["findim"] = r.findim.to_string();
  m["dd"] = r.dd.to_string();
  m["nu_dd"] = r.nu_dd.to_string();
  m["nodes"] = join(r.nodes);
  m["simples"] = render(r.simples);
  m["nonprojective_simples"] = render(r.nonprojective_simples);
  m["indecomposables"] = r.indecomposables ? render(*r.indecomposables) : "unknown";
  m["nu_stably_projective"] = join(r.nu_stably_projective);
  m["projective_injective"] = join(r.projective_injective);
  m["frobenius_dim"] = render(r.frobenius.dim);
  m["frobenius_arrows"] = render(r.frobenius.arrows.size());
  std::size_t loops = 0;
  for (const auto& [s, t] : r.frobenius.arrows) loops += s == t;
  m["frobenius_loops"] = render(loops);
  m["frobenius_nonprojective_classes"] =
      r.frobenius.registry_closed ? render(r.frobenius.nonprojective_classes) : "unknown";
  return m;
}

class Runner {
 public:
  Runner(std::string dir, const Caps& caps, std::optional<Field> field)
      : dir_(std::move(dir)), caps_(caps), field_(field) {}

  void check(const std::string& name, const std::string& expected, const std::string& actual) {
    out_.assertions.push_back({name, expected, actual, expected == actual});
  }

  void check_all(const std::string& prefix, const json& expected, const Lookup& actual) {
    for (const auto& [key, value] : expected.items()) {
      if (value.is_object()) continue;
      auto it = actual.find(key);
      check(prefix + "." + key, render(value), it == actual.end() ? "no such value" : it->second);
    }
  }

  AlgebraPtr load(const std::string& name) {
    auto it = cache_.find(name);
    if (it != cache_.end()) return it->second;
    AlgebraPtr a = parse_algebra_file((std::filesystem::path(dir_) / (name + ".json")).string(), field_, caps_.seed);
    cache_[name] = a;
    return a;
  }

  template <class F>
  void guarded(const std::string& name, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(name + ".load", "ok", e.what());
    }
  }

  void fixtures(const json& spec) {
    for (const auto& [name, expected] : spec.items()) {
      guarded(name, [&] { check_all(name, expected, profile_values(stable_profile(load(name), caps_))); });
    }
  }

  void surgeries(const json& spec) {
    for (const auto& [name, expected] : spec.items()) {
      guarded("surgery." + name, [&] {
        SurgeryResult r = remove_nodes(load(name), caps_);
        Lookup m;
        m["trace_dim"] = render(r.trace.dim());
        m["annihilator_dim"] = render(r.annihilator.dim());
        m["output_dim"] = render(r.output->dim());
        json values = expected;
        values.erase("isomorphic_to");
        check_all("surgery." + name, values, m);
        for (const auto& c : verify_surgery(r)) {
          check("surgery." + name + "." + c.name, "pass", to_string(c.verdict));
        }
        if (expected.contains("isomorphic_to")) {
          std::string target = expected["isomorphic_to"].get<std::string>();
          auto phi = find_isomorphism(r.output, load(target), caps_.seed);
          bool ok = phi && is_algebra_isomorphism(r.output, load(target), *phi);
          check("surgery." + name + ".isomorphic_to", target, ok ? target : "no isomorphism found");
        }
        if (expected.contains("output")) {
          check_all("surgery." + name + ".output", expected["output"], profile_values(stable_profile(r.output, caps_)));
        }
      });
    }
  }

  void centralizers(const json& spec) {
    Field f = field_ ? *field_ : Field::rationals();
    for (const auto& entry : spec) {
      std::string name = "centralizer." + entry.value("name", std::string("matrix"));
      guarded(name, [&] {
        AlgebraPtr a = centralizer_algebra(parse_matrix(entry.at("matrix"), f), caps_.seed);
        Lookup m;
        m["dim"] = render(a->dim());
        m["semisimple"] = render(a->is_semisimple());
        m["basic"] = render(a->structure().basic);
        m["simples"] = render(a->structure().class_vertex.size());
        if (a->structure().basic) {
          std::size_t loops = 0;
          auto counts = radical_and_gabriel_quiver(a).arrow_counts;
          for (std::size_t v = 0; v < counts.size(); ++v) loops += counts[v][v];
          m["loops"] = render(loops);
        }
        if (entry.contains("del") || entry.contains("phi_dim")) {
          Lookup p = profile_values(stable_profile(a, caps_));
          m["del"] = p["del"];
          m["phi_dim"] = p["phi_dim"];
        }
        json rest = entry;
        rest.erase("name");
        rest.erase("matrix");
        check_all(name, rest, m);
      });
    }
  }

  void self_injective(const json& spec) {
    guarded("self_injective", [&] {
      auto n = spec.at("loop_length").get<std::size_t>();
      Field f = field_ ? *field_ : Field::rationals();
      Quiver q;
      q.vertices = {"1"};
      q.arrows = {{"t", 0, 0}};
      Relation rel;
      rel.terms.push_back({Scalar(f, 1), std::vector<std::string>(n, "t")});
      AlgebraPtr a = algebra_from_quiver(q, {rel}, f);
      Module reg = Module::regular(a);
      Module s = simple_module(a, 0);
      AlgebraPtr e1 = endomorphism_algebra(direct_sum(a, {reg, s}).module, caps_.seed);
      AlgebraPtr e2 = endomorphism_algebra(direct_sum(a, {reg, tau(s, caps_.seed)}).module, caps_.seed);
      Lookup p1 = profile_values(stable_profile(e1, caps_));
      Lookup p2 = profile_values(stable_profile(e2, caps_));
      json values = spec;
      values.erase("loop_length");
      check_all("self_injective.End(A+X)", values, p1);
      check_all("self_injective.End(A+DTrX)", values, p2);
      check("self_injective.del agrees", p1["del"], p2["del"]);
      check("self_injective.phi_dim agrees", p1["phi_dim"], p2["phi_dim"]);
    });
  }

  SuiteResult run() {
    out_.field = field_ ? field_->to_string() : "file";
    json expected;
    try {
      expected = read_json_file((std::filesystem::path(dir_) / "expected.json").string());
    } catch (const std::exception& e) {
      check("expected.load", "ok", e.what());
      return out_;
    }
    if (expected.contains("fixtures")) fixtures(expected["fixtures"]);
    if (expected.contains("surgery")) surgeries(expected["surgery"]);
    if (expected.contains("centralizers")) centralizers(expected["centralizers"]);
    if (expected.contains("self_injective")) self_injective(expected["self_injective"]);
    return out_;
  }

 private:
  std::string dir_;
  Caps caps_;
  std::optional<Field> field_;
  std::map<std::string, AlgebraPtr> cache_;
  SuiteResult out_;
};

}  // namespace

SuiteResult run_paper_suite(const std::string& fixture_dir, const Caps& caps, std::optional<Field> field) {
  return Runner(fixture_dir, caps, field).run();
}

json to_json(const SuiteResult& r) {
  json j;
  j["schema"] = 1;
  j["field"] = r.field;
  j["passed"] = r.passed();
  j["failures"] = r.failures();
  json rows = json::array();
  for (const auto& a : r.assertions) {
    rows.push_back({{"name", a.name}, {"expected", a.expected}, {"actual", a.actual}, {"pass", a.pass}});
  }
  j["assertions"] = rows;
  return j;
}

std::string to_markdown(const SuiteResult& r) {
  std::ostringstream os;
  os << "| assertion | expected | actual | result |\n|---|---|---|---|\n";
  for (const auto& a : r.assertions) {
    os << "| " << a.name << " | " << a.expected << " | " << a.actual << " | " << (a.pass ? "pass" : "FAIL") << " |\n";
  }
  os << "\n" << r.assertions.size() - r.failures() << "/" << r.assertions.size() << " assertions passed\n";
  return os.str();
}

}  // namespace stabeq
