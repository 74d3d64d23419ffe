#include "stabeq/invariants/report.hpp"

#include <sstream>

#include "stabeq/surgery/nodes.hpp"

namespace stabeq {

bool InvariantReport::all_exact() const {
  for (const Value* v : {&del, &phi_dim, &psi_dim, &findim, &dd, &nu_dd}) {
    if (v->status != Status::exact) return false;
  }
  return registry_closed && frobenius.registry_closed;
}

namespace {

std::string vertex_name(const AlgebraPtr& a, std::size_t v) {
  const auto& names = a->vertex_names();
  return v < names.size() ? names[v] : std::to_string(v + 1);
}

std::vector<std::string> names_of(const AlgebraPtr& a, const std::vector<std::size_t>& vs) {
  std::vector<std::string> out;
  for (auto v : vs) out.push_back(vertex_name(a, v));
  return out;
}

bool at_least_one(const Value& v) {
  if (v.status == Status::unavailable || v.status == Status::upper_bound) return false;
  return v.bound.kind == Bound::Kind::infinite || v.bound.value >= 1;
}

}  // namespace

InvariantReport stable_profile(const AlgebraPtr& a, const Caps& caps) {
  InvariantReport r;
  r.algebra = a->name();
  r.field = a->field().to_string();
  r.dim = a->dim();
  r.caps = caps;
  r.simples = a->structure().class_vertex.size();
  r.nonprojective_simples = nonprojective_simple_count(a);
  for (const auto& n : find_nodes(a, caps.seed)) r.nodes.push_back(vertex_name(a, n.vertex));

  IndecRegistry reg = enumerate_indecomposables(a, caps);
  r.registry_closed = reg.closed();
  if (reg.closed()) r.indecomposables = reg.size();
  DeloopingResult del = delooping_level(reg, caps.del);
  r.del = del.del;
  for (const auto& [v, val] : del.per_simple) r.del_per_simple.emplace_back(vertex_name(a, v), val);
  PhiPsi pp = phi_psi_dim(reg);
  r.phi_dim = pp.phi;
  r.psi_dim = pp.psi;
  r.findim = finitistic_dimension_bound(reg);

  DominantDimensions dd = dominant_dimensions(a, caps);
  r.dd = dd.dd;
  r.nu_dd = dd.nu_dd;
  r.projective_injective = names_of(a, projective_injectives(a));

  FrobeniusPart fp = frobenius_part(a, caps.seed);
  r.nu_stably_projective = names_of(a, fp.stp_vertices);
  r.frobenius.dim = fp.algebra->dim();
  if (fp.algebra->dim() > 0) {
    const Quiver& q = fp.quiver.quiver;
    r.frobenius.vertices = q.vertices;
    for (const auto& arrow : q.arrows) r.frobenius.arrows.emplace_back(q.vertices[arrow.source], q.vertices[arrow.target]);
    IndecRegistry freg = enumerate_indecomposables(fp.algebra, caps);
    r.frobenius.registry_closed = freg.closed();
    r.frobenius.classes = freg.size();
    r.frobenius.nonprojective_classes = freg.nonprojective_ids().size();
  } else {
    r.frobenius.registry_closed = true;
  }
  return r;
}

bool Comparison::consistent() const {
  for (const auto& row : rows) {
    if (row.expected && !row.agree) return false;
  }
  return true;
}

Comparison compare_profiles(const InvariantReport& a, const InvariantReport& b) {
  Comparison c;
  auto add = [&](std::string name, const std::string& l, const std::string& r, bool expected, std::string note) {
    c.rows.push_back({std::move(name), l, r, l == r, expected, std::move(note)});
  };
  bool node_free = a.nodes.empty() && b.nodes.empty();
  std::string node_note = node_free ? "both node-free: equal under stable equivalence"
                                    : "node present: no-node theorem not applicable";
  add("nonprojective_simples", std::to_string(a.nonprojective_simples), std::to_string(b.nonprojective_simples), true,
      "Auslander-Reiten conjecture prediction");
  add("del", a.del.to_string(), b.del.to_string(), node_free, node_note);
  add("phi_dim", a.phi_dim.to_string(), b.phi_dim.to_string(), node_free, node_note);
  add("psi_dim", a.psi_dim.to_string(), b.psi_dim.to_string(), node_free, node_note);

  bool positive = at_least_one(a.nu_dd) && at_least_one(b.nu_dd);
  bool frob_closed = a.frobenius.registry_closed && b.frobenius.registry_closed;
  add("frobenius_nonprojective_classes", std::to_string(a.frobenius.nonprojective_classes),
      std::to_string(b.frobenius.nonprojective_classes), positive && frob_closed,
      positive ? "nu-dd >= 1 on both: Frobenius parts stably equivalent" : "nu-dd 0 on one side: informational");
  add("nu_dd", a.nu_dd.to_string(), b.nu_dd.to_string(), false, "informational");
  add("dd", a.dd.to_string(), b.dd.to_string(), false, "informational");
  add("findim", a.findim.to_string(), b.findim.to_string(), false, "informational");
  add("simples", std::to_string(a.simples), std::to_string(b.simples), false, "informational");
  add("nodes", std::to_string(a.nodes.size()), std::to_string(b.nodes.size()), false, "informational");
  return c;
}

nlohmann::json to_json(const Value& v) {
  nlohmann::json j;
  if (v.status == Status::unavailable) {
    j["value"] = nullptr;
  } else if (v.bound.kind == Bound::Kind::infinite) {
    j["value"] = "inf";
  } else {
    j["value"] = v.bound.value;
  }
  Status s = v.bound.kind == Bound::Kind::at_least ? Status::lower_bound : v.status;
  j["status"] = to_string(s);
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

nlohmann::json to_json(const InvariantReport& r) {
  nlohmann::json j;
  j["schema"] = 1;
  j["algebra"] = r.algebra;
  j["field"] = r.field;
  j["dim"] = r.dim;
  j["counts"] = {{"simples", r.simples},
                 {"nonprojective_simples", r.nonprojective_simples},
                 {"indecomposables", r.indecomposables ? nlohmann::json(*r.indecomposables) : nlohmann::json()}};
  j["registry"] = r.registry_closed ? "closed" : "capped";
  j["nodes"] = r.nodes;
  j["del"] = to_json(r.del);
  nlohmann::json per = nlohmann::json::object();
  for (const auto& [name, v] : r.del_per_simple) per[name] = to_json(v);
  j["del_per_simple"] = per;
  j["phi_dim"] = to_json(r.phi_dim);
  j["psi_dim"] = to_json(r.psi_dim);
  j["findim_lower_bound"] = to_json(r.findim);
  j["dd"] = to_json(r.dd);
  j["nu_dd"] = to_json(r.nu_dd);
  j["nu_stably_projective"] = r.nu_stably_projective;
  j["projective_injective"] = r.projective_injective;
  nlohmann::json arrows = nlohmann::json::array();
  for (const auto& [s, t] : r.frobenius.arrows) arrows.push_back({{"source", s}, {"target", t}});
  j["frobenius_part"] = {{"dim", r.frobenius.dim},
                         {"vertices", r.frobenius.vertices},
                         {"arrows", arrows},
                         {"registry", r.frobenius.registry_closed ? "closed" : "capped"},
                         {"classes", r.frobenius.classes},
                         {"nonprojective_classes", r.frobenius.nonprojective_classes}};
  j["caps"] = {{"resolution", r.caps.resolution},
               {"registry", r.caps.registry},
               {"dim", r.caps.dim},
               {"del", r.caps.del}};
  j["seed"] = r.caps.seed;
  return j;
}

nlohmann::json to_json(const Comparison& c) {
  nlohmann::json j;
  j["schema"] = 1;
  j["consistent"] = c.consistent();
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : c.rows) {
    rows.push_back({{"invariant", row.invariant},
                    {"left", row.left},
                    {"right", row.right},
                    {"agree", row.agree},
                    {"expected", row.expected},
                    {"note", row.note}});
  }
  j["rows"] = rows;
  return j;
}

namespace {

std::string join(const std::vector<std::string>& xs, const std::string& wrap = {}) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + (wrap.empty() ? x : wrap + "(" + x + ")");
  return out.empty() ? "-" : out;
}

}  // namespace

std::string to_markdown(const InvariantReport& r) {
  std::ostringstream os;
  os << "## " << (r.algebra.empty() ? "algebra" : r.algebra) << " over " << r.field << "\n\n";
  os << "| invariant | value | status |\n|---|---|---|\n";
  auto row = [&](const char* name, const Value& v) {
    Status s = v.bound.kind == Bound::Kind::at_least ? Status::lower_bound : v.status;
    os << "| " << name << " | " << v.to_string() << " | " << to_string(s) << " |\n";
  };
  auto plain = [&](const char* name, const std::string& v) { os << "| " << name << " | " << v << " | exact |\n"; };
  plain("dimension", std::to_string(r.dim));
  plain("simples", std::to_string(r.simples));
  plain("non-projective simples", std::to_string(r.nonprojective_simples));
  os << "| indecomposables | " << (r.indecomposables ? std::to_string(*r.indecomposables) : "unknown") << " | "
     << (r.registry_closed ? "closed" : "capped") << " |\n";
  plain("nodes", join(r.nodes, "S"));
  row("del", r.del);
  row("phi-dim", r.phi_dim);
  row("psi-dim", r.psi_dim);
  row("findim (lower bound)", r.findim);
  row("dd", r.dd);
  row("nu-dd", r.nu_dd);
  plain("nu-stably projective", join(r.nu_stably_projective, "P"));
  plain("projective-injective", join(r.projective_injective, "P"));
  std::vector<std::string> arrows;
  for (const auto& [s, t] : r.frobenius.arrows) arrows.push_back(s + "->" + t);
  os << "| Frobenius part | dim " << r.frobenius.dim << ", arrows " << join(arrows) << ", "
     << r.frobenius.nonprojective_classes << " non-projective classes | "
     << (r.frobenius.registry_closed ? "closed" : "capped") << " |\n";
  return os.str();
}

std::string to_markdown(const Comparison& c) {
  std::ostringstream os;
  os << "| invariant | left | right | agree | expected | note |\n|---|---|---|---|---|---|\n";
  for (const auto& row : c.rows) {
    os << "| " << row.invariant << " | " << row.left << " | " << row.right << " | " << (row.agree ? "yes" : "no")
       << " | " << (row.expected ? "yes" : "no") << " | " << row.note << " |\n";
  }
  os << "\nconsistent: " << (c.consistent() ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace stabeq
