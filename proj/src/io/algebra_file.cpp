#include "stabeq/io/algebra_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "stabeq/algebra/quiver.hpp"
#include "stabeq/errors.hpp"
#include "stabeq/module/endomorphism.hpp"

namespace stabeq {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string text(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

const json& array(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

Scalar scalar(const json& j, Field f, const std::string& where) {
  std::string s;
  if (j.is_string()) {
    s = j.get<std::string>();
  } else if (j.is_number_integer()) {
    s = std::to_string(j.get<long long>());
  } else {
    fail(where, "expected an exact scalar (integer or string like \"3/2\")");
  }
  try {
    return Scalar::parse(f, s);
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

std::size_t index(const json& j, std::size_t bound, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    fail(where, "expected a non-negative index");
  }
  auto v = j.get<std::size_t>();
  if (v >= bound) fail(where, "index " + std::to_string(v) + " out of range");
  return v;
}

Matrix vector_of(const json& j, Field f, std::size_t n, const std::string& where) {
  array(j, where);
  if (j.size() != n) fail(where, "expected " + std::to_string(n) + " entries");
  Matrix v(f, n, 1);
  for (std::size_t k = 0; k < n; ++k) v.set(k, 0, scalar(j[k], f, where + "[" + std::to_string(k) + "]"));
  return v;
}

AlgebraPtr from_quiver(const json& q, Field f, std::string name) {
  const std::string where = "quiver";
  Quiver quiver;
  const json& vs = array(member(q, "vertices", where), where + ".vertices");
  std::set<std::string> seen;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    std::string v = text(vs[k], where + ".vertices[" + std::to_string(k) + "]");
    if (!seen.insert(v).second) fail(where + ".vertices", "duplicate vertex '" + v + "'");
    quiver.vertices.push_back(v);
  }
  const json as = q.value("arrows", json::array());
  array(as, where + ".arrows");
  std::set<std::string> arrow_names;
  for (std::size_t k = 0; k < as.size(); ++k) {
    std::string w = where + ".arrows[" + std::to_string(k) + "]";
    std::string name_k = text(member(as[k], "name", w), w + ".name");
    std::string s = text(member(as[k], "source", w), w + ".source");
    std::string t = text(member(as[k], "target", w), w + ".target");
    auto si = quiver.vertex_index(s), ti = quiver.vertex_index(t);
    if (!si) fail(w + ".source", "unknown vertex '" + s + "'");
    if (!ti) fail(w + ".target", "unknown vertex '" + t + "'");
    if (!arrow_names.insert(name_k).second) fail(w + ".name", "duplicate arrow '" + name_k + "'");
    quiver.arrows.push_back({name_k, *si, *ti});
  }
  std::vector<Relation> rels;
  const json rs = q.value("relations", json::array());
  array(rs, where + ".relations");
  for (std::size_t r = 0; r < rs.size(); ++r) {
    std::string wr = where + ".relations[" + std::to_string(r) + "]";
    Relation rel;
    for (std::size_t t = 0; t < array(rs[r], wr).size(); ++t) {
      std::string wt = wr + "[" + std::to_string(t) + "]";
      const json& term = rs[r][t];
      RelationTerm rt{scalar(term.value("coeff", json(1)), f, wt + ".coeff"), {}};
      const json& path = array(member(term, "path", wt), wt + ".path");
      std::optional<std::size_t> prev;
      for (std::size_t k = 0; k < path.size(); ++k) {
        std::string wp = wt + ".path[" + std::to_string(k) + "]";
        std::string arrow = text(path[k], wp);
        auto ai = quiver.arrow_index(arrow);
        if (!ai) fail(wp, "unknown arrow '" + arrow + "'");
        if (prev && quiver.arrows[*prev].target != quiver.arrows[*ai].source) {
          fail(wp, "arrow '" + arrow + "' does not start where '" + quiver.arrows[*prev].name + "' ends");
        }
        prev = ai;
        rt.walk.push_back(arrow);
      }
      if (rt.walk.size() < 2) fail(wt + ".path", "relation paths need length at least 2");
      rel.terms.push_back(std::move(rt));
    }
    rels.push_back(std::move(rel));
  }
  try {
    return algebra_from_quiver(quiver, rels, f, {}, std::move(name));
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidArgument& e) {
    fail(where + ".relations", e.what());
  }
}

AlgebraPtr from_constants(const json& s, Field f, std::string name) {
  const std::string where = "structure_constants";
  const json& basis = array(member(s, "basis", where), where + ".basis");
  std::size_t n = basis.size();
  AlgebraData d;
  d.field = f;
  for (std::size_t k = 0; k < n; ++k) d.labels.push_back(text(basis[k], where + ".basis[" + std::to_string(k) + "]"));
  d.left.assign(n, Matrix(f, n, n));
  const json& prods = array(member(s, "products", where), where + ".products");
  for (std::size_t p = 0; p < prods.size(); ++p) {
    std::string w = where + ".products[" + std::to_string(p) + "]";
    if (!prods[p].is_array() || prods[p].size() != 4) fail(w, "expected [i, j, k, coefficient]");
    std::size_t i = index(prods[p][0], n, w + "[0]");
    std::size_t j = index(prods[p][1], n, w + "[1]");
    std::size_t k = index(prods[p][2], n, w + "[2]");
    d.left[i].add_to(k, j, scalar(prods[p][3], f, w + "[3]"));
  }
  d.unit = vector_of(member(s, "unit", where), f, n, where + ".unit");
  const json& idem = array(member(s, "idempotents", where), where + ".idempotents");
  for (std::size_t k = 0; k < idem.size(); ++k) {
    d.idempotents.push_back(vector_of(idem[k], f, n, where + ".idempotents[" + std::to_string(k) + "]"));
  }
  if (s.contains("vertices")) {
    const json& vs = array(s["vertices"], where + ".vertices");
    if (vs.size() != idem.size()) fail(where + ".vertices", "one name per idempotent");
    for (std::size_t k = 0; k < vs.size(); ++k) {
      d.vertex_names.push_back(text(vs[k], where + ".vertices[" + std::to_string(k) + "]"));
    }
  } else {
    for (std::size_t k = 0; k < idem.size(); ++k) d.vertex_names.push_back(std::to_string(k + 1));
  }
  d.provenance = "structure constants";
  d.name = std::move(name);
  AlgebraPtr a;
  try {
    a = Algebra::create(std::move(d));
  } catch (const Error& e) {
    fail(where, e.what());
  }
  if (!a->is_associative()) fail(where + ".products", "structure constants are not associative");
  return a;
}

}  // namespace

Matrix parse_matrix(const json& rows, Field f, const std::string& where) {
  array(rows, where);
  std::size_t n = rows.size();
  Matrix m(f, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    std::string w = where + "[" + std::to_string(r) + "]";
    m.set_block(r, 0, vector_of(rows[r], f, n, w).transpose());
  }
  return m;
}

AlgebraPtr parse_algebra(const json& j, std::optional<Field> field, std::uint64_t seed) {
  if (!j.is_object()) fail("algebra", "expected a JSON object");
  Field f = field ? *field : Field::parse(text(member(j, "field", "algebra"), "field"));
  if (j.contains("path_order") && text(j["path_order"], "path_order") != "left-to-right") {
    fail("path_order", "only \"left-to-right\" is supported");
  }
  std::string name = j.contains("name") ? text(j["name"], "name") : std::string();
  int sources = j.contains("quiver") + j.contains("structure_constants") + j.contains("centralizer");
  if (sources != 1) fail("algebra", "expected exactly one of quiver, structure_constants, centralizer");
  if (j.contains("quiver")) return from_quiver(j["quiver"], f, std::move(name));
  if (j.contains("structure_constants")) return from_constants(j["structure_constants"], f, std::move(name));
  const json& c = j["centralizer"];
  Matrix m = parse_matrix(member(c, "matrix", "centralizer"), f, "centralizer.matrix");
  if (c.contains("n") && index(c["n"], 1u << 20, "centralizer.n") != m.rows()) {
    fail("centralizer.n", "does not match the matrix size");
  }
  AlgebraPtr a = centralizer_algebra(m, seed);
  if (name.empty()) return a;
  AlgebraData d = a->data();
  d.name = std::move(name);
  return Algebra::create(std::move(d));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

AlgebraPtr parse_algebra_file(const std::string& path, std::optional<Field> field, std::uint64_t seed) {
  json j = read_json_file(path);
  try {
    return parse_algebra(j, field, seed);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json serialize_algebra(const AlgebraPtr& a) {
  std::size_t n = a->dim();
  json products = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!a->left(i).is_zero_at(k, j)) products.push_back({i, j, k, a->left(i).get(k, j).to_string()});
      }
    }
  }
  auto vec = [&](const Matrix& v) {
    json out = json::array();
    for (std::size_t k = 0; k < n; ++k) out.push_back(v.get(k, 0).to_string());
    return out;
  };
  json idem = json::array();
  for (const auto& e : a->idempotents()) idem.push_back(vec(e));
  json j;
  j["name"] = a->name();
  j["field"] = a->field().to_string();
  j["path_order"] = "left-to-right";
  j["structure_constants"] = {{"basis", a->labels()},
                              {"products", products},
                              {"unit", vec(a->unit())},
                              {"idempotents", idem},
                              {"vertices", a->vertex_names()}};
  return j;
}

}  // namespace stabeq
