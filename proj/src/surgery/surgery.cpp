#include "stabeq/surgery/surgery.hpp"

#include <sstream>

#include "stabeq/invariants/invariants.hpp"
#include "stabeq/module/endomorphism.hpp"

namespace stabeq {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "";
}

AlgebraPtr triangular_surgery_algebra(const Ideal& trace, const Ideal& annihilator, std::uint64_t seed) {
  const auto& a = trace.algebra;
  Field f = a->field();
  Quotient qi = quotient(trace);
  Quotient qj = quotient(annihilator);
  AlgebraPtr ai = qi.algebra;
  AlgebraPtr aj = complete_idempotents(qj.algebra, seed);
  SpanCoords icoords(trace.basis);
  std::size_t m1 = ai->dim(), di = trace.dim(), m2 = aj->dim();
  std::size_t n = m1 + di + m2;

  std::vector<std::vector<Matrix>> c(n, std::vector<Matrix>(n, Matrix(f, n, 1)));
  for (std::size_t x = 0; x < m1; ++x) {
    for (std::size_t y = 0; y < m1; ++y) c[x][y].set_block(0, 0, ai->left(x).column(y));
  }
  for (std::size_t x = 0; x < m2; ++x) {
    for (std::size_t y = 0; y < m2; ++y) c[m1 + di + x][m1 + di + y].set_block(m1 + di, 0, aj->left(x).column(y));
  }
  for (std::size_t i = 0; i < di; ++i) {
    Matrix elem = trace.basis.column(i);
    for (std::size_t x = 0; x < m1; ++x) {
      // i . x through A/I acting on the right
      c[m1 + i][x].set_block(m1, 0, icoords.coords(a->product(elem, qi.lift.column(x))));
    }
    for (std::size_t y = 0; y < m2; ++y) {
      // y . i through A/J acting on the left
      c[m1 + di + y][m1 + i].set_block(m1, 0, icoords.coords(a->product(qj.lift.column(y), elem)));
    }
  }

  Matrix unit(f, n, 1);
  unit.set_block(0, 0, ai->unit());
  unit.set_block(m1 + di, 0, aj->unit());
  std::vector<Matrix> idem;
  std::vector<std::string> names;
  for (std::size_t v = 0; v < ai->vertex_count(); ++v) {
    Matrix e(f, n, 1);
    e.set_block(0, 0, ai->idempotent(v));
    idem.push_back(e);
    names.push_back(ai->vertex_names()[v]);
  }
  for (std::size_t v = 0; v < aj->vertex_count(); ++v) {
    Matrix e(f, n, 1);
    e.set_block(m1 + di, 0, aj->idempotent(v));
    idem.push_back(e);
    std::string name;
    // name after the vertex of A/J whose image contains this idempotent
    for (std::size_t w = 0; w < qj.algebra->vertex_count() && name.empty(); ++w) {
      if (aj->product(qj.algebra->idempotent(w), aj->idempotent(v)) == aj->idempotent(v)) {
        name = qj.algebra->vertex_names()[w] + "'";
      }
    }
    if (name.empty()) name = "J" + std::to_string(v + 1);
    for (const auto& existing : names) {
      if (existing == name) name += std::to_string(v + 1);
    }
    names.push_back(name);
  }

  std::vector<std::string> labels;
  for (std::size_t x = 0; x < m1; ++x) labels.push_back("x:" + ai->labels()[x]);
  for (std::size_t i = 0; i < di; ++i) labels.push_back("i" + std::to_string(i + 1));
  for (std::size_t y = 0; y < m2; ++y) labels.push_back("y:" + aj->labels()[y]);

  AlgebraData d;
  d.field = f;
  d.labels = std::move(labels);
  for (std::size_t x = 0; x < n; ++x) {
    Matrix l(f, n, n);
    for (std::size_t y = 0; y < n; ++y) l.set_block(0, y, c[x][y]);
    d.left.push_back(std::move(l));
  }
  d.unit = std::move(unit);
  d.idempotents = std::move(idem);
  d.vertex_names = std::move(names);
  d.provenance = "node removal";
  d.name = a->name().empty() ? std::string() : a->name() + "'";
  return Algebra::create(std::move(d));
}

namespace {

struct FrobeniusInfo {
  bool closed = true;
  std::size_t nonprojective = 0;
};

FrobeniusInfo frobenius_info(const AlgebraPtr& a, const Caps& caps) {
  FrobeniusPart fp = frobenius_part(a, caps.seed);
  if (fp.algebra->dim() == 0) return {};
  IndecRegistry reg = enumerate_indecomposables(fp.algebra, caps);
  return {reg.closed(), reg.nonprojective_ids().size()};
}

}  // namespace

SurgeryResult remove_nodes(const AlgebraPtr& a, const Caps& caps) {
  SurgeryResult r;
  r.input = a;
  r.nodes = find_nodes(a, caps.seed);
  r.output = a;
  r.trace = zero_ideal(a);
  r.annihilator = whole_algebra(a);
  std::size_t np = nonprojective_simple_count(a);
  if (r.nodes.empty()) {
    r.record = {true, np, np, true, true, 0, 0};
    return r;
  }
  std::vector<Module> simples;
  for (const auto& n : r.nodes) simples.push_back(n.simple);
  r.trace = trace_ideal(a, direct_sum(a, simples).module);
  r.annihilator = left_annihilator(r.trace);
  r.output = triangular_surgery_algebra(r.trace, r.annihilator, caps.seed);
  r.performed = true;

  r.record.node_free = find_nodes(r.output, caps.seed).empty();
  r.record.nonprojective_simples_before = np;
  r.record.nonprojective_simples_after = nonprojective_simple_count(r.output);
  FrobeniusInfo before = frobenius_info(a, caps), after = frobenius_info(r.output, caps);
  r.record.frobenius_closed_before = before.closed;
  r.record.frobenius_closed_after = after.closed;
  r.record.frobenius_classes_before = before.nonprojective;
  r.record.frobenius_classes_after = after.nonprojective;
  return r;
}

std::vector<Check> verify_surgery(const SurgeryResult& r) {
  std::vector<Check> out;
  const auto& rec = r.record;
  if (!r.performed) {
    out.push_back({"output is node-free", Verdict::pass, "no nodes: input returned unchanged"});
    out.push_back({"non-projective simple counts agree", Verdict::pass, "input unchanged"});
    out.push_back({"Frobenius-finiteness is preserved", Verdict::pass, "input unchanged"});
    return out;
  }
  out.push_back({"output is node-free", rec.node_free ? Verdict::pass : Verdict::fail,
                 rec.node_free ? "no nodes in the output" : "the output still has nodes"});
  std::ostringstream counts;
  counts << rec.nonprojective_simples_before << " = " << rec.nonprojective_simples_after;
  out.push_back({"non-projective simple counts agree",
                 rec.nonprojective_simples_before == rec.nonprojective_simples_after ? Verdict::pass : Verdict::fail,
                 counts.str()});
  Check frob{"Frobenius-finiteness is preserved", Verdict::indeterminate, {}};
  if (!rec.frobenius_closed_before) {
    frob.detail = "Frobenius part of the input not shown representation-finite";
  } else {
    frob.verdict = rec.frobenius_closed_after ? Verdict::pass : Verdict::fail;
    std::ostringstream os;
    os << "non-projective classes " << rec.frobenius_classes_before << " and " << rec.frobenius_classes_after;
    frob.detail = os.str();
  }
  out.push_back(frob);
  std::size_t expected = r.trace.dim() + (r.input->dim() - r.trace.dim()) + (r.input->dim() - r.annihilator.dim());
  std::ostringstream dims;
  dims << r.output->dim() << " = " << r.input->dim() - r.trace.dim() << " + " << r.trace.dim() << " + "
       << r.input->dim() - r.annihilator.dim();
  out.push_back({"dimension of the triangular algebra", r.output->dim() == expected ? Verdict::pass : Verdict::fail,
                 dims.str()});
  return out;
}

namespace {

nlohmann::json algebra_summary(const AlgebraPtr& a) {
  return {{"name", a->name()}, {"dim", a->dim()}, {"vertices", a->vertex_names()}};
}

}  // namespace

nlohmann::json to_json(const SurgeryResult& r, const std::vector<Check>& checks) {
  nlohmann::json j;
  j["schema"] = 1;
  j["input"] = algebra_summary(r.input);
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& n : r.nodes) nodes.push_back(r.input->vertex_names()[n.vertex]);
  j["nodes"] = nodes;
  j["performed"] = r.performed;
  j["trace_dim"] = r.trace.dim();
  j["annihilator_dim"] = r.annihilator.dim();
  j["output"] = algebra_summary(r.output);
  const auto& rec = r.record;
  j["record"] = {{"node_free", rec.node_free},
                 {"nonprojective_simples", {rec.nonprojective_simples_before, rec.nonprojective_simples_after}},
                 {"frobenius_registry",
                  {rec.frobenius_closed_before ? "closed" : "capped", rec.frobenius_closed_after ? "closed" : "capped"}},
                 {"frobenius_nonprojective_classes", {rec.frobenius_classes_before, rec.frobenius_classes_after}}};
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks) cs.push_back({{"check", c.name}, {"verdict", to_string(c.verdict)}, {"detail", c.detail}});
  j["checks"] = cs;
  return j;
}

std::string to_markdown(const SurgeryResult& r, const std::vector<Check>& checks) {
  std::ostringstream os;
  os << "## node removal: " << (r.input->name().empty() ? "algebra" : r.input->name()) << "\n\n";
  if (!r.performed) {
    os << "no nodes; algebra unchanged (dimension " << r.input->dim() << ")\n\n";
  } else {
    os << "nodes:";
    for (const auto& n : r.nodes) os << " S(" << r.input->vertex_names()[n.vertex] << ")";
    os << "\n\ndim I = " << r.trace.dim() << ", dim J = " << r.annihilator.dim() << ", dim A' = " << r.output->dim()
       << "\n\n";
  }
  os << "| check | verdict | detail |\n|---|---|---|\n";
  for (const auto& c : checks) os << "| " << c.name << " | " << to_string(c.verdict) << " | " << c.detail << " |\n";
  return os.str();
}

}  // namespace stabeq
