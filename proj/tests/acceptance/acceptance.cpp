#include <gmpxx.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "stabeq/algebra/constructions.hpp"
#include "stabeq/algebra/quiver.hpp"
#include "stabeq/homology/homology.hpp"
#include "stabeq/invariants/invariants.hpp"
#include "stabeq/invariants/report.hpp"
#include "stabeq/io/algebra_file.hpp"
#include "stabeq/module/decompose.hpp"
#include "stabeq/module/endomorphism.hpp"
#include "stabeq/surgery/isomorphism.hpp"
#include "stabeq/surgery/nodes.hpp"
#include "stabeq/surgery/surgery.hpp"

using namespace stabeq;

namespace {

const std::string kFixtures = STABEQ_FIXTURE_DIR;

struct Report {
  std::vector<std::string> failures;
  std::map<std::string, std::string> values;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void equal(const std::string& name, const std::string& actual, const std::string& expected) {
    values[name] = actual;
    if (actual != expected) failures.push_back(name + ": got " + actual + ", expected " + expected);
  }
  void equal(const std::string& name, std::size_t actual, std::size_t expected) {
    equal(name, std::to_string(actual), std::to_string(expected));
  }
  void equal(const std::string& name, const Value& actual, std::size_t expected) {
    equal(name, actual.to_string(), std::to_string(expected));
    if (!actual.is_exact()) failures.push_back(name + ": status " + to_string(actual.status));
  }
};

AlgebraPtr load(const std::string& name, Field f) { return parse_algebra_file(kFixtures + "/" + name + ".json", f); }

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(kFixtures)) {
    if (e.path().extension() == ".json" && e.path().stem() != "expected") out.push_back(e.path().stem().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string joined(const std::vector<std::string>& xs) {
  std::string out = "{";
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + xs[k];
  return out + "}";
}

std::size_t label_index(const AlgebraPtr& a, const std::string& label) {
  const auto& ls = a->labels();
  return static_cast<std::size_t>(std::find(ls.begin(), ls.end(), label) - ls.begin());
}

bool same_classes(const std::vector<Module>& xs, const std::vector<Module>& ys) {
  if (xs.size() != ys.size()) return false;
  std::vector<bool> used(ys.size(), false);
  for (const auto& x : xs) {
    bool found = false;
    for (std::size_t k = 0; k < ys.size() && !found; ++k) {
      if (!used[k] && is_isomorphic(x, ys[k]).isomorphic) used[k] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

std::size_t rank_of(const Bound& b) { return b.kind == Bound::Kind::infinite ? SIZE_MAX : b.value; }

void criterion1(Report& r, Field f) {
  InvariantReport a = stable_profile(load("a1", f));
  InvariantReport b = stable_profile(load("a1prime", f));
  r.equal("A1 del", a.del, 0);
  r.equal("A1 phi-dim", a.phi_dim, 0);
  r.equal("A1 psi-dim", a.psi_dim, 0);
  r.equal("A1' del", b.del, 1);
  r.equal("A1' phi-dim", b.phi_dim, 1);
  r.equal("A1' psi-dim", b.psi_dim, 1);
  r.equal("A1 nodes", a.nodes.size(), 1);
  r.equal("A1' nodes", b.nodes.size(), 0);
  r.equal("A1 non-projective simples", a.nonprojective_simples, 1);
  r.equal("A1' non-projective simples", b.nonprojective_simples, 1);
}

void criterion2(Report& r, Field f) {
  AlgebraPtr a = load("a2", f);
  InvariantReport p = stable_profile(a);
  r.equal("A2 del", p.del, 2);
  r.equal("A2 phi-dim", p.phi_dim, 2);
  r.equal("A2 psi-dim", p.psi_dim, 2);
  r.equal("A2 nodes", joined(p.nodes), "{1}");
  r.equal("A2 non-projective simples", p.nonprojective_simples, 2);

  SurgeryResult s = remove_nodes(a);
  r.equal("dim I", s.trace.dim(), 2);
  r.equal("dim J", s.annihilator.dim(), 4);
  for (const char* label : {"e2", "alpha", "beta"}) {
    r.expect(s.annihilator.contains(a->basis_vector(label_index(a, label))), std::string("J contains ") + label);
  }
  r.expect(s.annihilator.contains(a->radical()), "rad A lies in J");
  r.expect(quotient_algebra(s.annihilator)->is_semisimple(), "A/J is semisimple");

  r.equal("dim A2'", s.output->dim(), 6);
  AlgebraPtr t3 = lower_triangular_algebra(f, 3);
  auto phi = find_isomorphism(s.output, t3);
  r.expect(phi && is_algebra_isomorphism(s.output, t3, *phi), "A2' isomorphic to lower triangular 3x3 matrices");
  InvariantReport q = stable_profile(s.output);
  r.equal("A2' del", q.del, 1);
  r.equal("A2' phi-dim", q.phi_dim, 1);
  r.equal("A2' psi-dim", q.psi_dim, 1);
  r.equal("A2' nodes", q.nodes.size(), 0);
  r.equal("A2' non-projective simples", q.nonprojective_simples, 2);
}

void criterion3(Report& r, Field f) {
  InvariantReport a = stable_profile(load("tilting_A", f));
  InvariantReport b = stable_profile(load("tilting_B", f));
  r.equal("linear A3 del", a.del, 1);
  r.equal("linear A3 phi-dim", a.phi_dim, 1);
  r.equal("linear A3 psi-dim", a.psi_dim, 1);
  r.equal("linear A3 nodes", a.nodes.size(), 0);
  r.equal("quotient del", b.del, 2);
  r.equal("quotient phi-dim", b.phi_dim, 2);
  r.equal("quotient psi-dim", b.psi_dim, 2);
  r.expect(!b.nodes.empty(), "quotient has a node");
  r.values["quotient nodes"] = joined(b.nodes);
}

void criterion4(Report& r, Field f) {
  AlgebraPtr a = load("closing_A", f);
  AlgebraPtr b = load("closing_B", f);
  r.equal("closing A nodes", find_nodes(a).size(), 0);
  r.equal("closing B nodes", find_nodes(b).size(), 0);
  r.equal("closing A del", delooping_level(enumerate_indecomposables(a), 32).del, 2);
  r.equal("closing B del", delooping_level(enumerate_indecomposables(b), 32).del, 1);
}

std::size_t nonprojective_classes(const AlgebraPtr& a, Report& r, const std::string& name) {
  IndecRegistry reg = enumerate_indecomposables(a);
  r.expect(reg.closed(), name + " registry closed");
  return reg.nonprojective_ids().size();
}

void criterion5(Report& r, Field f) {
  AlgebraPtr a = load("sect32_A", f), b = load("sect32_B", f), c = load("sect32_C", f);
  r.equal("nu-dd(A)", dominant_dimensions(a).nu_dd, 2);
  r.equal("nu-dd(B)", dominant_dimensions(b).nu_dd, 2);
  std::vector<std::string> stp;
  for (auto v : nu_stably_projectives(a)) stp.push_back(a->vertex_names()[v]);
  r.equal("A-stp", joined(stp), "{1,3}");

  FrobeniusPart fa = frobenius_part(a);
  r.equal("Frobenius part of A: dim", fa.algebra->dim(), 4);
  r.expect(fa.quiver.arrow_counts == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 0}},
           "Frobenius part of A: quiver 1 <-> 3");
  const auto& ra = fa.algebra->structure().radical_powers;
  r.expect(ra.size() >= 2 && ra[0].cols() == 2 && ra[1].cols() == 0, "Frobenius part of A: rad^2 = 0");

  FrobeniusPart fb = frobenius_part(b);
  r.equal("Frobenius part of B: dim", fb.algebra->dim(), 4);
  r.expect(fb.quiver.arrow_counts == std::vector<std::vector<std::size_t>>{{1, 0}, {0, 1}},
           "Frobenius part of B: two one-loop vertices");
  const auto& rb = fb.algebra->structure().radical_powers;
  r.expect(rb.size() >= 2 && rb[0].cols() == 2 && rb[1].cols() == 0, "Frobenius part of B: loop squares zero");

  DominantDimensions dc = dominant_dimensions(c);
  r.equal("nu-dd(C)", dc.nu_dd, 0);
  r.equal("dd(C)", dc.dd, 1);
  r.equal("Frobenius part of C: dim", frobenius_part(c).algebra->dim(), 0);

  r.equal("Frobenius part of A: non-projective classes", nonprojective_classes(fa.algebra, r, "Frobenius A"), 2);
  r.equal("Frobenius part of B: non-projective classes", nonprojective_classes(fb.algebra, r, "Frobenius B"), 2);
}

// Hand-derived syzygy table of E = End(k[t]/t^3 + S) with vertex a for the
// regular summand and s for the simple one. Dimension vectors are (s, a);
// an empty target means the syzygy is projective.
struct HandClass {
  const char* name;
  std::pair<int, int> dims;
  int omega;
};

const std::vector<HandClass> kHandTable = {
    {"S_s", {1, 0}, 1},  // kernel of P_s -> S_s is S_a
    {"S_a", {0, 1}, 4},  // kernel of P_a -> S_a is rad P_a
    {"I_s", {1, 1}, 3},  // [a; s] covered by P_a with kernel [a; a]
    {"U", {0, 2}, -1},   // [a; a] covered by P_a with kernel P_s
    {"R", {1, 2}, 4},    // rad P_a, periodic
    {"V", {1, 2}, 1},    // P_a / soc
    {"W", {2, 2}, 3},    // (P_a + P_s) / U
};

std::size_t hand_rank(const std::vector<std::vector<int>>& columns) {
  if (columns.empty()) return 0;
  std::vector<std::vector<mpq_class>> m(columns.size(), std::vector<mpq_class>(kHandTable.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t k = 0; k < kHandTable.size(); ++k) m[c][k] = columns[c][k];
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < kHandTable.size() && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t row = 0; row < m.size(); ++row) {
      if (row == rank || m[row][col] == 0) continue;
      mpq_class q = m[row][col] / m[rank][col];
      for (std::size_t k = 0; k < kHandTable.size(); ++k) m[row][k] -= q * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<int> hand_omega(const std::vector<int>& v) {
  std::vector<int> out(kHandTable.size(), 0);
  for (std::size_t k = 0; k < kHandTable.size(); ++k) {
    if (kHandTable[k].omega >= 0) out[kHandTable[k].omega] += v[k];
  }
  return out;
}

std::size_t hand_phi(const std::vector<std::size_t>& classes) {
  std::vector<std::vector<int>> gens;
  for (auto c : classes) {
    std::vector<int> e(kHandTable.size(), 0);
    e[c] = 1;
    gens.push_back(e);
  }
  std::size_t n = 0;
  std::size_t prev = hand_rank(gens);
  while (true) {
    for (auto& g : gens) g = hand_omega(g);
    std::size_t next = hand_rank(gens);
    if (next == prev) return n;
    prev = next;
    ++n;
  }
}

std::size_t hand_phi_dim() {
  std::size_t best = 0;
  std::size_t n = kHandTable.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> classes;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask >> k & 1) classes.push_back(k);
    }
    best = std::max(best, hand_phi(classes));
  }
  return best;
}

int hand_power(int c, std::size_t d) {
  for (std::size_t k = 0; k < d && c >= 0; ++k) c = kHandTable[c].omega;
  return c;
}

std::size_t hand_del_of(int simple) {
  for (std::size_t d = 0;; ++d) {
    int x = hand_power(simple, d);
    if (x < 0) return d;
    for (std::size_t m = 0; m < kHandTable.size(); ++m) {
      if (hand_power(static_cast<int>(m), d + 1) == x) return d;
    }
  }
}

AlgebraPtr hand_endomorphism_algebra(Field f) {
  Quiver q;
  q.vertices = {"a", "s"};
  q.arrows = {{"t", 0, 0}, {"p", 0, 1}, {"i", 1, 0}};
  auto walk = [&](long c, std::vector<std::string> w) { return RelationTerm{Scalar(f, c), std::move(w)}; };
  std::vector<Relation> rels = {{{walk(1, {"t", "p"})}},
                                {{walk(1, {"i", "t"})}},
                                {{walk(1, {"i", "p"})}},
                                {{walk(1, {"p", "i"}), walk(-1, {"t", "t"})}}};
  return algebra_from_quiver(q, rels, f, {}, "E hand");
}

std::multiset<std::pair<std::pair<int, int>, std::pair<int, int>>> pipeline_table(const AlgebraPtr& e, Report& r,
                                                                                  const std::string& name) {
  IndecRegistry reg = enumerate_indecomposables(e);
  r.expect(reg.closed(), name + " registry closed");
  std::size_t s = projective_module(e, 0).dim() == 2 ? 0 : 1;
  auto dims = [&](const Module& m) {
    auto dv = m.dimension_vector();
    return std::pair<int, int>(static_cast<int>(dv[s]), static_cast<int>(dv[1 - s]));
  };
  std::multiset<std::pair<std::pair<int, int>, std::pair<int, int>>> out;
  for (auto id : reg.nonprojective_ids()) {
    std::pair<int, int> target{0, 0};
    for (const auto& [j, mult] : reg.entry(id).omega) {
      if (reg.entry(j).projective) continue;
      auto d = dims(reg.entry(j).module);
      target.first += d.first * static_cast<int>(mult);
      target.second += d.second * static_cast<int>(mult);
    }
    out.insert({dims(reg.entry(id).module), target});
  }
  return out;
}

void criterion6(Report& r, Field f) {
  std::size_t oracle_del = std::max(hand_del_of(0), hand_del_of(1));
  std::size_t oracle_phi = hand_phi_dim();
  r.equal("oracle del", oracle_del, 2);
  r.equal("oracle phi-dim", oracle_phi, 2);

  Quiver q;
  q.vertices = {"1"};
  q.arrows = {{"t", 0, 0}};
  Relation cube;
  cube.terms.push_back({Scalar(f, 1), {"t", "t", "t"}});
  AlgebraPtr a = algebra_from_quiver(q, {cube}, f, {}, "k[t]/t^3");
  Module reg = Module::regular(a);
  Module x = simple_module(a, 0);
  AlgebraPtr e1 = endomorphism_algebra(direct_sum(a, {reg, x}).module);
  AlgebraPtr e2 = endomorphism_algebra(direct_sum(a, {reg, tau(x)}).module);
  AlgebraPtr hand = hand_endomorphism_algebra(f);
  r.equal("dim E_1", e1->dim(), hand->dim());
  r.expect(find_isomorphism(e1, hand).has_value(), "E_1 matches the hand-built bound quiver");
  r.expect(find_isomorphism(e2, hand).has_value(), "E_2 matches the hand-built bound quiver");

  std::multiset<std::pair<std::pair<int, int>, std::pair<int, int>>> expected;
  for (const auto& c : kHandTable) {
    auto target = c.omega < 0 ? std::pair<int, int>{0, 0} : kHandTable[c.omega].dims;
    expected.insert({c.dims, target});
  }
  r.expect(pipeline_table(e1, r, "E_1") == expected, "E_1 syzygy table matches the hand table");
  r.expect(pipeline_table(e2, r, "E_2") == expected, "E_2 syzygy table matches the hand table");

  for (const auto& [name, e] : {std::pair{"E_1", e1}, std::pair{"E_2", e2}}) {
    IndecRegistry g = enumerate_indecomposables(e);
    r.equal(std::string("del ") + name, delooping_level(g, 32).del, oracle_del);
    r.equal(std::string("phi-dim ") + name, phi_psi_dim(g).phi, oracle_phi);
  }
}

void criterion7(Report& r, Field f) {
  auto matrix = [&](std::vector<std::vector<long>> rows) {
    Matrix m(f, rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, Scalar(f, rows[i][j]));
    }
    return m;
  };
  AlgebraPtr m2 = centralizer_algebra(matrix({{1, 0}, {0, 1}}));
  r.equal("S2(I2) dim", m2->dim(), 4);
  r.expect(m2->is_semisimple(), "S2(I2) semisimple");
  r.equal("S2(I2) simples", m2->structure().class_vertex.size(), 1);
  r.expect(!m2->structure().basic, "S2(I2) not basic");
  Module simple = simple_module(m2, 0);
  Matrix flat(f, simple.dim() * simple.dim(), m2->dim());
  for (std::size_t b = 0; b < m2->dim(); ++b) {
    for (std::size_t i = 0; i < simple.dim(); ++i) {
      for (std::size_t j = 0; j < simple.dim(); ++j) flat.set(i * simple.dim() + j, b, simple.action(b).get(i, j));
    }
  }
  r.equal("S2(I2) simple module dim", simple.dim(), 2);
  r.expect(rank(flat) == 4, "S2(I2) acts faithfully on its simple module: S2(I2) = M2(k)");

  AlgebraPtr j3 = centralizer_algebra(matrix({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
  r.equal("S3(J3) dim", j3->dim(), 3);
  r.equal("S3(J3) simples", j3->structure().class_vertex.size(), 1);
  r.expect(!j3->is_semisimple(), "S3(J3) not semisimple");
  r.expect(is_injective(Module::regular(j3)), "S3(J3) self-injective");
  IndecRegistry g = enumerate_indecomposables(j3);
  r.equal("S3(J3) del", delooping_level(g, 32).del, 0);
  r.equal("S3(J3) phi-dim", phi_psi_dim(g).phi, 0);

  AlgebraPtr d = centralizer_algebra(matrix({{0, 0}, {0, 1}}));
  r.equal("S2(diag(0,1)) dim", d->dim(), 2);
  r.equal("S2(diag(0,1)) simples", d->structure().class_vertex.size(), 2);
  r.expect(d->is_semisimple() && d->structure().basic, "S2(diag(0,1)) = k x k");
}

void property_suites(Report& r, const std::string& name, const AlgebraPtr& a, std::size_t& self_injective_count) {
  auto fail = [&](bool ok, const std::string& what) { r.expect(ok, name + ": " + what); };
  fail(a->is_associative(), "associativity");

  Module reg = Module::regular(a);
  Module cogen = dual(Module::regular(a->opposite()));
  for (const auto& [label, m] : {std::pair{"A", reg}, std::pair{"D(A)", cogen}}) {
    Decomposition d0 = decompose(m, 0), d1 = decompose(m, 17);
    fail(d0.certificate.is_isomorphism() && d1.certificate.is_isomorphism(),
         std::string("decomposition certificate of ") + label);
    fail(same_classes(d0.modules(), d1.modules()), std::string("seed-independent classes of ") + label);
  }

  IndecRegistry g = enumerate_indecomposables(a);
  fail(g.closed(), "registry closed");
  std::vector<std::size_t> np = g.nonprojective_ids();

  std::size_t limit = std::min<std::size_t>(np.size(), 5);
  for (std::size_t i = 0; i < limit; ++i) {
    for (std::size_t j = i; j < limit; ++j) {
      const Module& x = g.entry(np[i]).module;
      const Module& y = g.entry(np[j]).module;
      Module lhs = syzygy(direct_sum(a, {x, y}).module);
      Module rhs = direct_sum(a, {syzygy(x), syzygy(y)}).module;
      fail(is_isomorphic(lhs, rhs).isomorphic, "syzygy additivity");
    }
  }

  const auto& classes = a->structure().class_vertex;
  std::vector<Module> injectives;
  for (auto v : classes) {
    Module nu = nakayama(projective_module(a, v));
    fail(is_isomorphic(nu, injective_module(a, v)).isomorphic, "nu P(v) = I(v) for v = " + a->vertex_names()[v]);
    injectives.push_back(nu);
  }
  for (std::size_t i = 0; i < injectives.size(); ++i) {
    for (std::size_t j = i + 1; j < injectives.size(); ++j) {
      fail(!is_isomorphic(injectives[i], injectives[j]).isomorphic, "nu is injective on projective classes");
    }
  }

  auto check_tau = [&](const AlgebraPtr& b, const std::string& label) {
    IndecRegistry h = enumerate_indecomposables(b);
    for (auto id : h.nonprojective_ids()) {
      const Module& x = h.entry(id).module;
      Module rhs = strip_projectives(syzygy(syzygy(nakayama(x))));
      fail(is_isomorphic(tau(x), rhs).isomorphic, "DTr = Omega^2 nu on " + label);
    }
    ++self_injective_count;
  };
  if (is_injective(reg)) check_tau(a, "the algebra");
  FrobeniusPart fp = frobenius_part(a);
  if (fp.algebra->dim() > 0) check_tau(fp.algebra, "its Frobenius part");

  for (std::size_t i = 0; i < np.size(); ++i) {
    for (std::size_t j = i; j < np.size(); ++j) {
      auto di = delooping_level_of(g, {np[i]}, 32), dj = delooping_level_of(g, {np[j]}, 32);
      auto dij = delooping_level_of(g, {np[i], np[j]}, 32);
      fail(dij.bound.value == std::max(di.bound.value, dj.bound.value), "del(X + Y) = max");
    }
  }

  DeloopingResult del = delooping_level(g, 32);
  std::vector<std::size_t> simples;
  for (auto v : classes) {
    auto id = g.simple_id(v);
    if (id && !g.entry(*id).projective) simples.push_back(*id);
  }
  fail(delooping_level_of(g, simples, 32) == del.del, "del(A) = del(top A)");

  PhiPsi pp = phi_psi_dim(g);
  Value fd = finitistic_dimension_bound(g);
  if (fd.is_exact() && pp.phi.is_exact() && pp.psi.is_exact()) {
    fail(rank_of(fd.bound) <= rank_of(pp.phi.bound) && rank_of(pp.phi.bound) <= rank_of(pp.psi.bound),
         "fd <= phi-dim <= psi-dim");
  }

  auto pds = registry_projective_dimensions(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!pds[i] || !pds[i]->is_finite()) continue;
    fail(phi_psi(g, {i}).phi.bound.value == pds[i]->value, "phi(X) = pd(X) on finite-pd classes");
  }

  DominantDimensions dd = dominant_dimensions(a);
  fail(dd.dd == dominant_dimensions(a->opposite()).dd, "dd(A) = dd(A^op)");

  bool positive = dd.nu_dd.status == Status::exact && (dd.nu_dd.bound.kind == Bound::Kind::infinite ||
                                                       dd.nu_dd.bound.value >= 1);
  if (positive) {
    fail(nu_stably_projectives(a) == projective_injectives(a), "A-stp = projective-injectives");
    fail(dd.nu_dd == dd.dd, "nu-dd = dd");
    for (auto v : classes) {
      bool p_inj = is_injective(projective_module(a, v));
      fail(p_inj == is_projective(injective_module(a, v)), "P(S) injective iff I(S) projective");
      if (!p_inj) {
        Module s = simple_module(a, v);
        fail(!is_projective(s) && !is_injective(s), "S neither projective nor injective");
      }
    }
  }

  auto nodes = find_nodes(a);
  if (!nodes.empty()) {
    std::vector<Module> ss;
    for (const auto& n : nodes) ss.push_back(n.simple);
    Ideal i = trace_ideal(a, direct_sum(a, ss).module);
    fail(product_ideal(i, i).dim() == 0, "I^2 = 0");
    fail(product_ideal(radical_ideal(a), i).dim() == 0, "rad(A) I = 0");
  }
}

void criterion8(Report& r, Field f) {
  std::size_t self_injective = 0;
  auto names = fixture_names();
  for (const auto& name : names) property_suites(r, name, load(name, f), self_injective);
  r.expect(names.size() >= 11, "all fixtures present");
  r.expect(self_injective > 0, "at least one self-injective algebra tested");
  r.values["fixtures"] = std::to_string(names.size());
  r.values["self-injective algebras"] = std::to_string(self_injective);
}

using Criterion = std::function<void(Report&, Field)>;

struct Entry {
  int number;
  const char* title;
  Criterion run;
};

Report run_guarded(const Criterion& c, Field f) {
  Report r;
  try {
    c(r, f);
  } catch (const std::exception& e) {
    r.failures.push_back(std::string("exception: ") + e.what());
  }
  return r;
}

}  // namespace

int main() {
  const Field q = Field::rationals();
  const Field f101 = Field::prime(101);
  std::vector<Entry> entries = {
      {1, "truncated polynomial ring and its node-free partner", criterion1},
      {2, "two-cycle algebra, node removal and the triangular algebra", criterion2},
      {3, "linear quiver and its tilted quotient", criterion3},
      {4, "node-free pair with different delooping levels", criterion4},
      {5, "nu-dominant dimensions and Frobenius parts of the triple", criterion5},
      {6, "endomorphism algebras over a self-injective algebra", criterion6},
      {7, "centralizer matrix algebras", criterion7},
      {8, "property suites on every fixture", criterion8},
  };

  int failed = 0;
  std::map<int, Report> over_q;
  auto print = [&](int number, const char* title, const Report& r, double seconds) {
    bool ok = r.failures.empty();
    failed += !ok;
    std::printf("criterion %d: %s  %s (%.2f s)\n", number, ok ? "PASS" : "FAIL", title, seconds);
    for (const auto& f : r.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  };
  auto timed = [](const Criterion& c, Field f, double& seconds) {
    auto t0 = std::chrono::steady_clock::now();
    Report r = run_guarded(c, f);
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  };

  for (const auto& e : entries) {
    double s = 0;
    Report r = timed(e.run, q, s);
    print(e.number, e.title, r, s);
    over_q[e.number] = r;
  }

  Report field;
  auto t0 = std::chrono::steady_clock::now();
  for (int n : {1, 2, 3, 4, 5, 7}) {
    const auto& e = entries[n - 1];
    Report r = run_guarded(e.run, f101);
    for (const auto& f : r.failures) field.failures.push_back("criterion " + std::to_string(n) + " over Fp:101: " + f);
    if (r.values != over_q[n].values) {
      for (const auto& [k, v] : over_q[n].values) {
        auto it = r.values.find(k);
        std::string w = it == r.values.end() ? "missing" : it->second;
        if (w != v) field.failures.push_back("criterion " + std::to_string(n) + " " + k + ": Q " + v + ", Fp:101 " + w);
      }
    }
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  print(9, "criteria 1-5 and 7 reproduce over Fp:101", field, s);

  std::printf("%d of 9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
