#include <set>

#include "algebras.hpp"
#include "doctest.h"
#include "stabeq/invariants/invariants.hpp"
#include "stabeq/invariants/report.hpp"
#include "stabeq/module/endomorphism.hpp"
#include "stabeq/surgery/nodes.hpp"

using namespace stabeq;

namespace {

const Field kQ = Field::rationals();
const Field kF101 = Field::prime(101);

struct Summary {
  std::size_t classes;
  bool closed;
  std::size_t del, phi, psi;
};

Summary summarize(const AlgebraPtr& a) {
  IndecRegistry reg = enumerate_indecomposables(a);
  auto d = delooping_level(reg, 32);
  auto pp = phi_psi_dim(reg);
  REQUIRE(d.del.is_exact());
  REQUIRE(pp.phi.is_exact());
  REQUIRE(pp.psi.is_exact());
  return {reg.size(), reg.closed(), d.del.bound.value, pp.phi.bound.value, pp.psi.bound.value};
}

// Number of intervals [i, j] in a linear quiver with n vertices.
std::size_t interval_count(std::size_t n) { return n * (n + 1) / 2; }

}  // namespace

TEST_SUITE("invariants") {
  TEST_CASE("truncated polynomial ring and its surgery partner") {
    for (Field f : {kQ, kF101}) {
      Summary s = summarize(testalg::a1(f));
      CHECK(s.closed);
      CHECK(s.classes == 2);
      CHECK(s.del == 0);
      CHECK(s.phi == 0);
      CHECK(s.psi == 0);
      Summary t = summarize(testalg::a1_prime(f));
      CHECK(t.classes == 3);
      CHECK(t.del == 1);
      CHECK(t.phi == 1);
      CHECK(t.psi == 1);
    }
  }

  TEST_CASE("two-cycle algebra and the lower triangular algebra") {
    Summary s = summarize(testalg::a2(kQ));
    CHECK(s.del == 2);
    CHECK(s.phi == 2);
    CHECK(s.psi == 2);
    Summary t = summarize(lower_triangular_algebra(kQ, 3));
    CHECK(t.classes == interval_count(3));
    CHECK(t.del == 1);
    CHECK(t.phi == 1);
    CHECK(t.psi == 1);
  }

  TEST_CASE("linear quiver and its radical-square-zero quotient") {
    Summary s = summarize(testalg::linear_a3(kQ));
    CHECK(s.classes == interval_count(3));
    CHECK(s.del == 1);
    CHECK(s.phi == 1);
    CHECK(s.psi == 1);
    Summary t = summarize(testalg::linear_a3_rad2(kQ));
    CHECK(t.classes == 5);
    CHECK(t.del == 2);
    CHECK(t.phi == 2);
    CHECK(t.psi == 2);
  }

  TEST_CASE("closing pair delooping levels") {
    CHECK(summarize(testalg::closing_a(kQ)).del == 2);
    CHECK(summarize(testalg::closing_b(kQ)).del == 1);
  }

  TEST_CASE("two linear branches: interval modules and dominant dimensions") {
    auto c = testalg::sect32_c(kQ);
    IndecRegistry reg = enumerate_indecomposables(c);
    CHECK(reg.closed());
    CHECK(reg.size() == 2 * interval_count(3));
    auto dd = dominant_dimensions(c);
    CHECK(dd.dd == Value::exact(Bound::exact(1)));
    CHECK(dd.nu_dd == Value::exact(Bound::exact(0)));
    CHECK(nu_stably_projectives(c).empty());
    CHECK(frobenius_part(c).algebra->dim() == 0);
  }

  TEST_CASE("four-cycle and two-loop algebras: nu-dominant dimension and Frobenius parts") {
    auto a = testalg::sect32_a(kQ);
    CHECK(nu_stably_projectives(a) == std::vector<std::size_t>{0, 2});
    auto da = dominant_dimensions(a);
    CHECK(da.nu_dd == Value::exact(Bound::exact(2)));
    CHECK(da.dd == Value::exact(Bound::exact(2)));
    FrobeniusPart fa = frobenius_part(a);
    CHECK(fa.algebra->dim() == 4);
    CHECK(fa.quiver.arrow_counts == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 0}});

    auto b = testalg::sect32_b(kQ);
    auto db = dominant_dimensions(b);
    CHECK(db.nu_dd == Value::exact(Bound::exact(2)));
    FrobeniusPart fb = frobenius_part(b);
    CHECK(fb.algebra->dim() == 4);
    CHECK(fb.quiver.arrow_counts == std::vector<std::vector<std::size_t>>{{1, 0}, {0, 1}});

    auto count_nonproj = [](const AlgebraPtr& x) { return enumerate_indecomposables(x).nonprojective_ids().size(); };
    CHECK(count_nonproj(fa.algebra) == 2);
    CHECK(count_nonproj(fb.algebra) == 2);
  }

  TEST_CASE("semisimple algebra: infinite dominant dimension, zero invariants") {
    auto k2 = testalg::bound_quiver(kQ, {"1", "2"}, {}, {});
    auto dd = dominant_dimensions(k2);
    CHECK(dd.dd == Value::exact(Bound::infinite()));
    CHECK(dd.nu_dd == Value::exact(Bound::infinite()));
    Summary s = summarize(k2);
    CHECK(s.del == 0);
    CHECK(s.phi == 0);
    CHECK(s.classes == 2);
  }

  TEST_CASE("self-injective local algebra: every projective is nu-stably projective") {
    auto a = testalg::truncated_loop(kQ, 3);
    CHECK(nu_stably_projectives(a).size() == 1);
    CHECK(summarize(a).classes == 3);
    CHECK(summarize(a).del == 0);
  }

  TEST_CASE("phi equals pd on finite-pd classes; delooping is additive") {
    for (auto a : {testalg::a2(kQ), testalg::closing_a(kQ), testalg::linear_a3_rad2(kQ), testalg::sect32_a(kQ)}) {
      IndecRegistry reg = enumerate_indecomposables(a);
      auto pds = registry_projective_dimensions(reg);
      for (std::size_t i = 0; i < reg.size(); ++i) {
        REQUIRE(pds[i].has_value());
        if (pds[i]->is_finite()) {
          auto pp = phi_psi(reg, {i});
          CHECK(pp.phi.bound.value == pds[i]->value);
          CHECK(pp.psi.bound.value == pds[i]->value);
        }
        CHECK(pds[i] == projective_dimension(reg.entry(i).module, 32));
      }
      for (std::size_t i = 0; i < reg.size(); ++i) {
        for (std::size_t j = 0; j < reg.size(); ++j) {
          auto di = delooping_level_of(reg, {i}, 32).bound.value;
          auto dj = delooping_level_of(reg, {j}, 32).bound.value;
          CHECK(delooping_level_of(reg, {i, j}, 32).bound.value == std::max(di, dj));
        }
      }
    }
  }

  TEST_CASE("phi and psi are monotone under adding summands") {
    for (auto a : {testalg::a2(kQ), testalg::closing_b(kQ), testalg::linear_a3_rad2(kQ)}) {
      IndecRegistry reg = enumerate_indecomposables(a);
      std::size_t n = reg.size();
      REQUIRE(n <= 16);
      auto full = phi_psi_dim(reg);
      for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::size_t> ids;
        for (std::size_t i = 0; i < n; ++i) {
          if (mask >> i & 1) ids.push_back(i);
        }
        auto pp = phi_psi(reg, ids);
        CHECK(pp.phi.bound.value <= full.phi.bound.value);
        CHECK(pp.psi.bound.value <= full.psi.bound.value);
      }
    }
  }

  TEST_CASE("registry adjacency is consistent") {
    auto a = testalg::closing_a(kQ);
    IndecRegistry reg = enumerate_indecomposables(a);
    REQUIRE(reg.closed());
    for (std::size_t i = 0; i < reg.size(); ++i) {
      const auto& e = reg.entry(i);
      for (std::size_t j = i + 1; j < reg.size(); ++j) CHECK_FALSE(is_isomorphic(e.module, reg.entry(j).module).isomorphic);
      if (e.tau) CHECK(reg.entry(*e.tau).tau_inverse == i);
      CHECK(e.projective == !e.tau.has_value());
    }
  }

  TEST_CASE("capped registry reports non-exact statuses") {
    Caps caps;
    caps.registry = 3;
    IndecRegistry reg = enumerate_indecomposables(testalg::closing_a(kQ), caps);
    CHECK_FALSE(reg.closed());
    CHECK(reg.size() <= 3);
    CHECK_FALSE(phi_psi_dim(reg).phi.is_exact());
    CHECK_FALSE(delooping_level(reg, 32).del.is_exact());
  }

  TEST_CASE("capped resolutions give lower bounds") {
    Caps caps;
    caps.resolution = 1;
    auto dd = dominant_dimensions(testalg::sect32_a(kQ), caps);
    CHECK(dd.nu_dd.status == Status::lower_bound);
    CHECK(dd.nu_dd.to_string() == ">=1");
  }

  TEST_CASE("profiles: node annotations and self comparison") {
    InvariantReport a1 = stable_profile(testalg::a1(kQ));
    InvariantReport a1p = stable_profile(testalg::a1_prime(kQ));
    CHECK(a1.nodes.size() == 1);
    CHECK(a1p.nodes.empty());
    CHECK(a1.all_exact());
    Comparison c = compare_profiles(a1, a1p);
    CHECK(c.consistent());
    for (const auto& row : c.rows) {
      if (row.invariant == "nonprojective_simples") {
        CHECK(row.agree);
        CHECK(row.expected);
      }
      if (row.invariant == "del") {
        CHECK_FALSE(row.agree);
        CHECK_FALSE(row.expected);
      }
    }
    Comparison self = compare_profiles(a1, a1);
    for (const auto& row : self.rows) CHECK(row.agree);
  }

  TEST_CASE("report serialisation") {
    InvariantReport r = stable_profile(testalg::sect32_c(kQ));
    auto j = to_json(r);
    CHECK(j["schema"] == 1);
    CHECK(j["dd"]["value"] == 1);
    CHECK(j["nu_dd"]["value"] == 0);
    CHECK(j["frobenius_part"]["dim"] == 0);
    CHECK(j["counts"]["indecomposables"] == 12);
    CHECK(j["registry"] == "closed");
    std::string md = to_markdown(r);
    CHECK(md.find("| nu-dd | 0 | exact |") != std::string::npos);
    auto inf = to_json(Value::exact(Bound::infinite()));
    CHECK(inf["value"] == "inf");
    CHECK(to_json(Value{Bound::at_least(4), Status::lower_bound, {}})["status"] == "lower-bound");
  }

  TEST_CASE("two-cycle profile matches the lower triangular algebra in simple counts") {
    InvariantReport a = stable_profile(testalg::a2(kF101));
    InvariantReport b = stable_profile(lower_triangular_algebra(kF101, 3));
    CHECK(a.nonprojective_simples == 2);
    CHECK(b.nonprojective_simples == 2);
    CHECK(a.nodes == std::vector<std::string>{"1"});
    CHECK(b.nodes.empty());
    CHECK(compare_profiles(a, b).consistent());
  }
}
