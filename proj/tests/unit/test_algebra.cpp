#include "algebras.hpp"
#include "doctest.h"
#include "stabeq/algebra/constructions.hpp"
#include "stabeq/errors.hpp"
#include "stabeq/module/endomorphism.hpp"

using namespace stabeq;

namespace {

const Field kQ = Field::rationals();
const Field kF101 = Field::prime(101);

std::vector<AlgebraPtr> all_fixtures(Field f) {
  return {testalg::a1(f),        testalg::a1_prime(f),       testalg::a2(f),        testalg::linear_a3(f),
          testalg::linear_a3_rad2(f), testalg::closing_a(f), testalg::closing_b(f), testalg::sect32_a(f),
          testalg::sect32_b(f),  testalg::sect32_c(f)};
}

bool idempotents_partition_unit(const Algebra& a) {
  Matrix sum(a.field(), a.dim(), 1);
  for (std::size_t i = 0; i < a.vertex_count(); ++i) {
    sum += a.idempotent(i);
    for (std::size_t j = 0; j < a.vertex_count(); ++j) {
      Matrix p = a.product(a.idempotent(i), a.idempotent(j));
      if (i == j ? p != a.idempotent(i) : !p.is_zero()) return false;
    }
  }
  return sum == a.unit();
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("loop with square zero has basis e, alpha") {
    auto a = testalg::a1(kQ);
    CHECK(a->dim() == 2);
    CHECK(a->labels() == std::vector<std::string>{"e1", "t"});
  }

  TEST_CASE("two-cycle with one zero walk has dimension 5") {
    auto a = testalg::a2(kQ);
    CHECK(a->dim() == 5);
  }

  TEST_CASE("linear A3 path algebra has dimension 6") { CHECK(testalg::linear_a3(kQ)->dim() == 6); }

  TEST_CASE("section fixtures have the displayed projective dimensions") {
    CHECK(testalg::sect32_a(kQ)->dim() == 10);
    CHECK(testalg::sect32_b(kQ)->dim() == 10);
    CHECK(testalg::sect32_c(kQ)->dim() == 12);
  }

  TEST_CASE("non-admissible relations are rejected") {
    Quiver q{{"1"}, {{"x", 0, 0}}};
    CHECK_THROWS_AS(algebra_from_quiver(q, {}, kQ, {8, 1000}), NotNilpotent);
    CHECK_THROWS_AS(algebra_from_quiver(q, {zero_relation(kQ, {"x"})}, kQ), InvalidArgument);
    CHECK_THROWS_AS(algebra_from_quiver(q, {zero_relation(kQ, {"x", "y"})}, kQ), InvalidArgument);
  }

  TEST_CASE("associativity and idempotents on every fixture") {
    for (Field f : {kQ, kF101}) {
      for (const auto& a : all_fixtures(f)) {
        INFO(a->name());
        CHECK(a->is_associative());
        CHECK(idempotents_partition_unit(*a));
      }
    }
  }

  TEST_CASE("opposite is an involution on constants") {
    for (const auto& a : all_fixtures(kQ)) {
      auto op = a->opposite();
      auto back = op->opposite();
      CHECK(back.get() == a.get());
      AlgebraData d = op->data();
      auto fresh = Algebra::create(d)->opposite();
      for (std::size_t i = 0; i < a->dim(); ++i) CHECK(fresh->left(i) == a->left(i));
    }
  }

  TEST_CASE("opposite of a commutative algebra has identical constants") {
    auto a = testalg::truncated_loop(kQ, 3);
    for (std::size_t i = 0; i < a->dim(); ++i) CHECK(a->opposite()->left(i) == a->left(i));
  }

  TEST_CASE("opposite of 1 -> 2 is 2 -> 1") {
    auto a = testalg::bound_quiver(kQ, {"1", "2"}, {{"x", "1", "2"}}, {});
    auto b = testalg::bound_quiver(kQ, {"1", "2"}, {{"x", "2", "1"}}, {});
    auto ga = radical_and_gabriel_quiver(a->opposite());
    auto gb = radical_and_gabriel_quiver(b);
    CHECK(ga.arrow_counts == gb.arrow_counts);
  }

  TEST_CASE("trace form and corner radicals agree over Q") {
    for (const auto& a : all_fixtures(kQ)) {
      Matrix t = radical_trace_form(*a);
      Matrix c = radical_by_corners(*a);
      CHECK(t.cols() == c.cols());
      CHECK(in_span(t, c));
    }
  }

  TEST_CASE("radical dimension is dim minus vertex count over F_101") {
    for (const auto& a : all_fixtures(kF101)) {
      CHECK(a->radical().cols() == a->dim() - a->vertex_count());
    }
  }

  TEST_CASE("Gabriel quivers") {
    auto s = testalg::bound_quiver(kQ, {"1", "2"}, {}, {});
    auto gs = radical_and_gabriel_quiver(s);
    CHECK(gs.radical.cols() == 0);
    CHECK(gs.quiver.arrows.empty());
    CHECK(gs.quiver.vertices.size() == 2);

    auto t3 = testalg::truncated_loop(kQ, 3);
    auto g = radical_and_gabriel_quiver(t3);
    CHECK(g.radical.cols() == 2);
    CHECK(g.arrow_counts == std::vector<std::vector<std::size_t>>{{1}});

    auto a = testalg::sect32_a(kQ);
    auto ga = radical_and_gabriel_quiver(a);
    CHECK(ga.quiver.arrows.size() == 4);
    CHECK(ga.arrow_counts[0][1] == 1);
    CHECK(ga.arrow_counts[3][0] == 1);
  }

  TEST_CASE("lower triangular 3x3 is basic with A3 quiver") {
    auto t = lower_triangular_algebra(kQ, 3);
    CHECK(t->dim() == 6);
    CHECK(t->is_associative());
    auto g = radical_and_gabriel_quiver(t);
    CHECK(g.quiver.arrows.size() == 2);
  }

  TEST_CASE("quotients and annihilators") {
    auto d2 = testalg::truncated_loop(kQ, 2);
    auto rad = radical_ideal(d2);
    CHECK(quotient_algebra(rad)->dim() == 1);
    CHECK(quotient_algebra(zero_ideal(d2))->dim() == 2);
    CHECK(left_annihilator(zero_ideal(d2)).dim() == 2);
    CHECK(left_annihilator(whole_algebra(d2)).dim() == 0);
    // ann_l of (t) in k[t]/t^2 is (t)
    auto ann = left_annihilator(rad);
    CHECK(ann.dim() == 1);
    CHECK(in_span(ann.basis, rad.basis));
  }

  TEST_CASE("trace of the node of A2 and its annihilator") {
    for (Field f : {kQ, kF101}) {
      auto a = testalg::a2(f);
      auto s1 = simple_module(a, 0);
      auto i = trace_ideal(a, s1);
      CHECK(i.dim() == 2);
      CHECK(i.is_two_sided());
      CHECK(product_ideal(i, i).dim() == 0);
      CHECK(product_ideal(radical_ideal(a), i).dim() == 0);
      auto j = left_annihilator(i);
      CHECK(j.dim() == 4);
      CHECK(j.is_two_sided());
      CHECK(in_span(j.basis, a->radical()));
      CHECK(quotient_algebra(j)->dim() == 1);
      CHECK(quotient_algebra(j)->is_semisimple());
      CHECK(quotient_algebra(i)->dim() == 3);
    }
  }

  TEST_CASE("trace ideal edge cases") {
    auto a = testalg::a2(kQ);
    CHECK(trace_ideal(a, Module::zero(a)).dim() == 0);
    auto kk = testalg::bound_quiver(kQ, {"1", "2"}, {}, {});
    auto t = trace_ideal(kk, simple_module(kk, 0));
    CHECK(t.dim() == 1);
    CHECK(in_span(t.basis, kk->idempotent(0)));
  }

  TEST_CASE("centralizer algebras") {
    auto m2 = centralizer_algebra(Matrix::identity(kQ, 2));
    CHECK(m2->dim() == 4);
    CHECK(m2->vertex_count() == 2);
    CHECK_FALSE(m2->structure().basic);

    Matrix j3 = Matrix::from_ints(kQ, 3, 3, {0, 1, 0, 0, 0, 1, 0, 0, 0});
    auto loc = centralizer_algebra(j3);
    CHECK(loc->dim() == 3);
    CHECK(loc->vertex_count() == 1);
    CHECK(radical_and_gabriel_quiver(loc).arrow_counts == std::vector<std::vector<std::size_t>>{{1}});

    auto kk = centralizer_algebra(Matrix::from_ints(kQ, 2, 2, {0, 0, 0, 1}));
    CHECK(kk->dim() == 2);
    CHECK(kk->vertex_count() == 2);
    CHECK(kk->is_semisimple());
  }

  TEST_CASE("centralizer of a rotation over Q does not split") {
    Matrix r = Matrix::from_ints(kQ, 2, 2, {0, -1, 1, 0});
    CHECK_THROWS_AS(centralizer_algebra(r), NonSplitField);
  }
}
