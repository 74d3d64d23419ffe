#include "algebras.hpp"
#include "doctest.h"
#include "stabeq/surgery/isomorphism.hpp"
#include "stabeq/surgery/surgery.hpp"

using namespace stabeq;

namespace {

const Field kQ = Field::rationals();
const Field kF101 = Field::prime(101);

bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (c.verdict != Verdict::pass) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("surgery") {
  TEST_CASE("nodes of the small examples") {
    CHECK(find_nodes(testalg::a1(kQ)).size() == 1);
    auto a2 = find_nodes(testalg::a2(kQ));
    REQUIRE(a2.size() == 1);
    CHECK(a2[0].vertex == 0);
    CHECK(find_nodes(testalg::linear_a3(kQ)).empty());
    CHECK(find_nodes(testalg::linear_a3_rad2(kQ)).size() == 1);
    CHECK(find_nodes(testalg::closing_a(kQ)).empty());
    CHECK(find_nodes(testalg::closing_b(kQ)).empty());
  }

  TEST_CASE("truncated polynomial ring becomes the path algebra of two vertices") {
    for (Field f : {kQ, kF101}) {
      SurgeryResult r = remove_nodes(testalg::a1(f));
      REQUIRE(r.performed);
      CHECK(r.trace.dim() == 1);
      CHECK(r.annihilator.dim() == 1);
      CHECK(r.output->dim() == 3);
      CHECK(r.output->is_associative());
      CHECK(r.output->idempotents_ok());
      CHECK(r.output->vertex_count() == 2);
      CHECK(find_isomorphism(r.output, testalg::a1_prime(f)).has_value());
      CHECK(r.record.node_free);
      CHECK(r.record.nonprojective_simples_before == 1);
      CHECK(r.record.nonprojective_simples_after == 1);
      CHECK(all_pass(verify_surgery(r)));
    }
  }

  TEST_CASE("two-cycle algebra becomes the lower triangular algebra") {
    auto a = testalg::a2(kQ);
    SurgeryResult r = remove_nodes(a);
    REQUIRE(r.performed);
    CHECK(r.trace.dim() == 2);
    CHECK(r.trace.is_two_sided());
    CHECK(r.annihilator.dim() == 4);
    CHECK(r.output->dim() == 6);
    CHECK(r.output->is_associative());
    CHECK(r.output->vertex_count() == 3);
    auto phi = find_isomorphism(r.output, lower_triangular_algebra(kQ, 3));
    REQUIRE(phi.has_value());
    CHECK(is_algebra_isomorphism(r.output, lower_triangular_algebra(kQ, 3), *phi));
    CHECK(all_pass(verify_surgery(r)));
  }

  TEST_CASE("node-free input is returned unchanged") {
    auto a = testalg::closing_a(kQ);
    SurgeryResult r = remove_nodes(a);
    CHECK_FALSE(r.performed);
    CHECK(r.output == a);
    CHECK(all_pass(verify_surgery(r)));
  }

  TEST_CASE("radical-square-zero quotient of the linear quiver") {
    SurgeryResult r = remove_nodes(testalg::linear_a3_rad2(kQ));
    REQUIRE(r.performed);
    CHECK(r.output->dim() == r.input->dim() - r.trace.dim() + r.trace.dim() + r.input->dim() - r.annihilator.dim());
    CHECK(r.output->is_associative());
    CHECK(all_pass(verify_surgery(r)));
  }

  TEST_CASE("algebra isomorphism search") {
    auto t3 = lower_triangular_algebra(kQ, 3);
    auto a3 = testalg::linear_a3(kQ);
    CHECK(find_isomorphism(t3, a3).has_value());
    CHECK_FALSE(find_isomorphism(t3, testalg::linear_a3_rad2(kQ)).has_value());
    CHECK_FALSE(find_isomorphism(testalg::a1(kQ), testalg::truncated_loop(kQ, 3)).has_value());
    auto phi = find_isomorphism(testalg::closing_a(kQ), testalg::closing_a(kQ));
    REQUIRE(phi.has_value());
    CHECK(is_algebra_isomorphism(testalg::closing_a(kQ), testalg::closing_a(kQ), *phi));
    CHECK_FALSE(is_algebra_isomorphism(t3, a3, Matrix::identity(kQ, 6)));
  }

  TEST_CASE("surgery report serialisation") {
    SurgeryResult r = remove_nodes(testalg::a2(kQ));
    auto checks = verify_surgery(r);
    auto j = to_json(r, checks);
    CHECK(j["schema"] == 1);
    CHECK(j["output"]["dim"] == 6);
    CHECK(j["nodes"].size() == 1);
    CHECK(to_markdown(r, checks).find("dim A' = 6") != std::string::npos);
  }
}
